#pragma once

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcv/intmath.hpp"

namespace pcv {

// Complete factorization of a 64-bit value: (prime, exponent) pairs in
// ascending prime order; the product reconstructs the input.
struct FactorMultiset {
  std::vector<std::pair<u64, std::uint32_t>> factors;
  u64 value() const;
};

// base^exponent mod modulus, overflow-safe. Rejects modulus < 2.
u64 mod_pow(u64 base, u64 exponent, u64 modulus);

// The unique x in [1, m-1] with a*x == 1 (mod m). Rejects gcd(a, m) != 1,
// naming the offending gcd.
u64 mod_inverse(u64 a, u64 m);

// Trial division (bounded at 10^6) followed by rho-style splitting, every
// cofactor confirmed prime. Terminates for all 64-bit inputs >= 2.
FactorMultiset factorize(u64 n);

// True iff g (reduced mod p; a reduction to 0 is false) generates the full
// multiplicative group mod the prime p. Rejects composite p.
bool is_primitive_root(u64 g, u64 p);

// As above but with the factorization of p - 1 supplied by the caller.
bool is_primitive_root(u64 g, u64 p, const FactorMultiset& p_minus_1);

// Concurrent factorization cache. Keys repeat heavily across a verification
// range (consecutive n share p_n - 1), so hits dominate.
class FactorCache {
 public:
  const FactorMultiset& get(u64 n);

 private:
  std::shared_mutex mu_;
  std::unordered_map<u64, FactorMultiset> map_;
};

}  // namespace pcv
