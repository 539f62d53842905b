#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "pcv/bignat.hpp"
#include "pcv/intmath.hpp"

namespace pcv {

// Euler phi and divisor-sum sigma over 1..upto from one linear sieve.
// phi(1) = sigma(1) = 1; immutable after build.
class SmallMultiplicativeTable {
 public:
  static SmallMultiplicativeTable build(u64 upto);
  u64 upto() const { return upto_; }
  u64 phi(u64 n) const;
  u64 sigma(u64 n) const;

 private:
  u64 upto_ = 0;
  std::vector<u64> phi_;
  std::vector<u64> sigma_;
};

// phi/sigma for arbitrary 64-bit n by factorization (used past the table).
u64 euler_phi_u64(u64 n);
u64 divisor_sigma_u64(u64 n);  // throws on 64-bit overflow

enum class Shape { Square, Triangular, Cube };

// Integer-only detection: integer roots with verification; triangular via
// the 8n+1 perfect-square test.
bool shape_test(u64 n, Shape shape);

BigNat big_binomial(u64 a, u64 b);  // requires b <= a
BigNat big_factorial(u64 k);
BigNat big_pow2(u64 k);

// Compares a^(1/ea) with b^(1/eb) exactly by comparing the integer powers
// a^eb and b^ea. No floating point. Exponents must be >= 1.
std::strong_ordering power_compare(u64 a, u64 ea, u64 b, u64 eb);

// Exact integer form of k < 3*sqrt(n) + add:
// true iff k <= add or (k - add)^2 < 9n.
bool below_3sqrt_bound(u64 k, u64 n, u64 add);

// Padded Rosser-type upper bound for the n-th prime, used when sizing
// sieves ahead of a run.
u64 nth_prime_upper_bound(u64 n);

// Real-valued search bounds evaluated with a widening guard: long double
// first, then MPFR at doubling precision with directed rounding. A tie that
// survives 1024 bits is resolved by admitting the candidate.
enum class RealBound {
  Sqrt2nLog5n,  // candidate < sqrt(2n) * log(5n)
  SqrtNLogN,    // candidate < sqrt(n) * log(n)
};
struct BoundCheck {
  bool below;
  bool tie_admitted;  // candidate admitted only by the tie rule
};
BoundCheck below_real_bound(u64 candidate, RealBound kind, u64 n);

}  // namespace pcv
