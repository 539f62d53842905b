#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "pcv/intmath.hpp"

namespace pcv {

// Immutable sieve-backed index over [0, limit] answering the prime-counting
// function, the n-th prime, primality, and the auxiliary counting functions
// (twin pairs under both conventions, Sophie Germain primes, squarefree
// integers, Gaussian prime ideals).
//
// Storage is one bit per odd integer: bit i stands for 3 + 2i, a set bit
// means composite. Words are interpreted LSB-first, which on a little-endian
// host is byte-for-byte the cache file layout. Cumulative prime counts are
// kept at 2^16-integer block boundaries, so a point query scans at most one
// block of the bitmap.
//
// The object is safe for unlimited concurrent readers. Lazy sub-indexes
// (prime list, twin/Sophie-Germain/residue/squarefree block counts) are
// materialized once under std::call_once on first use.
class PrimeTables {
 public:
  static constexpr unsigned kBlockBits = 16;  // integers per block = 2^16

  PrimeTables(PrimeTables&&) noexcept;
  PrimeTables& operator=(PrimeTables&&) noexcept;
  ~PrimeTables();

  // Sieves [2, limit]. Deterministic; throws ResourceError if the bitmap
  // cannot be allocated.
  static PrimeTables build(u64 limit);

  // Reconstructs tables from raw parts (cache loader path).
  static PrimeTables adopt(u64 limit, std::vector<u64> composite_words,
                           std::vector<u64> block_counts);

  u64 limit() const { return limit_; }

  // pi(x) with pi(0) = 0. Requires x <= limit.
  u64 prime_count(u64 x) const;

  // The n-th prime (1-based). Materializes the prime list on first use.
  u64 nth_prime(u64 n) const;

  // Largest n servable by nth_prime, i.e. pi(limit).
  u64 max_prime_index() const { return block_pi_.back(); }

  // Exact table primality for x <= limit.
  bool is_prime(u64 x) const;

  // Table lookup when n <= limit, deterministic strong-pseudoprime test
  // otherwise. Exact for all 64-bit n.
  bool is_prime_u64(u64 n) const;

  // Least prime strictly greater than x; throws KernelLimitError past limit.
  u64 next_prime_after(u64 x) const;

  // pi_2(x): twin pairs counted by upper member p <= x (p, p-2 both prime).
  u64 twin_pair_count_upper(u64 x) const;

  // Twin pairs counted by lower member q <= x. Requires x + 2 <= limit.
  u64 twin_pair_count_lower(u64 x) const;

  // |{p <= x : p prime, 2p+1 prime}|. Requires 2x + 1 <= limit.
  u64 sophie_germain_count(u64 x) const;

  // |{1 <= m <= x : m squarefree}|, served from a lazily sieved index.
  u64 squarefree_count(u64 x) const;

  // Prime ideals of Z[i] with norm <= x, as the count
  // |{p : p^2 <= x}| + |{sqrt(x) < p <= x : p not == 3 (mod 4)}|.
  u64 gaussian_ideal_count(u64 x) const;

  // Raw access for the cache serializer.
  const std::vector<u64>& composite_words() const { return words_; }
  const std::vector<u64>& block_counts() const { return block_pi_; }
  u64 odd_bit_count() const { return odd_bits_; }

 private:
  PrimeTables() = default;

  bool odd_bit_is_prime(u64 i) const {
    return ((words_[i >> 6] >> (i & 63)) & 1) == 0;
  }
  u64 count_primes_in(u64 lo, u64 hi) const;  // odd values in [lo, hi]
  u64 count_twins_upper_in(u64 lo, u64 hi) const;
  u64 count_r3_in(u64 lo, u64 hi) const;  // primes == 3 (mod 4)
  u64 count_r3_upto(u64 x) const;
  void require_range(u64 x, const char* op) const;

  void ensure_prime_list() const;
  void ensure_twin_blocks() const;
  void ensure_r3_blocks() const;
  void ensure_sg_blocks() const;
  void ensure_squarefree() const;

  u64 limit_ = 0;
  u64 odd_bits_ = 0;
  std::vector<u64> words_;     // odd-composite bitmap, padding bits set
  std::vector<u64> block_pi_;  // pi at the end of each block

  struct LazyState;
  std::unique_ptr<LazyState> lazy_;
};

}  // namespace pcv
