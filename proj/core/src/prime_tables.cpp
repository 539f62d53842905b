#include "pcv/prime_tables.hpp"

#include <bit>
#include <new>
#include <string>

#include "pcv/errors.hpp"
#include "pcv/primality.hpp"

namespace pcv {

namespace {

constexpr u64 kBlockInts = u64{1} << PrimeTables::kBlockBits;

// Global bit index of odd value v (v >= 3, odd).
inline u64 bit_of(u64 v) { return (v - 3) >> 1; }
inline u64 value_of(u64 bit) { return 3 + 2 * bit; }

inline u64 mask_from(unsigned b) { return ~u64{0} << b; }
inline u64 mask_upto(unsigned b) { return ~u64{0} >> (63 - b); }

}  // namespace

struct PrimeTables::LazyState {
  std::once_flag primes_once;
  std::vector<u64> prime_list;

  std::once_flag twin_once;
  std::vector<u64> twin_blocks;

  std::once_flag r3_once;
  std::vector<u64> r3_blocks;

  std::once_flag sg_once;
  std::vector<u64> sg_blocks;

  std::once_flag sqf_once;
  std::vector<u64> sqf_words;   // bit j <-> integer j+1, set = has square factor
  std::vector<u64> sqf_blocks;  // squarefree count at end of each block
};

PrimeTables::PrimeTables(PrimeTables&&) noexcept = default;
PrimeTables& PrimeTables::operator=(PrimeTables&&) noexcept = default;
PrimeTables::~PrimeTables() = default;

PrimeTables PrimeTables::build(u64 limit) {
  if (limit < 2) throw UsageError("prime table limit must be at least 2");
  PrimeTables t;
  t.limit_ = limit;
  t.odd_bits_ = limit >= 3 ? (limit - 3) / 2 + 1 : 0;
  const u64 words = (t.odd_bits_ + 63) / 64;
  try {
    t.words_.assign(words, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate sieve bitmap for limit " +
                        std::to_string(limit));
  }

  // Base odd primes up to sqrt(limit) by a plain sieve.
  const u64 root = isqrt_u64(limit);
  std::vector<u64> base;
  {
    std::vector<char> comp(root + 1, 0);
    for (u64 i = 3; i * i <= root; i += 2) {
      if (!comp[i])
        for (u64 j = i * i; j <= root; j += 2 * i) comp[j] = 1;
    }
    for (u64 i = 3; i <= root; i += 2)
      if (!comp[i]) base.push_back(i);
  }

  // Mark odd composites segment by segment.
  constexpr u64 kSegBits = u64{1} << 20;
  for (u64 seg_lo = 0; seg_lo < t.odd_bits_; seg_lo += kSegBits) {
    const u64 seg_hi = std::min(seg_lo + kSegBits, t.odd_bits_) - 1;
    const u64 v_hi = value_of(seg_hi);
    for (u64 p : base) {
      u64 start = p * p;
      if (start > v_hi) break;
      const u64 v_lo = value_of(seg_lo);
      if (start < v_lo) {
        u64 q = (v_lo + p - 1) / p;
        if ((q & 1) == 0) ++q;  // odd multiples only
        start = q * p;
      }
      for (u64 m = start; m <= v_hi; m += 2 * p)
        t.words_[bit_of(m) >> 6] |= u64{1} << (bit_of(m) & 63);
    }
  }

  // Padding bits past the last odd value count as composite.
  if (t.odd_bits_ % 64 != 0 && !t.words_.empty())
    t.words_.back() |= mask_from(static_cast<unsigned>(t.odd_bits_ % 64));

  // Cumulative pi at block ends.
  const u64 blocks = (limit >> kBlockBits) + 1;
  t.block_pi_.resize(blocks);
  u64 running = 1;  // the prime 2
  for (u64 b = 0; b < blocks; ++b) {
    const u64 end = std::min(((b + 1) << kBlockBits) - 1, limit);
    if (end >= 3) {
      const u64 lo_v = b == 0 ? 3 : (b << kBlockBits) + 1;
      running += t.count_primes_in(lo_v, end);
    }
    t.block_pi_[b] = running;
  }

  t.lazy_ = std::make_unique<LazyState>();
  return t;
}

PrimeTables PrimeTables::adopt(u64 limit, std::vector<u64> composite_words,
                               std::vector<u64> block_counts) {
  PrimeTables t;
  t.limit_ = limit;
  t.odd_bits_ = limit >= 3 ? (limit - 3) / 2 + 1 : 0;
  t.words_ = std::move(composite_words);
  t.block_pi_ = std::move(block_counts);
  if (t.odd_bits_ % 64 != 0 && !t.words_.empty())
    t.words_.back() |= mask_from(static_cast<unsigned>(t.odd_bits_ % 64));
  t.lazy_ = std::make_unique<LazyState>();
  return t;
}

void PrimeTables::require_range(u64 x, const char* op) const {
  if (x > limit_)
    throw KernelLimitError(std::string(op) + "(" + std::to_string(x) +
                               ") exceeds table limit " + std::to_string(limit_),
                           x);
}

// Primes among the odd integers of [lo, hi] (callers pass lo >= 3).
u64 PrimeTables::count_primes_in(u64 lo, u64 hi) const {
  if (hi < 3 || hi < lo) return 0;
  if (lo < 3) lo = 3;
  lo |= 1;
  if ((hi & 1) == 0) --hi;
  if (hi < lo) return 0;
  u64 a = bit_of(lo), b = bit_of(hi);
  u64 wa = a >> 6, wb = b >> 6;
  u64 count = 0;
  if (wa == wb) {
    u64 m = mask_from(a & 63) & mask_upto(b & 63);
    return static_cast<u64>(std::popcount(~words_[wa] & m));
  }
  count += static_cast<u64>(std::popcount(~words_[wa] & mask_from(a & 63)));
  for (u64 w = wa + 1; w < wb; ++w)
    count += static_cast<u64>(std::popcount(~words_[w]));
  count += static_cast<u64>(std::popcount(~words_[wb] & mask_upto(b & 63)));
  return count;
}

u64 PrimeTables::prime_count(u64 x) const {
  require_range(x, "prime_count");
  if (x < 2) return 0;
  const u64 b = x >> kBlockBits;
  u64 count = b > 0 ? block_pi_[b - 1] : 0;
  if (b == 0) ++count;  // the prime 2
  const u64 lo = b == 0 ? 3 : (b << kBlockBits) + 1;
  count += count_primes_in(lo, x);
  return count;
}

bool PrimeTables::is_prime(u64 x) const {
  require_range(x, "is_prime");
  if (x < 2) return false;
  if (x == 2) return true;
  if ((x & 1) == 0) return false;
  return odd_bit_is_prime(bit_of(x));
}

bool PrimeTables::is_prime_u64(u64 n) const {
  if (n <= limit_) return is_prime(n);
  return pcv::is_prime_u64(n);
}

u64 PrimeTables::next_prime_after(u64 x) const {
  if (x < 2) return 2;
  if (x == 2) return 3;
  u64 v = (x + 1) | 1;
  if (v <= limit_) {
    u64 i = bit_of(v);
    u64 w = i >> 6;
    u64 cur = ~words_[w] & mask_from(static_cast<unsigned>(i & 63));
    while (true) {
      if (cur != 0) {
        u64 bit = static_cast<u64>(std::countr_zero(cur)) + (w << 6);
        return value_of(bit);  // padding is composite, so bit < odd_bits_
      }
      if (++w >= words_.size()) break;
      cur = ~words_[w];
    }
  }
  throw KernelLimitError("no prime after " + std::to_string(x) +
                             " within table limit " + std::to_string(limit_),
                         x + 1);
}

void PrimeTables::ensure_prime_list() const {
  std::call_once(lazy_->primes_once, [this] {
    auto& list = lazy_->prime_list;
    list.reserve(block_pi_.back());
    list.push_back(2);
    for (u64 w = 0; w < words_.size(); ++w) {
      u64 cur = ~words_[w];
      while (cur != 0) {
        u64 bit = static_cast<u64>(std::countr_zero(cur));
        list.push_back(value_of((w << 6) + bit));
        cur &= cur - 1;
      }
    }
  });
}

u64 PrimeTables::nth_prime(u64 n) const {
  if (n == 0) throw UsageError("nth_prime index starts at 1");
  ensure_prime_list();
  const auto& list = lazy_->prime_list;
  if (n > list.size())
    throw KernelLimitError("nth_prime(" + std::to_string(n) +
                               ") beyond table capacity; largest servable "
                               "index is " +
                               std::to_string(list.size()),
                           n);
  return list[n - 1];
}

// Twin upper members: odd v with bits i and i-1 both prime. Counted with the
// word trick pm & (pm << 1), carrying bit 63 across word boundaries.
u64 PrimeTables::count_twins_upper_in(u64 lo, u64 hi) const {
  if (hi < 5 || hi < lo) return 0;
  if (lo < 5) lo = 5;
  lo |= 1;
  if ((hi & 1) == 0) --hi;
  if (hi < lo) return 0;
  u64 a = bit_of(lo), b = bit_of(hi);
  u64 count = 0;
  for (u64 w = a >> 6; w <= (b >> 6); ++w) {
    u64 pm = ~words_[w];
    u64 carry = w > 0 ? (~words_[w - 1] >> 63) : 0;
    u64 pairs = pm & ((pm << 1) | carry);
    u64 m = ~u64{0};
    if (w == (a >> 6)) m &= mask_from(a & 63);
    if (w == (b >> 6)) m &= mask_upto(b & 63);
    count += static_cast<u64>(std::popcount(pairs & m));
  }
  return count;
}

void PrimeTables::ensure_twin_blocks() const {
  std::call_once(lazy_->twin_once, [this] {
    auto& tb = lazy_->twin_blocks;
    tb.resize(block_pi_.size());
    u64 running = 0;
    for (u64 b = 0; b < tb.size(); ++b) {
      const u64 end = std::min(((b + 1) << kBlockBits) - 1, limit_);
      const u64 lo = b == 0 ? 5 : (b << kBlockBits) + 1;
      if (end >= lo) running += count_twins_upper_in(lo, end);
      tb[b] = running;
    }
  });
}

u64 PrimeTables::twin_pair_count_upper(u64 x) const {
  require_range(x, "twin_pair_count_upper");
  if (x < 5) return 0;
  ensure_twin_blocks();
  const u64 b = x >> kBlockBits;
  u64 count = b > 0 ? lazy_->twin_blocks[b - 1] : 0;
  const u64 lo = b == 0 ? 5 : (b << kBlockBits) + 1;
  count += count_twins_upper_in(lo, x);
  return count;
}

u64 PrimeTables::twin_pair_count_lower(u64 x) const {
  if (x + 2 > limit_)
    throw KernelLimitError(
        "twin_pair_count_lower(" + std::to_string(x) +
            ") needs table limit " + std::to_string(x + 2),
        x + 2);
  // Lower members q <= x are exactly upper members q + 2 <= x + 2.
  return twin_pair_count_upper(x + 2);
}

void PrimeTables::ensure_sg_blocks() const {
  std::call_once(lazy_->sg_once, [this] {
    const u64 sg_max = limit_ >= 1 ? (limit_ - 1) / 2 : 0;
    auto& sb = lazy_->sg_blocks;
    sb.resize((sg_max >> kBlockBits) + 1);
    u64 running = 0;
    for (u64 b = 0; b < sb.size(); ++b) {
      const u64 end = std::min(((b + 1) << kBlockBits) - 1, sg_max);
      u64 lo = b == 0 ? 2 : (b << kBlockBits) + 1;
      if (b == 0 && end >= 2 && limit_ >= 5 && is_prime(5)) ++running;  // p = 2
      lo = std::max<u64>(lo, 3) | 1;
      for (u64 v = lo; v <= end; v += 2)
        if (odd_bit_is_prime(bit_of(v)) && is_prime(2 * v + 1)) ++running;
      sb[b] = running;
    }
  });
}

u64 PrimeTables::sophie_germain_count(u64 x) const {
  if (2 * x + 1 > limit_)
    throw KernelLimitError(
        "sophie_germain_count(" + std::to_string(x) + ") needs table limit " +
            std::to_string(2 * x + 1),
        2 * x + 1);
  if (x < 2) return 0;
  ensure_sg_blocks();
  const u64 b = x >> kBlockBits;
  u64 count = b > 0 ? lazy_->sg_blocks[b - 1] : 0;
  u64 lo = b == 0 ? 2 : (b << kBlockBits) + 1;
  if (b == 0 && x >= 2 && is_prime(5)) ++count;  // p = 2
  lo = std::max<u64>(lo, 3) | 1;
  for (u64 v = lo; v <= x; v += 2)
    if (odd_bit_is_prime(bit_of(v)) && is_prime(2 * v + 1)) ++count;
  return count;
}

// Primes == 3 (mod 4) are exactly the odd values at even bit indexes.
u64 PrimeTables::count_r3_in(u64 lo, u64 hi) const {
  if (hi < 3 || hi < lo) return 0;
  if (lo < 3) lo = 3;
  lo |= 1;
  if ((hi & 1) == 0) --hi;
  if (hi < lo) return 0;
  constexpr u64 kEven = 0x5555555555555555ull;
  u64 a = bit_of(lo), b = bit_of(hi);
  u64 count = 0;
  for (u64 w = a >> 6; w <= (b >> 6); ++w) {
    u64 m = kEven;
    if (w == (a >> 6)) m &= mask_from(a & 63);
    if (w == (b >> 6)) m &= mask_upto(b & 63);
    count += static_cast<u64>(std::popcount(~words_[w] & m));
  }
  return count;
}

void PrimeTables::ensure_r3_blocks() const {
  std::call_once(lazy_->r3_once, [this] {
    auto& rb = lazy_->r3_blocks;
    rb.resize(block_pi_.size());
    u64 running = 0;
    for (u64 b = 0; b < rb.size(); ++b) {
      const u64 end = std::min(((b + 1) << kBlockBits) - 1, limit_);
      const u64 lo = b == 0 ? 3 : (b << kBlockBits) + 1;
      if (end >= lo) running += count_r3_in(lo, end);
      rb[b] = running;
    }
  });
}

u64 PrimeTables::count_r3_upto(u64 x) const {
  if (x < 3) return 0;
  ensure_r3_blocks();
  const u64 b = x >> kBlockBits;
  u64 count = b > 0 ? lazy_->r3_blocks[b - 1] : 0;
  const u64 lo = b == 0 ? 3 : (b << kBlockBits) + 1;
  count += count_r3_in(lo, x);
  return count;
}

void PrimeTables::ensure_squarefree() const {
  std::call_once(lazy_->sqf_once, [this] {
    auto& sw = lazy_->sqf_words;
    const u64 bits = limit_;  // bit j <-> integer j + 1
    try {
      sw.assign((bits + 63) / 64, 0);
    } catch (const std::bad_alloc&) {
      throw ResourceError("cannot allocate squarefree bitmap for limit " +
                          std::to_string(limit_));
    }
    auto mark = [&](u64 m) { sw[(m - 1) >> 6] |= u64{1} << ((m - 1) & 63); };
    for (u64 m = 4; m <= limit_; m += 4) mark(m);
    for (u64 p = 3; p * p <= limit_; p = next_prime_after(p)) {
      const u64 pp = p * p;
      for (u64 m = pp; m <= limit_; m += pp) mark(m);
    }
    if (bits % 64 != 0 && !sw.empty())
      sw.back() |= mask_from(static_cast<unsigned>(bits % 64));

    auto& sb = lazy_->sqf_blocks;
    sb.resize(block_pi_.size());
    u64 running = 0;
    for (u64 b = 0; b < sb.size(); ++b) {
      const u64 end = std::min(((b + 1) << kBlockBits) - 1, limit_);
      const u64 lo = b == 0 ? 1 : (b << kBlockBits);
      for (u64 w = (lo - 1) >> 6; w <= (end - 1) >> 6; ++w) {
        u64 m = ~u64{0};
        if (w == (lo - 1) >> 6) m &= mask_from((lo - 1) & 63);
        if (w == (end - 1) >> 6) m &= mask_upto((end - 1) & 63);
        running += static_cast<u64>(std::popcount(~sw[w] & m));
      }
      sb[b] = running;
    }
  });
}

u64 PrimeTables::squarefree_count(u64 x) const {
  require_range(x, "squarefree_count");
  if (x == 0) return 0;
  ensure_squarefree();
  const u64 b = x >> kBlockBits;
  u64 count = b > 0 ? lazy_->sqf_blocks[b - 1] : 0;
  const u64 lo = b == 0 ? 1 : (b << kBlockBits);
  const auto& sw = lazy_->sqf_words;
  for (u64 w = (lo - 1) >> 6; w <= (x - 1) >> 6; ++w) {
    u64 m = ~u64{0};
    if (w == (lo - 1) >> 6) m &= mask_from((lo - 1) & 63);
    if (w == (x - 1) >> 6) m &= mask_upto((x - 1) & 63);
    count += static_cast<u64>(std::popcount(~sw[w] & m));
  }
  return count;
}

u64 PrimeTables::gaussian_ideal_count(u64 x) const {
  require_range(x, "gaussian_ideal_count");
  if (x < 2) return 0;
  // Boundary test p <= sqrt(x) evaluated as p*p <= x via integer sqrt.
  const u64 root = isqrt_u64(x);
  const u64 below = prime_count(root);
  const u64 above = prime_count(x) - below;
  const u64 above_r3 = count_r3_upto(x) - count_r3_upto(root);
  return below + (above - above_r3);
}

}  // namespace pcv
