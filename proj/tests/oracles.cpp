#include "oracles.hpp"

#include <gmp.h>

#include <algorithm>
#include <stdexcept>

namespace oracle {

NaiveKit::NaiveKit(u64 limit) : limit_(limit), isp_(limit + 1, true) {
  isp_[0] = false;
  if (limit >= 1) isp_[1] = false;
  for (u64 i = 2; i * i <= limit; ++i)
    if (isp_[i])
      for (u64 j = i * i; j <= limit; j += i) isp_[j] = false;
  for (u64 i = 2; i <= limit; ++i)
    if (isp_[i]) primes_.push_back(static_cast<std::uint32_t>(i));
}

bool NaiveKit::prime(u64 v) const {
  if (v <= limit_) return isp_[v];
  return prime_big(pcv::big_from_u64(v));
}

bool NaiveKit::prime_big(const BigNat& v) const {
  if (v < 2) return false;
  return mpz_probab_prime_p(v.get_mpz_t(), 32) != 0;
}

u64 NaiveKit::pi(u64 x) const {
  if (x > limit_) throw std::out_of_range("oracle pi beyond sieve");
  return static_cast<u64>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

u64 NaiveKit::nth(u64 i) const {
  if (i == 0 || i > primes_.size())
    throw std::out_of_range("oracle nth beyond sieve");
  return primes_[i - 1];
}

u64 NaiveKit::next_prime(u64 x) const {
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  if (it == primes_.end()) throw std::out_of_range("oracle next_prime beyond sieve");
  return *it;
}

u64 NaiveKit::twin_upper(u64 x) const {
  if (x > limit_) throw std::out_of_range("oracle twin beyond sieve");
  u64 count = 0;
  for (u64 p = 5; p <= x; ++p)
    if (isp_[p] && isp_[p - 2]) ++count;
  return count;
}

u64 NaiveKit::twin_lower(u64 x) const {
  if (x + 2 > limit_) throw std::out_of_range("oracle twin beyond sieve");
  u64 count = 0;
  for (u64 q = 2; q <= x; ++q)
    if (isp_[q] && isp_[q + 2]) ++count;
  return count;
}

u64 NaiveKit::sophie_germain(u64 x) const {
  if (2 * x + 1 > limit_) throw std::out_of_range("oracle sg beyond sieve");
  u64 count = 0;
  for (u64 p = 2; p <= x; ++p)
    if (isp_[p] && isp_[2 * p + 1]) ++count;
  return count;
}

u64 NaiveKit::squarefree_count(u64 x) const {
  u64 count = 0;
  for (u64 m = 1; m <= x; ++m) {
    bool squarefree = true;
    for (u64 d = 2; d * d <= m; ++d)
      if (m % (d * d) == 0) {
        squarefree = false;
        break;
      }
    if (squarefree) ++count;
  }
  return count;
}

u64 NaiveKit::gauss(u64 x) const {
  if (x > limit_) throw std::out_of_range("oracle gauss beyond sieve");
  // |{p <= sqrt(x), p == 3 (mod 4)}| + |{p <= x, p != 3 (mod 4)}|
  u64 count = 0;
  for (u64 p = 2; p * p <= x; ++p)
    if (isp_[p] && p % 4 == 3) ++count;
  for (u64 p = 2; p <= x; ++p)
    if (isp_[p] && p % 4 != 3) ++count;
  return count;
}

u64 NaiveKit::phi(u64 n) const {
  u64 r = n, m = n;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      r -= r / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

u64 NaiveKit::sigma(u64 n) const {
  u64 s = 0;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      s += d;
      if (d != n / d) s += n / d;
    }
  }
  return s;
}

bool NaiveKit::prim_root(u64 g, u64 p) const {
  g %= p;
  if (g == 0) return false;
  if (p == 2) return true;
  u64 v = g % p;
  u64 order = 1;
  while (v != 1) {
    v = static_cast<u64>(static_cast<u128>(v) * g % p);
    ++order;
    if (order > p) return false;  // defends against non-prime p
  }
  return order == p - 1;
}

u64 NaiveKit::inverse_brute(u64 a, u64 m) const {
  a %= m;
  for (u64 x = 1; x < m; ++x)
    if (static_cast<u128>(a) * x % m == 1) return x;
  return 0;
}

void NaiveKit::build_partitions(u64 upto) {
  pdp_.assign(upto + 1, BigNat(0));
  pdp_[0] = 1;
  for (u64 part = 1; part <= upto; ++part)
    for (u64 s = part; s <= upto; ++s) pdp_[s] += pdp_[s - part];

  qdp_.assign(upto + 1, BigNat(0));
  qdp_[0] = 1;
  for (u64 part = 1; part <= upto; part += 2)  // odd parts = distinct parts
    for (u64 s = part; s <= upto; ++s) qdp_[s] += qdp_[s - part];
}

namespace {

u64 count_rec(u64 n, u64 maxpart) {
  if (n == 0) return 1;
  u64 total = 0;
  for (u64 p = std::min(n, maxpart); p >= 1; --p) total += count_rec(n - p, p);
  return total;
}

u64 count_rec_distinct(u64 n, u64 maxpart) {
  if (n == 0) return 1;
  u64 total = 0;
  for (u64 p = std::min(n, maxpart); p >= 1; --p)
    total += count_rec_distinct(n - p, p - 1);
  return total;
}

}  // namespace

u64 NaiveKit::enumerate_partitions(u64 n) { return count_rec(n, n == 0 ? 1 : n); }

u64 NaiveKit::enumerate_distinct_partitions(u64 n) {
  return count_rec_distinct(n, n == 0 ? 1 : n);
}

}  // namespace oracle
