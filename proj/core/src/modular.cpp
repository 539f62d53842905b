#include "pcv/modular.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "pcv/errors.hpp"
#include "pcv/primality.hpp"

namespace pcv {

u64 FactorMultiset::value() const {
  u64 v = 1;
  for (auto [p, e] : factors)
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
  return v;
}

u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
  if (modulus < 2) throw UsageError("mod_pow requires modulus >= 2");
  return powmod_u64(base, exponent, modulus);
}

u64 mod_inverse(u64 a, u64 m) {
  if (m < 2) throw UsageError("mod_inverse requires modulus >= 2");
  a %= m;
  // Extended gcd on (a, m); old_s tracks the Bezout coefficient of a.
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw UsageError("mod_inverse of non-coprime inputs (gcd = " +
                     std::to_string(old_r) + ")");
  std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<u64>(inv);
}

namespace {

// Pollard-Brent with a deterministic ladder of offsets.
u64 pollard_brent(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 0;
    auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = f(y);
      ++lam;
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with next c
      d = gcd_u64(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(u64 n, std::vector<std::pair<u64, std::uint32_t>>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.emplace_back(n, 1);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

FactorMultiset factorize(u64 n) {
  if (n < 2) throw UsageError("factorize requires n >= 2");
  FactorMultiset result;
  auto& fs = result.factors;

  auto strip = [&](u64 p) {
    if (n % p != 0) return;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fs.emplace_back(p, e);
  };

  strip(2);
  strip(3);
  // Trial division by 6k +- 1 up to min(10^6, sqrt(n)).
  for (u64 d = 5; d <= 1000000 && d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) {
    if (is_prime_u64(n)) {
      fs.emplace_back(n, 1);
    } else {
      std::vector<std::pair<u64, std::uint32_t>> rest;
      factor_into(n, rest);
      std::sort(rest.begin(), rest.end());
      for (auto [p, e] : rest) {
        if (!fs.empty() && fs.back().first == p)
          fs.back().second += e;
        else
          fs.emplace_back(p, e);
      }
    }
  }
  std::sort(fs.begin(), fs.end());
  return result;
}

bool is_primitive_root(u64 g, u64 p, const FactorMultiset& p_minus_1) {
  g %= p;
  if (g == 0) return false;
  if (p == 2) return true;  // g == 1 generates the trivial group
  for (auto [r, e] : p_minus_1.factors) {
    (void)e;
    if (powmod_u64(g, (p - 1) / r, p) == 1) return false;
  }
  return true;
}

bool is_primitive_root(u64 g, u64 p) {
  if (!is_prime_u64(p))
    throw UsageError("is_primitive_root requires a prime modulus, got " +
                     std::to_string(p));
  if (p == 2) return g % 2 == 1;
  return is_primitive_root(g, p, factorize(p - 1));
}

const FactorMultiset& FactorCache::get(u64 n) {
  {
    std::shared_lock lock(mu_);
    auto it = map_.find(n);
    if (it != map_.end()) return it->second;
  }
  FactorMultiset f = factorize(n);
  std::unique_lock lock(mu_);
  // Concurrent first inserts compute identical values, so either wins.
  auto [it, inserted] = map_.emplace(n, std::move(f));
  (void)inserted;
  return it->second;
}

}  // namespace pcv
