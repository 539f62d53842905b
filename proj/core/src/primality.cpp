#include "pcv/primality.hpp"

#include <array>

#include "pcv/intmath.hpp"

namespace pcv {

namespace {

constexpr std::array<u64, 12> kSmallPrimes = {2,  3,  5,  7,  11, 13,
                                              17, 19, 23, 29, 31, 37};

// Witness set covering all n < 2^64 (Sinclair's seven-base set).
constexpr std::array<u64, 7> kWitnesses = {2,      325,     9375,      28178,
                                           450775, 9780504, 1795265022};

bool strong_probable_prime_u64(u64 n, u64 base) {
  base %= n;
  if (base == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod_u64(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice:
// first D in 5, -7, 9, -11, ... with (D|n) = -1, P = 1, Q = (1 - D)/4.
bool strong_lucas_probable_prime(const BigNat& n) {
  // A perfect square admits no D with (D|n) = -1; the search would not halt.
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  long d_abs = 5;
  int sign = 1;
  BigNat d;
  while (true) {
    d = sign > 0 ? BigNat(d_abs) : BigNat(-d_abs);
    int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) {
      // gcd(|D|, n) > 1: composite unless n equals the small |D| itself.
      return n == d_abs;
    }
    d_abs += 2;
    sign = -sign;
  }
  BigNat q = (1 - d) / 4;

  // n + 1 = t * 2^s with t odd.
  BigNat t = n + 1;
  unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), s);

  auto mod_n = [&](BigNat& v) { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t()); };

  // Binary chain for U_t, V_t with P = 1.
  BigNat u(1), v(1), qk = q;
  mod_n(qk);
  long bits = static_cast<long>(mpz_sizeinbase(t.get_mpz_t(), 2));
  for (long i = bits - 2; i >= 0; --i) {
    // (U, V, Q^k) -> (U*V, V^2 - 2Q^k, Q^2k)
    u *= v;
    mod_n(u);
    v = v * v - 2 * qk;
    mod_n(v);
    qk *= qk;
    mod_n(qk);
    if (mpz_tstbit(t.get_mpz_t(), static_cast<unsigned long>(i))) {
      // index +1: U' = (U + V)/2, V' = (D*U + V)/2 (halving mod odd n)
      BigNat u2 = u + v;
      BigNat v2 = d * u + v;
      if (mpz_odd_p(u2.get_mpz_t())) u2 += n;
      if (mpz_odd_p(v2.get_mpz_t())) v2 += n;
      u2 /= 2;
      v2 /= 2;
      u = u2;
      mod_n(u);
      v = v2;
      mod_n(v);
      qk *= q;
      mod_n(qk);
    }
  }

  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = v * v - 2 * qk;
    mod_n(v);
    if (v == 0) return true;
    qk *= qk;
    mod_n(qk);
  }
  return false;
}

bool strong_probable_prime_big_base2(const BigNat& n) {
  BigNat d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigNat x;
  BigNat two(2);
  mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  for (u64 w : kWitnesses) {
    if (!strong_probable_prime_u64(n, w)) return false;
  }
  return true;
}

bool is_probable_prime_big(const BigNat& n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == static_cast<unsigned long>(p)) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
      return false;
  }
  if (n < 41 * 41) return true;
  if (!strong_probable_prime_big_base2(n)) return false;
  return strong_lucas_probable_prime(n);
}

}  // namespace pcv
