#include "pcv/arith.hpp"

#include <mpfr.h>

#include <cmath>
#include <string>

#include "pcv/errors.hpp"
#include "pcv/modular.hpp"

namespace pcv {

SmallMultiplicativeTable SmallMultiplicativeTable::build(u64 upto) {
  SmallMultiplicativeTable t;
  t.upto_ = upto;
  if (upto == 0) return t;
  t.phi_.assign(upto + 1, 0);
  t.sigma_.assign(upto + 1, 0);
  // Linear sieve; pk_sigma[i] holds sigma of the smallest-prime-power part
  // of i so sigma extends multiplicatively.
  std::vector<u64> pk_sigma(upto + 1, 0);
  std::vector<u64> primes;
  t.phi_[1] = t.sigma_[1] = pk_sigma[1] = 1;
  for (u64 i = 2; i <= upto; ++i) {
    if (t.phi_[i] == 0) {
      primes.push_back(i);
      t.phi_[i] = i - 1;
      t.sigma_[i] = i + 1;
      pk_sigma[i] = i + 1;
    }
    for (u64 p : primes) {
      if (p > upto / i) break;
      const u64 ip = i * p;
      if (i % p == 0) {
        t.phi_[ip] = t.phi_[i] * p;
        pk_sigma[ip] = pk_sigma[i] * p + 1;
        t.sigma_[ip] = t.sigma_[i] / pk_sigma[i] * pk_sigma[ip];
        break;
      }
      t.phi_[ip] = t.phi_[i] * (p - 1);
      t.sigma_[ip] = t.sigma_[i] * (p + 1);
      pk_sigma[ip] = p + 1;
    }
  }
  return t;
}

u64 SmallMultiplicativeTable::phi(u64 n) const {
  if (n == 0 || n > upto_)
    throw KernelLimitError("phi(" + std::to_string(n) +
                               ") outside multiplicative table bound " +
                               std::to_string(upto_),
                           n);
  return phi_[n];
}

u64 SmallMultiplicativeTable::sigma(u64 n) const {
  if (n == 0 || n > upto_)
    throw KernelLimitError("sigma(" + std::to_string(n) +
                               ") outside multiplicative table bound " +
                               std::to_string(upto_),
                           n);
  return sigma_[n];
}

u64 euler_phi_u64(u64 n) {
  if (n == 0) throw UsageError("euler_phi requires n >= 1");
  if (n == 1) return 1;
  u64 result = n;
  for (auto [p, e] : factorize(n).factors) {
    (void)e;
    result -= result / p;
  }
  return result;
}

u64 divisor_sigma_u64(u64 n) {
  if (n == 0) throw UsageError("divisor_sigma requires n >= 1");
  if (n == 1) return 1;
  u64 result = 1;
  for (auto [p, e] : factorize(n).factors) {
    // sigma(p^e) = 1 + p + ... + p^e with checked arithmetic.
    u64 term = 1, power = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      auto pp = checked_mul_u64(power, p);
      if (!pp) throw ResourceError("divisor_sigma overflow at n = " + std::to_string(n));
      power = *pp;
      auto sum = checked_add_u64(term, power);
      if (!sum) throw ResourceError("divisor_sigma overflow at n = " + std::to_string(n));
      term = *sum;
    }
    auto prod = checked_mul_u64(result, term);
    if (!prod) throw ResourceError("divisor_sigma overflow at n = " + std::to_string(n));
    result = *prod;
  }
  return result;
}

bool shape_test(u64 n, Shape shape) {
  switch (shape) {
    case Shape::Square: {
      u64 r = isqrt_u64(n);
      return r * r == n;
    }
    case Shape::Triangular: {
      // n = k(k+1)/2 iff 8n+1 is a perfect square. 8n+1 may exceed 64 bits,
      // so the root is adjusted in 128-bit arithmetic.
      const u128 m = static_cast<u128>(n) * 8 + 1;
      u64 r = static_cast<u64>(sqrtl(static_cast<long double>(m)));
      while (r > 0 && static_cast<u128>(r) * r > m) --r;
      while (static_cast<u128>(r + 1) * (r + 1) <= m) ++r;
      return static_cast<u128>(r) * r == m;
    }
    case Shape::Cube: {
      u64 r = icbrt_u64(n);
      return r * r * r == n;
    }
  }
  return false;
}

BigNat big_binomial(u64 a, u64 b) {
  if (b > a) throw UsageError("big_binomial requires b <= a");
  BigNat r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

BigNat big_factorial(u64 k) {
  BigNat r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigNat big_pow2(u64 k) {
  BigNat r(1);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

std::strong_ordering power_compare(u64 a, u64 ea, u64 b, u64 eb) {
  if (ea == 0 || eb == 0) throw UsageError("power_compare exponents must be >= 1");
  BigNat lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(a),
                static_cast<unsigned long>(eb));
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(b),
                static_cast<unsigned long>(ea));
  int c = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool below_3sqrt_bound(u64 k, u64 n, u64 add) {
  // k < 3*sqrt(n) + add  <=>  k <= add (n >= 1) or (k - add)^2 < 9n.
  if (k <= add) return n >= 1;
  const u128 lhs = static_cast<u128>(k - add) * (k - add);
  return lhs < static_cast<u128>(9) * n;
}

u64 nth_prime_upper_bound(u64 n) {
  if (n < 6) return 13;
  const long double ln = logl(static_cast<long double>(n));
  long double b = static_cast<long double>(n) * (ln + logl(ln));
  b = b * 1.02L + 64;
  return b >= 1.8e19L ? ~u64{0} : static_cast<u64>(b);
}

namespace {

// Evaluates the bound at `prec` bits with directed rounding; dir < 0 rounds
// every step toward a lower result, dir > 0 toward a higher one.
void eval_bound_mpfr(mpfr_t out, RealBound kind, u64 n, int dir,
                     mpfr_prec_t prec) {
  mpfr_rnd_t rnd = dir < 0 ? MPFR_RNDD : MPFR_RNDU;
  mpfr_t s, l;
  mpfr_init2(s, prec);
  mpfr_init2(l, prec);
  switch (kind) {
    case RealBound::Sqrt2nLog5n:
      mpfr_set_ui(s, static_cast<unsigned long>(n), rnd);
      mpfr_mul_ui(s, s, 2, rnd);
      mpfr_sqrt(s, s, rnd);
      mpfr_set_ui(l, static_cast<unsigned long>(n), rnd);
      mpfr_mul_ui(l, l, 5, rnd);
      mpfr_log(l, l, rnd);
      break;
    case RealBound::SqrtNLogN:
      mpfr_set_ui(s, static_cast<unsigned long>(n), rnd);
      mpfr_sqrt(s, s, rnd);
      mpfr_set_ui(l, static_cast<unsigned long>(n), rnd);
      mpfr_log(l, l, rnd);
      break;
  }
  mpfr_mul(out, s, l, rnd);
  mpfr_clear(s);
  mpfr_clear(l);
}

}  // namespace

BoundCheck below_real_bound(u64 candidate, RealBound kind, u64 n) {
  // Fast path: long double with a generous ulp margin either side.
  long double b;
  switch (kind) {
    case RealBound::Sqrt2nLog5n:
      b = sqrtl(2.0L * static_cast<long double>(n)) *
          logl(5.0L * static_cast<long double>(n));
      break;
    default:
      b = sqrtl(static_cast<long double>(n)) * logl(static_cast<long double>(n));
      break;
  }
  const long double margin = std::max<long double>(b * 1e-15L, 1e-15L);
  const long double c = static_cast<long double>(candidate);
  if (c < b - margin) return {true, false};
  if (c > b + margin) return {false, false};

  for (mpfr_prec_t prec = 128; prec <= 1024; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    eval_bound_mpfr(lo, kind, n, -1, prec);
    eval_bound_mpfr(hi, kind, n, +1, prec);
    const bool below_lo = mpfr_cmp_ui(lo, static_cast<unsigned long>(candidate)) > 0;
    const bool above_hi = mpfr_cmp_ui(hi, static_cast<unsigned long>(candidate)) <= 0;
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (below_lo) return {true, false};
    if (above_hi) return {false, false};
  }
  // Persistent tie: admit the candidate.
  return {true, true};
}

}  // namespace pcv
