#include <doctest.h>

#include <cmath>
#include <random>

#include "pcv/arith.hpp"
#include "pcv/errors.hpp"
#include "test_support.hpp"

using namespace pcv;
using testing_support::kit_200k;

TEST_SUITE_BEGIN("arith");

TEST_CASE("phi and sigma tables vs direct computation") {
  auto t = SmallMultiplicativeTable::build(10'000);
  const auto& kit = kit_200k();
  CHECK(t.phi(1) == 1);
  CHECK(t.sigma(1) == 1);
  CHECK(t.phi(10) == 4);
  CHECK(t.phi(97) == 96);
  CHECK(t.sigma(6) == 12);
  CHECK(t.sigma(9) == 13);
  for (u64 n = 1; n <= 10'000; ++n) {
    CHECK(t.phi(n) == kit.phi(n));
    CHECK(t.sigma(n) == kit.sigma(n));
    CHECK(euler_phi_u64(n) == t.phi(n));
    CHECK(divisor_sigma_u64(n) == t.sigma(n));
  }
  CHECK_THROWS_AS(t.phi(10'001), KernelLimitError);
}

TEST_CASE("phi divisor-sum identity up to 10^4") {
  auto t = SmallMultiplicativeTable::build(10'000);
  for (u64 n = 1; n <= 10'000; ++n) {
    u64 sum = 0;
    for (u64 d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      sum += t.phi(d);
      if (d != n / d) sum += t.phi(n / d);
    }
    CHECK(sum == n);
  }
}

TEST_CASE("shape tests") {
  CHECK(shape_test(0, Shape::Square));
  CHECK(shape_test(10, Shape::Triangular));
  CHECK(shape_test(319225, Shape::Square));
  CHECK(shape_test(27, Shape::Cube));
  CHECK_FALSE(shape_test(2, Shape::Square));
  CHECK_FALSE(shape_test(11, Shape::Triangular));
  CHECK_FALSE(shape_test(26, Shape::Cube));

  // Agreement with the defining enumerations up to 10^6.
  std::vector<bool> tri(1'000'001, false);
  for (u64 k = 0; k * (k + 1) / 2 <= 1'000'000; ++k) tri[k * (k + 1) / 2] = true;
  for (u64 n = 0; n <= 1'000'000; ++n) {
    const u64 r = isqrt_u64(n);
    CHECK(shape_test(n, Shape::Square) == (r * r == n));
    CHECK(shape_test(n, Shape::Triangular) == tri[n]);
  }
  std::vector<bool> cubes(100'001, false);
  for (u64 k = 0; k * k * k <= 100'000; ++k) cubes[k * k * k] = true;
  for (u64 n = 0; n <= 100'000; ++n)
    CHECK(shape_test(n, Shape::Cube) == cubes[n]);
}

TEST_CASE("big helpers") {
  CHECK(big_binomial(4, 2) == 6);
  CHECK(big_factorial(4) == 24);
  CHECK(big_pow2(5) == 32);
  CHECK(big_binomial(0, 0) == 1);
  CHECK_THROWS_AS(big_binomial(3, 4), UsageError);
  CHECK(big_factorial(20) == BigNat("2432902008176640000"));
}

TEST_CASE("power_compare exactness") {
  CHECK(power_compare(8, 3, 4, 2) == std::strong_ordering::equal);
  CHECK(power_compare(9, 2, 2, 1) == std::strong_ordering::greater);
  CHECK(power_compare(25, 2, 100, 4) == std::strong_ordering::greater);
  CHECK(power_compare(2, 1, 9, 2) == std::strong_ordering::less);
  CHECK_THROWS_AS(power_compare(2, 0, 3, 1), UsageError);

  std::mt19937_64 rng(5150);
  for (int i = 0; i < 3'000; ++i) {
    const u64 a = 1 + rng() % 100'000;
    const u64 b = 1 + rng() % 100'000;
    const u64 ea = 1 + rng() % 30;
    const u64 eb = 1 + rng() % 30;
    const auto fwd = power_compare(a, ea, b, eb);
    const auto rev = power_compare(b, eb, a, ea);
    // Antisymmetry.
    if (fwd == std::strong_ordering::less) CHECK(rev == std::strong_ordering::greater);
    if (fwd == std::strong_ordering::greater) CHECK(rev == std::strong_ordering::less);
    if (fwd == std::strong_ordering::equal) CHECK(rev == std::strong_ordering::equal);
    // Agreement with floating comparison when it is unambiguous.
    const long double lhs = logl(static_cast<long double>(a)) / ea;
    const long double rhs = logl(static_cast<long double>(b)) / eb;
    if (fabsl(lhs - rhs) > 1e-12L) {
      CHECK((lhs > rhs) == (fwd == std::strong_ordering::greater));
      CHECK((lhs < rhs) == (fwd == std::strong_ordering::less));
    }
  }
}

TEST_CASE("algebraic sqrt bound is exact") {
  for (u64 n = 1; n <= 2'000; ++n) {
    const long double b3 = 3.0L * sqrtl(static_cast<long double>(n)) + 3;
    const long double b6 = 3.0L * sqrtl(static_cast<long double>(n)) + 6;
    for (u64 k = 1; k <= static_cast<u64>(b6) + 2; ++k) {
      // 9n is never a perfect square times... the float check is reliable
      // away from integer boundary values; both agree on this range.
      if (fabsl(static_cast<long double>(k) - b3) > 1e-6L)
        CHECK(below_3sqrt_bound(k, n, 3) == (static_cast<long double>(k) < b3));
      if (fabsl(static_cast<long double>(k) - b6) > 1e-6L)
        CHECK(below_3sqrt_bound(k, n, 6) == (static_cast<long double>(k) < b6));
    }
  }
  // Exact boundary: k = 3 sqrt(n) + 3 attained at perfect squares.
  CHECK_FALSE(below_3sqrt_bound(6, 1, 3));   // 6 < 3*1+3 is false
  CHECK(below_3sqrt_bound(5, 1, 3));
  CHECK_FALSE(below_3sqrt_bound(9, 4, 3));   // 9 < 3*2+3 is false
  CHECK(below_3sqrt_bound(8, 4, 3));
}

TEST_CASE("transcendental bound checks") {
  // sqrt(2n) log(5n) at n = 50: ~ 55.2; candidates straddle it.
  auto a = below_real_bound(55, RealBound::Sqrt2nLog5n, 50);
  CHECK(a.below);
  CHECK_FALSE(a.tie_admitted);
  auto b = below_real_bound(56, RealBound::Sqrt2nLog5n, 50);
  CHECK_FALSE(b.below);
  // sqrt(n) log(n) at n = 100: 10 ln 100 ~ 46.05.
  CHECK(below_real_bound(46, RealBound::SqrtNLogN, 100).below);
  CHECK_FALSE(below_real_bound(47, RealBound::SqrtNLogN, 100).below);
  // Consistency with a long double evaluation over a range.
  for (u64 n = 1; n <= 500; ++n) {
    const long double bound = sqrtl(2.0L * n) * logl(5.0L * n);
    const u64 k = static_cast<u64>(bound);
    if (fabsl(static_cast<long double>(k) - bound) > 1e-9L)
      CHECK(below_real_bound(k, RealBound::Sqrt2nLog5n, n).below ==
            (static_cast<long double>(k) < bound));
  }
}

TEST_CASE("nth prime upper bound is a true bound") {
  const auto& kit = kit_200k();
  for (u64 n = 1; n <= kit.prime_count_total(); n += 97)
    CHECK(kit.nth(n) <= nth_prime_upper_bound(n));
}

TEST_SUITE_END();
