#include <doctest.h>

#include <random>

#include "pcv/primality.hpp"
#include "test_support.hpp"

using namespace pcv;
using testing_support::kit_200k;

TEST_SUITE_BEGIN("primality");

TEST_CASE("is_prime_u64 agrees with the sieve oracle") {
  const auto& kit = kit_200k();
  for (u64 n = 0; n <= 100'000; ++n) CHECK(is_prime_u64(n) == kit.prime(n));
}

TEST_CASE("is_prime_u64 rejects strong pseudoprimes") {
  CHECK_FALSE(is_prime_u64(3215031751ull));           // strong psp to 2,3,5,7
  CHECK_FALSE(is_prime_u64(3825123056546413051ull));  // strong psp to 2..23
  CHECK_FALSE(is_prime_u64(341));                     // Fermat psp base 2
  CHECK_FALSE(is_prime_u64(561));                     // Carmichael
  CHECK(is_prime_u64(41));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(0));
  CHECK(is_prime_u64((u64{1} << 61) - 1));  // Mersenne
  CHECK_FALSE(is_prime_u64((u64{1} << 62) - 1));
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("big probable-prime examples") {
  CHECK(is_probable_prime_big(BigNat(41)));
  CHECK_FALSE(is_probable_prime_big(BigNat(1)));
  CHECK(is_probable_prime_big((BigNat(1) << 89) - 1));   // Mersenne
  CHECK_FALSE(is_probable_prime_big((BigNat(1) << 91) - 1));
}

TEST_CASE("big verdicts agree with is_prime_u64 below 2^64") {
  for (u64 n = 0; n <= 20'000; ++n)
    CHECK(is_probable_prime_big(big_from_u64(n)) == is_prime_u64(n));
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 2'000; ++i) {
    const u64 n = rng();
    CHECK(is_probable_prime_big(big_from_u64(n)) == is_prime_u64(n));
  }
}

TEST_CASE("big verdicts agree with an independent bignum oracle") {
  const auto& kit = kit_200k();
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 300; ++i) {
    BigNat v = big_from_u64(rng());
    v = v * big_from_u64(rng()) + static_cast<unsigned long>(rng() % 1000);
    CHECK(is_probable_prime_big(v) == kit.prime_big(v));
  }
  // Perfect squares exercise the Lucas parameter guard.
  for (u64 r = 2; r < 300; ++r) {
    BigNat sq = big_from_u64(r) * big_from_u64(r);
    CHECK_FALSE(is_probable_prime_big(sq * sq + 2 * sq + 1));  // (r^2+1)^2
  }
}

TEST_SUITE_END();
