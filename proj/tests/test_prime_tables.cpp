#include <doctest.h>

#include "pcv/errors.hpp"
#include "pcv/prime_tables.hpp"
#include "test_support.hpp"

using namespace pcv;
using testing_support::kit_200k;
using testing_support::tables_2m;

TEST_SUITE_BEGIN("prime_tables");

TEST_CASE("build examples") {
  auto t10 = PrimeTables::build(10);
  CHECK(t10.prime_count(10) == 4);
  auto t2 = PrimeTables::build(2);
  CHECK(t2.prime_count(2) == 1);
  auto t150 = PrimeTables::build(150);
  CHECK(t150.prime_count(150) == 35);
  CHECK_THROWS_AS(PrimeTables::build(1), UsageError);
}

TEST_CASE("prime_count anchors and edges") {
  const auto& t = tables_2m();
  CHECK(t.prime_count(0) == 0);
  CHECK(t.prime_count(1) == 0);
  CHECK(t.prime_count(2) == 1);
  CHECK(t.prime_count(350) == 70);
  CHECK(t.prime_count(150) == 35);
  CHECK(t.prime_count(2'000'000) == 148933);
  CHECK_THROWS_AS(t.prime_count(2'000'001), KernelLimitError);
  try {
    t.prime_count(3'000'000);
  } catch (const KernelLimitError& e) {
    CHECK(e.needed() == 3'000'000);
    CHECK(std::string(e.what()).find("2000000") != std::string::npos);
  }
}

TEST_CASE("oracle equivalence up to 10^4 and block boundaries") {
  const auto& t = tables_2m();
  const auto& kit = kit_200k();
  for (u64 x = 0; x <= 10'000; ++x) CHECK(t.prime_count(x) == kit.pi(x));
  // Around the 2^16 block seams.
  for (u64 base : {u64{1} << 16, u64{2} << 16, u64{3} << 16})
    for (u64 x = base - 3; x <= base + 3; ++x)
      CHECK(t.prime_count(x) == kit.pi(x));
}

TEST_CASE("nth_prime examples and round trip") {
  const auto& t = tables_2m();
  CHECK(t.nth_prime(1) == 2);
  CHECK(t.nth_prime(7) == 17);
  CHECK(t.nth_prime(25) == 97);
  for (u64 n = 1; n <= 5'000; ++n)
    CHECK(t.prime_count(t.nth_prime(n)) == n);
  u64 p = 2;
  while (p <= 100'000) {
    CHECK(t.nth_prime(t.prime_count(p)) == p);
    p = t.next_prime_after(p);
  }
  CHECK_THROWS_AS(t.nth_prime(0), UsageError);
  CHECK_THROWS_AS(t.nth_prime(t.max_prime_index() + 1), KernelLimitError);
}

TEST_CASE("twin pair counts, both conventions") {
  const auto& t = tables_2m();
  const auto& kit = kit_200k();
  CHECK(t.twin_pair_count_upper(4) == 0);
  CHECK(t.twin_pair_count_upper(10) == 2);
  CHECK(t.twin_pair_count_lower(2) == 0);
  CHECK(t.twin_pair_count_lower(10) == 2);
  CHECK(t.twin_pair_count_lower(11) == 3);
  u64 upper = 0, lower = 0;
  for (u64 x = 0; x <= 10'000; ++x) {
    if (x >= 5 && kit.prime(x) && kit.prime(x - 2)) ++upper;
    CHECK(t.twin_pair_count_upper(x) == upper);
    if (kit.prime(x) && kit.prime(x + 2)) ++lower;
    CHECK(t.twin_pair_count_lower(x) == lower);
  }
  CHECK_THROWS_AS(t.twin_pair_count_lower(2'000'000), KernelLimitError);
}

TEST_CASE("sophie germain count") {
  const auto& t = tables_2m();
  CHECK(t.sophie_germain_count(1) == 0);
  CHECK(t.sophie_germain_count(5) == 3);
  CHECK(t.sophie_germain_count(11) == 4);
  const auto& kit = kit_200k();
  u64 count = 0;
  for (u64 x = 0; x <= 10'000; ++x) {
    if (x >= 2 && kit.prime(x) && kit.prime(2 * x + 1)) ++count;
    CHECK(t.sophie_germain_count(x) == count);
  }
  CHECK_THROWS_AS(t.sophie_germain_count(1'000'000), KernelLimitError);
}

TEST_CASE("squarefree count") {
  const auto& t = tables_2m();
  CHECK(t.squarefree_count(1) == 1);
  CHECK(t.squarefree_count(10) == 7);
  CHECK(t.squarefree_count(100) == 61);
  u64 count = 0;
  for (u64 x = 1; x <= 10'000; ++x) {
    bool squarefree = true;
    for (u64 d = 2; d * d <= x; ++d)
      if (x % (d * d) == 0) {
        squarefree = false;
        break;
      }
    if (squarefree) ++count;
    CHECK(t.squarefree_count(x) == count);
  }
}

TEST_CASE("gaussian ideal count and regrouped self-check") {
  const auto& t = tables_2m();
  const auto& kit = kit_200k();
  CHECK(t.gaussian_ideal_count(1) == 0);
  CHECK(t.gaussian_ideal_count(2) == 1);
  CHECK(t.gaussian_ideal_count(10) == 3);
  for (u64 x = 0; x <= 10'000; ++x)
    CHECK(t.gaussian_ideal_count(x) == kit.gauss(x));
}

TEST_CASE("monotonicity of all counting functions (sampled)") {
  const auto& t = tables_2m();
  u64 prev_pi = 0, prev_tw = 0, prev_sg = 0, prev_sf = 0, prev_ga = 0;
  for (u64 x = 0; x <= 40'000; x += 7) {
    const u64 pi = t.prime_count(x);
    const u64 tw = t.twin_pair_count_upper(x);
    const u64 sg = t.sophie_germain_count(x);
    const u64 sf = t.squarefree_count(x);
    const u64 ga = t.gaussian_ideal_count(x);
    CHECK(pi >= prev_pi);
    CHECK(tw >= prev_tw);
    CHECK(sg >= prev_sg);
    CHECK(sf >= prev_sf);
    CHECK(ga >= prev_ga);
    CHECK(tw <= pi);
    CHECK(sf <= x);
    prev_pi = pi;
    prev_tw = tw;
    prev_sg = sg;
    prev_sf = sf;
    prev_ga = ga;
  }
}

TEST_CASE("is_prime agrees with sieve membership and MR beyond") {
  const auto& t = tables_2m();
  const auto& kit = kit_200k();
  for (u64 x = 0; x <= 20'000; ++x) {
    CHECK(t.is_prime(x) == kit.prime(x));
    CHECK(t.is_prime_u64(x) == kit.prime(x));
  }
  // Past the table limit the MR path takes over.
  CHECK(t.is_prime_u64(2'000'003));
  CHECK_FALSE(t.is_prime_u64(2'000'001));
}

TEST_CASE("next_prime_after") {
  const auto& t = tables_2m();
  CHECK(t.next_prime_after(0) == 2);
  CHECK(t.next_prime_after(2) == 3);
  CHECK(t.next_prime_after(3) == 5);
  CHECK(t.next_prime_after(89) == 97);
  const auto& kit = kit_200k();
  u64 p = 2;
  for (u64 x = 2; x < 10'000; ++x) {
    CHECK(t.next_prime_after(x) == kit.next_prime(x));
  }
  (void)p;
  CHECK_THROWS_AS(t.next_prime_after(1'999'999), KernelLimitError);
}

TEST_SUITE_END();
