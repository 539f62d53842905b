#include <algorithm>
#include <optional>
#include <vector>

#include "eval_util.hpp"
#include "pcv/evaluate.hpp"

// Catalog entries c3.*: combinatorial properties of p_n.

namespace pcv::detail {

namespace {

KernelNeeds needs_nth_linear(u64, u64 to, u64) {
  return KernelNeeds{.sieve_limit = sat_add(nth_prime_upper(to), 65536),
                     .nth_service = true};
}

KernelNeeds needs_nth_nth(u64, u64 to, u64) {
  return KernelNeeds{
      .sieve_limit = sat_add(nth_prime_upper(nth_prime_upper(to)), 65536),
      .nth_service = true};
}

u128 sq(u64 v) { return static_cast<u128>(v) * v; }
u128 cube(u64 v) { return static_cast<u128>(v) * v * v; }

Verdict enum_verdict(EvalContext& cx, bool qualifies, u64 n) {
  if (qualifies) {
    if (cx.collector) ++cx.collector->count;
    return Verdict::holds1("n", n);
  }
  return Verdict::exempt("not a qualifying witness");
}

const char* side_c3_16(u64 n, u64 m) {
  if (m == 0) return "m must be positive";
  if (n <= 2 * m + 1) return "requires n > 2m+1";
  if (m == 1 && n % 2 != 0) return "m = 1 covers even n only";
  if (m == 3 && n % 6 == 1) return "m = 3 excludes n == 1 (mod 6)";
  return nullptr;
}

const char* side_odd(u64 n, u64) { return n % 2 == 0 ? "odd n only" : nullptr; }

}  // namespace

void add_section3(std::vector<ConjectureSpec>& out) {
  // ---- 3.1 ----
  {
    auto& e = add_entry(out, "c3.1", "3.1",
                        "some prime q has 2n-q and p_{q+2}+2 both prime",
                        Kind::ExistentialWitness, 3, 100'000);
    e.claimed_verified_bound = 200'000'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(2 * to + 2), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "q", 2, 2 * n - 2, [&](u64 q) {
        return cx.prime(2 * n - q) && cx.prime(cx.nth(q + 2) + 2);
      });
    };
  }

  // ---- 3.2 ----
  {
    auto& e = add_entry(out, "c3.2", "3.2",
                        "n = k + m with p_k+2 and p_{p_m}+2 both prime",
                        Kind::Representation, 3, 100'000);
    e.claimed_verified_bound = 1'000'000'000;
    e.needs = needs_nth_nth;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(cx.nth(k) + 2) && cx.prime(cx.nth(cx.nth(m)) + 2);
      });
    };
  }

  // ---- 3.3 ----
  {
    auto& e = add_entry(out, "c3.3", "3.3",
                        "n = k + m with {6k-1, 6k+1} and {p_m, p_m+2} both "
                        "twin prime pairs",
                        Kind::Representation, 3, 100'000);
    e.claimed_verified_bound = 20'000'000;
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(6 * k - 1) && cx.prime(6 * k + 1) &&
               cx.prime(cx.nth(m) + 2);
      });
    };
  }

  // ---- 3.4 ----
  {
    auto& e = add_entry(out, "c3.4", "3.4",
                        "n = k + m with p_k^2-2, p_m^2-2, p_{p_m}^2-2 all "
                        "prime",
                        Kind::Representation, 2, 10'000);
    e.claimed_verified_bound = 100'000'000;
    e.needs = needs_nth_nth;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        const u64 pm = cx.nth(m);
        return cx.prime_i128(sq(cx.nth(k)) - 2) && cx.prime_i128(sq(pm) - 2) &&
               cx.prime_i128(sq(cx.nth(pm)) - 2);
      });
    };
  }

  // ---- 3.5 ----
  {
    auto& e = add_entry(out, "c3.5.i", "3.5(i)",
                        "{k+m: 0<k<m, p_k, p_m, p_n in arithmetic "
                        "progression for some n} equals {5, 6, 7, ...}",
                        Kind::SetEquality, 1, 10'000);
    e.counts_witnesses = false;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(2 * nth_prime_upper(to), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 t) -> Verdict {
      // Search pairs k < m with k + m = t whose AP completion 2p_m - p_k is
      // prime; t <= 4 must admit none, t >= 5 must admit one.
      bool capped = false;
      std::optional<std::array<u64, 3>> found;
      u64 pairs = 0;
      for (u64 k = 1; 2 * k < t; ++k) {
        cx.frontier = k;
        const u64 m = t - k;
        ++pairs;
        const u64 x = 2 * cx.nth(m) - cx.nth(k);
        if (x > cx.tables().limit()) {
          capped = true;
          continue;
        }
        if (cx.prime(x)) {
          found = {k, m, cx.pi(x)};
          break;
        }
      }
      if (t >= 5) {
        if (found) {
          Verdict v = Verdict::holds1("k", (*found)[0]);
          v.witness.emplace_back("m", (*found)[1]);
          v.witness.emplace_back("n", (*found)[2]);
          return v;
        }
        return capped ? Verdict::exhausted("index cap bound the pair search")
                      : Verdict::fails();
      }
      // t <= 4: the claim is absence.
      if (found) return Verdict::fails();
      if (capped) return Verdict::exhausted("index cap bound the pair search");
      return Verdict::holds1("checked_pairs", pairs);
    };
  }
  {
    auto& e = add_entry(out, "c3.5.ii", "3.5(ii)",
                        "p_{kn}, p_{(k+1)n}, p_{(k+2)n} form an arithmetic "
                        "progression for some k <= 3 p_n + 8",
                        Kind::ExistentialWitness, 1, 300);
    e.needs = [](u64, u64 to, u64) {
      const u64 kmax = sat_add(3 * nth_prime_upper(to), 10);
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(sat_mul(kmax, to)), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 kmax = 3 * cx.nth(n) + 8;
      return scan(cx, "k", 1, kmax, [&](u64 k) {
        const u64 a = cx.nth(cx.mul(k, n));
        const u64 b = cx.nth(cx.mul(k + 1, n));
        const u64 c = cx.nth(cx.mul(k + 2, n));
        return b - a == c - b;
      });
    };
  }

  // ---- 3.6 ----
  {
    auto& e = add_entry(out, "c3.6.i.a", "3.6(i)",
                        "p_{kn}+2 is prime for some k = 1..n",
                        Kind::ExistentialWitness, 7, 1'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(sat_mul(to, to)) + 2, 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n,
                  [&](u64 k) { return cx.prime(cx.nth(cx.mul(k, n)) + 2); });
    };
  }
  {
    auto& e = add_entry(out, "c3.6.i.b", "3.6(i)",
                        "p_{kn}+2 is prime for some positive k < 3*sqrt(n)+6",
                        Kind::ExistentialWitness, 1, 5'000);
    e.needs = [](u64, u64 to, u64) {
      const u64 kmax = 3 * isqrt_u64(to) + 7;
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(sat_mul(kmax, to)) + 2, 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<u64> first;
      for (u64 k = 1; cx.below_3sqrt(k, n, 6); ++k) {
        cx.frontier = k;
        if (cx.prime(cx.nth(cx.mul(k, n)) + 2)) {
          if (!first) first = k;
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      return first ? Verdict::holds1("k", *first) : Verdict::fails();
    };
  }
  {
    auto& e = add_entry(out, "c3.6.ii", "3.6(ii)",
                        "2k+1 and p_{kn}^2-2 are both prime for some "
                        "k = 1..n",
                        Kind::ExistentialWitness, 1, 1'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(sat_mul(to, to)), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.prime(2 * k + 1) &&
               cx.prime_i128(sq(cx.nth(cx.mul(k, n))) - 2);
      });
    };
  }

  // ---- 3.7 ----
  {
    auto& e = add_entry(out, "c3.7.i", "3.7(i)",
                        "infinitely many n have n-1, n+1, p_n-n, p_n+n, "
                        "n p_n - 1, n p_n + 1 all prime (witness enumeration)",
                        Kind::WitnessEnumeration, 1, 25'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      if (n < 2) return enum_verdict(cx, false, n);
      if (!cx.prime(n - 1) || !cx.prime(n + 1)) return enum_verdict(cx, false, n);
      const u64 pn = cx.nth(n);
      const u64 npn = cx.mul(n, pn);
      const bool ok = cx.prime(pn - n) && cx.prime(pn + n) &&
                      cx.prime(npn - 1) && cx.prime(npn + 1);
      return enum_verdict(cx, ok, n);
    };
  }
  {
    auto& e = add_entry(out, "c3.7.ii", "3.7(ii)",
                        "infinitely many primes q have p_q^2+4q^2 and "
                        "q^2+4p_q^2 both prime (witness enumeration)",
                        Kind::WitnessEnumeration, 1, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      if (!cx.prime(n)) return enum_verdict(cx, false, n);
      const u64 q = n;
      const u64 pq = cx.nth(q);
      const bool ok = cx.prime_i128(sq(pq) + 4 * sq(q)) &&
                      cx.prime_i128(sq(q) + 4 * sq(pq));
      return enum_verdict(cx, ok, n);
    };
  }

  // ---- 3.8 ----
  {
    auto& e = add_entry(out, "c3.8.i.a", "3.8(i)",
                        "k p_{n-k} + 1 is prime for some positive k < n",
                        Kind::ExistentialWitness, 2, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime_i128(static_cast<u128>(k) * cx.nth(n - k) + 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.8.i.b", "3.8(i)",
                        "k p_{n-k} - 1 is prime for some positive k < n",
                        Kind::ExistentialWitness, 3, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime_i128(static_cast<u128>(k) * cx.nth(n - k) - 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.8.ii", "3.8(ii)",
                        "p_k p_{n-k} - 6 is prime for some 0 < k < n",
                        Kind::ExistentialWitness, 6, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u128 prod = static_cast<u128>(cx.nth(k)) * cx.nth(n - k);
        return prod > 6 && cx.prime_i128(prod - 6);
      });
    };
  }

  // ---- 3.9 ----
  {
    auto& e = add_entry(out, "c3.9.a", "3.9",
                        "p_k + p_{n-k} - 1 is prime for some k = 1..n-1",
                        Kind::ExistentialWitness, 7, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime(cx.nth(k) + cx.nth(n - k) - 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.9.b", "3.9",
                        "p_k^2 + p_{n-k}^2 - 1 is prime for some k = 1..n-1",
                        Kind::ExistentialWitness, 7, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime_i128(sq(cx.nth(k)) + sq(cx.nth(n - k)) - 1);
      });
    };
  }

  // ---- 3.10 ----
  {
    auto& e = add_entry(out, "c3.10.i", "3.10(i)",
                        "p_k^2 + 4 p_{n-k}^2 is prime for some positive "
                        "k < n",
                        Kind::ExistentialWitness, 4, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime_i128(sq(cx.nth(k)) + 4 * sq(cx.nth(n - k)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.10.ii.a", "3.10(ii)",
                        "p_k^3 + 2 p_{n-k}^3 is prime for some positive "
                        "k < n",
                        Kind::ExistentialWitness, 11, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime_i128(cube(cx.nth(k)) + 2 * cube(cx.nth(n - k)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.10.ii.b", "3.10(ii)",
                        "p_k^3 + 2 p_{n-k}^2 is prime for some 0 < k < n",
                        Kind::ExistentialWitness, 11, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime_i128(cube(cx.nth(k)) + 2 * sq(cx.nth(n - k)));
      });
    };
  }

  // ---- 3.11 ----
  {
    auto& e = add_entry(out, "c3.11.i.a", "3.11(i)",
                        "p_q^2 + (p_n - 1)^2 is prime for some prime q < n, "
                        "when n is not a divisor of 6",
                        Kind::ExceptionList, 1, 10'000);
    e.exceptions = {1, 2, 3, 6};
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan_primes(cx, "q", 2, n - 1, [&](u64 q) {
        return cx.prime_i128(sq(cx.nth(q)) + sq(pn - 1));
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.11.i.b", "3.11(i)",
                        "(p_q - 1)^2 + p_n^2 is prime for some prime q < n, "
                        "for n other than 1, 2, 9",
                        Kind::ExceptionList, 1, 10'000);
    e.exceptions = {1, 2, 9};
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan_primes(cx, "q", 2, n - 1, [&](u64 q) {
        return cx.prime_i128(sq(cx.nth(q) - 1) + sq(pn));
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.11.ii", "3.11(ii)",
                        "p_n^3 + 2 p_k^3 is prime for some positive k < n",
                        Kind::ExistentialWitness, 2, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      const u128 base = cube(cx.nth(n));
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.prime_i128(base + 2 * cube(cx.nth(k)));
      });
    };
  }

  // ---- 3.12 ----
  {
    auto& e = add_entry(out, "c3.12.i", "3.12(i)",
                        "n = k + m with 2^k + p_m prime",
                        Kind::Representation, 8, 3'000);
    e.claimed_verified_bound = 30'000'000;
    e.needs = [](u64, u64 to, u64) {
      auto k = needs_nth_linear(0, to, 0);
      k.bignum = true;
      return k;
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        const u64 pm = cx.nth(m);
        if (k <= 62) return cx.prime((u64{1} << k) + pm);
        return cx.attempt([&] {
          cx.check_bits(k + 1);
          return cx.prime_big(big_pow2(k) + big_from_u64(pm));
        });
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.12.ii", "3.12(ii)",
                        "n = k + m with k! + p_m prime",
                        Kind::Representation, 4, 1'000);
    e.claimed_verified_bound = 10'000'000;
    e.needs = [](u64, u64 to, u64) {
      auto k = needs_nth_linear(0, to, 0);
      k.bignum = true;
      return k;
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      BigNat fact(1);
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        fact *= static_cast<unsigned long>(k);
        return cx.attempt([&] {
          cx.check_bits(big_bits(fact) + 64);
          return cx.prime_big(fact + big_from_u64(cx.nth(m)));
        });
      });
    };
  }

  // ---- 3.13 ----
  {
    auto& e = add_entry(out, "c3.13.i", "3.13(i)",
                        "n = k + m, m > k > 0, with C(2k,k) + p_m prime",
                        Kind::Representation, 3, 2'000);
    e.claimed_verified_bound = 100'000'000;
    e.needs = [](u64, u64 to, u64) {
      auto k = needs_nth_linear(0, to, 0);
      k.bignum = true;
      return k;
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      // C(2k,k) maintained incrementally: C(2k+2,k+1) = C(2k,k)*2(2k+1)/(k+1).
      BigNat central(2);
      std::optional<std::pair<u64, u64>> first;
      for (u64 k = 1; 2 * k < n; ++k) {
        cx.frontier = k;
        if (k > 1) {
          central *= static_cast<unsigned long>(2 * (2 * k - 1));
          mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(),
                          static_cast<unsigned long>(k));
        }
        const u64 m = n - k;
        const bool hit = cx.attempt([&] {
          cx.check_bits(big_bits(central) + 64);
          return cx.prime_big(central + big_from_u64(cx.nth(m)));
        });
        if (hit) {
          if (!first) first = {k, m};
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("k", first->first);
      v.witness.emplace_back("m", first->second);
      return v;
    };
  }
  {
    auto& e = add_entry(out, "c3.13.ii", "3.13(ii)",
                        "p_n + C(p_k-1, (p_k-1)/2) is prime for some "
                        "1 < k < sqrt(n) log(n)",
                        Kind::ExistentialWitness, 5, 3'000);
    e.claimed_verified_bound = 10'000'000;
    e.needs = [](u64, u64 to, u64) {
      auto k = needs_nth_linear(0, to, 0);
      k.bignum = true;
      return k;
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const BigNat pn = big_from_u64(cx.nth(n));
      std::optional<u64> first;
      for (u64 k = 2; cx.below_real(k, RealBound::SqrtNLogN, n); ++k) {
        cx.frontier = k;
        const u64 pk = cx.nth(k);
        const bool hit = cx.attempt([&] {
          cx.check_bits(pk);
          return cx.prime_big(big_binomial(pk - 1, (pk - 1) / 2) + pn);
        });
        if (hit) {
          if (!first) first = k;
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      return first ? Verdict::holds1("k", *first) : Verdict::fails();
    };
  }

  // ---- 3.14 ----
  {
    auto& e = add_entry(out, "c3.14", "3.14",
                        "some positive k < n makes m = phi(k) + phi(n-k)/8 "
                        "integral with C(2m,m) + p_m prime",
                        Kind::ExistentialWitness, 20, 500);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit =
              sat_add(nth_prime_upper(sat_add(to, to / 8 + 2)), 65536),
          .mult_bound = to,
          .nth_service = true,
          .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 8 != 0) return false;
        const u64 m = cx.phi(k) + ph / 8;
        return cx.attempt([&] {
          cx.check_bits(2 * m + 64);
          return cx.prime_big(big_binomial(2 * m, m) + big_from_u64(cx.nth(m)));
        });
      });
    };
  }

  // ---- 3.15 ----
  {
    auto& e = add_entry(out, "c3.15.i", "3.15(i)",
                        "n = k + m with q = k + p_m and p_q - q + 1 both "
                        "prime",
                        Kind::Representation, 10, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(
              nth_prime_upper(sat_add(to, nth_prime_upper(to))), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        const u64 q = k + cx.nth(m);
        return cx.prime(q) && cx.prime(cx.nth(q) - q + 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.15.ii", "3.15(ii)",
                        "n = k + m with p_{p_k}-p_k+1, "
                        "p_{p_{2k+1}}-p_{2k+1}+1, p_{p_m}-p_m+1 all prime",
                        Kind::Representation, 2, 10'000);
    e.claimed_verified_bound = 10'000'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit =
              sat_add(nth_prime_upper(nth_prime_upper(2 * to + 2)), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      auto link = [&](u64 i) {  // p_{p_i} - p_i + 1
        const u64 pi_ = cx.nth(i);
        return cx.nth(pi_) - pi_ + 1;
      };
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(link(k)) && cx.prime(link(2 * k + 1)) &&
               cx.prime(link(m));
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.15.iii", "3.15(iii)",
                        "p_{p_k}-p_k+1 and p_{p_{kn}}-p_{kn}+1 are both "
                        "prime for some k = 1..n",
                        Kind::ExistentialWitness, 1, 300);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(
              nth_prime_upper(nth_prime_upper(sat_mul(to, to))), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      auto link = [&](u64 i) {
        const u64 pi_ = cx.nth(i);
        return cx.nth(pi_) - pi_ + 1;
      };
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.prime(link(k)) && cx.prime(link(cx.mul(k, n)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.15.iv", "3.15(iv)",
                        "infinitely many primes q have p_q-q+1 and "
                        "p_{q'}-q'+1 both prime, q' the next prime "
                        "(witness enumeration)",
                        Kind::WitnessEnumeration, 1, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(2 * to + 2000), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      if (!cx.prime(n)) return enum_verdict(cx, false, n);
      auto link = [&](u64 q) { return cx.nth(q) - q + 1; };
      if (!cx.prime(link(n))) return enum_verdict(cx, false, n);
      const u64 next = cx.tables().next_prime_after(n);
      return enum_verdict(cx, cx.prime(link(next)), n);
    };
  }

  // ---- 3.16 ----
  {
    auto& e = add_entry(out, "c3.16.a", "3.16",
                        "some prime p < n has q = floor((n-p)/m) and "
                        "p_q - q + 1 both prime (parametrized m, default 1)",
                        Kind::ExistentialWitness, 4, 100'000);
    e.claimed_verified_bound = 1'000'000;
    e.side_note = "m=1 covers even n; m=3 excludes n == 1 (mod 6); n > 2m+1";
    e.param_name = 'm';
    e.param_default = 1;
    e.side = side_c3_16;
    e.needs = [](u64, u64 to, u64 m) {
      return KernelNeeds{
          .sieve_limit =
              sat_add(nth_prime_upper(to / std::max<u64>(m, 1) + 2), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 m = cx.param;
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 q = (n - p) / m;
        return q >= 2 && cx.prime(q) && cx.prime(cx.nth(q) - q + 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.16.b", "3.16",
                        "some prime p < n has q = floor((n-p)/m) and q^2 - 2 "
                        "both prime (parametrized m, default 1)",
                        Kind::ExistentialWitness, 4, 100'000);
    e.claimed_verified_bound = 1'000'000;
    e.side_note = "m=1 covers even n; m=3 excludes n == 1 (mod 6); n > 2m+1";
    e.param_name = 'm';
    e.param_default = 1;
    e.side = side_c3_16;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 m = cx.param;
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 q = (n - p) / m;
        return q >= 2 && cx.prime(q) && cx.prime_i128(sq(q) - 2);
      });
    };
  }

  // ---- 3.17 ----
  {
    auto& e = add_entry(out, "c3.17", "3.17",
                        "every odd n > 5 is a sum of three elements of "
                        "{q: q and p_q - q + 1 both prime}",
                        Kind::Representation, 7, 100'000);
    e.counts_witnesses = false;
    e.side_note = "odd n only";
    e.side = side_odd;
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      auto in_set = [&](u64 q) {
        return cx.prime(q) && cx.prime(cx.nth(q) - q + 1);
      };
      for (u64 a = 2; a != 0 && 3 * a <= n; a = cx.next_prime_leq(a, n / 3)) {
        cx.frontier = a;
        if (!in_set(a)) continue;
        for (u64 b = a; b != 0 && a + 2 * b <= n;
             b = cx.next_prime_leq(b, (n - a) / 2)) {
          if (!in_set(b)) continue;
          const u64 c = n - a - b;
          if (c >= b && in_set(c)) {
            Verdict v = Verdict::holds1("a", a);
            v.witness.emplace_back("b", b);
            v.witness.emplace_back("c", c);
            return v;
          }
        }
      }
      return Verdict::fails();
    };
  }

  // ---- 3.18 ----
  {
    auto& e = add_entry(out, "c3.18", "3.18",
                        "some positive k < n-2 makes q = phi(k)+phi(n-k)/2+1 "
                        "prime with p_q - q - 1 and p_q - q + 1 also prime",
                        Kind::ExistentialWitness, 32, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(nth_prime_upper(to + 2), 65536),
                         .mult_bound = to,
                         .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 3, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 2 != 0) return false;
        const u64 q = cx.phi(k) + ph / 2 + 1;
        if (!cx.prime(q)) return false;
        const u64 gap = cx.nth(q) - q;
        return gap >= 2 && cx.prime(gap - 1) && cx.prime(gap + 1);
      });
    };
  }

  // ---- 3.19 ----
  {
    auto& e = add_entry(out, "c3.19", "3.19",
                        "some positive k < n makes q = phi(k)+phi(n-k)/3+1, "
                        "r = p_q-q+1 and s = p_r-r+1 all prime",
                        Kind::ExistentialWitness, 38, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(nth_prime_upper(to + 2)), 65536),
          .mult_bound = to,
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 3 != 0) return false;
        const u64 q = cx.phi(k) + ph / 3 + 1;
        if (!cx.prime(q)) return false;
        const u64 r = cx.nth(q) - q + 1;
        if (!cx.prime(r)) return false;
        const u64 s = cx.nth(r) - r + 1;
        return cx.prime(s);
      });
    };
  }

  // ---- 3.20 ----
  {
    auto& e = add_entry(out, "c3.20", "3.20",
                        "a prime chain q_1 < ... < q_m exists with "
                        "q_{k+1} = p_{q_k} - q_k + 1 (n is the length m)",
                        Kind::ChainSearch, 2, 6);
    e.counts_witnesses = false;
    e.needs = [](u64, u64, u64) {
      // Sized for the default start bound; deeper links hit the cap and
      // surface as Exhausted rather than error.
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(nth_prime_upper(100'000)), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      ChainResult r = chain_search(cx, n, cx.budget().chain_start_bound);
      if (r.chain.empty())
        return Verdict::exhausted("no chain with q1 <= " +
                                  std::to_string(cx.budget().chain_start_bound));
      Verdict v = Verdict::holds1("q1", r.chain.front());
      v.witness_list = r.chain;
      return v;
    };
  }

  // ---- 3.21 ----
  {
    auto& e = add_entry(out, "c3.21.i", "3.21(i)",
                        "2k+1 and p_{kn} + kn are both prime for some "
                        "positive k < n",
                        Kind::ExistentialWitness, 6, 1'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(sat_mul(to, to)), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        if (!cx.prime(2 * k + 1)) return false;
        const u64 kn = cx.mul(k, n);
        return cx.prime(cx.nth(kn) + kn);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.21.ii", "3.21(ii)",
                        "n = k(k+1)/2 + m with p_{k(k+1)/2} + phi(m) prime",
                        Kind::Representation, 9, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(nth_prime_upper(to), 65536),
                         .mult_bound = to,
                         .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<std::pair<u64, u64>> first;
      for (u64 k = 1;; ++k) {
        const u64 tk = k * (k + 1) / 2;
        if (tk >= n) break;
        cx.frontier = k;
        const u64 m = n - tk;
        if (cx.prime(cx.nth(tk) + cx.phi(m))) {
          if (!first) first = {k, m};
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("k", first->first);
      v.witness.emplace_back("m", first->second);
      return v;
    };
  }

  // ---- 3.22 ----
  {
    auto& e = add_entry(out, "c3.22.i", "3.22(i)",
                        "n = k^2 + m with phi(k^2) + p_m prime",
                        Kind::Representation, 101, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(nth_prime_upper(to), 65536),
                         .mult_bound = to,
                         .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<std::pair<u64, u64>> first;
      for (u64 k = 1; k * k < n; ++k) {
        cx.frontier = k;
        const u64 m = n - k * k;
        if (cx.prime(cx.phi(k * k) + cx.nth(m))) {
          if (!first) first = {k, m};
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("k", first->first);
      v.witness.emplace_back("m", first->second);
      return v;
    };
  }
  {
    auto& e = add_entry(out, "c3.22.ii", "3.22(ii)",
                        "n = k^2 + m with sigma(k^2) + p_m - 1 prime, for n "
                        "other than 18",
                        Kind::ExceptionList, 7, 10'000);
    e.exceptions = {18};
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(nth_prime_upper(to), 65536),
                         .mult_bound = to,
                         .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<std::pair<u64, u64>> first;
      for (u64 k = 1; k * k < n; ++k) {
        cx.frontier = k;
        const u64 m = n - k * k;
        if (cx.prime(cx.sigma(k * k) + cx.nth(m) - 1)) {
          if (!first) first = {k, m};
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("k", first->first);
      v.witness.emplace_back("m", first->second);
      return v;
    };
  }

  // ---- 3.23 ----
  {
    auto& e = add_entry(out, "c3.23.i", "3.23(i)",
                        "some prime q < n has q+2 and p_{n-q} + q + 1 both "
                        "prime",
                        Kind::ExistentialWitness, 14, 10'000);
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "q", 2, n - 1, [&](u64 q) {
        return cx.prime(q + 2) && cx.prime(cx.nth(n - q) + q + 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.23.ii", "3.23(ii)",
                        "some prime q < n makes 3(p_{n-q}+q)-1 and "
                        "3(p_{n-q}+q)+1 twin primes, when n is not a "
                        "divisor of 12",
                        Kind::ExceptionList, 1, 10'000);
    e.exceptions = {1, 2, 3, 4, 6, 12};
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "q", 2, n - 1, [&](u64 q) {
        const u64 v = 3 * (cx.nth(n - q) + q);
        return cx.prime(v - 1) && cx.prime(v + 1);
      });
    };
  }

  // ---- 3.24 ----
  {
    auto& e = add_entry(out, "c3.24.i", "3.24(i)",
                        "n = a + b with the inverse of a mod p_a and of b "
                        "mod p_b both prime",
                        Kind::Representation, 4, 10'000);
    e.claimed_verified_bound = 100'000'000;
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      auto in_set = [&](u64 k) {
        return cx.prime(cx.inverse(k, cx.nth(k)));
      };
      std::optional<u64> first;
      for (u64 a = 1; a < n; ++a) {
        cx.frontier = a;
        if (in_set(a) && in_set(n - a)) {
          if (!first) first = a;
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("a", *first);
      v.witness.emplace_back("b", n - *first);
      return v;
    };
  }
  {
    auto& e = add_entry(out, "c3.24.ii", "3.24(ii)",
                        "n = a + b with a a primitive root mod p_a and b a "
                        "primitive root mod p_b",
                        Kind::Representation, 2, 10'000);
    e.claimed_verified_bound = 300'000;
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      auto in_set = [&](u64 k) { return cx.prim_root(k, cx.nth(k)); };
      std::optional<u64> first;
      for (u64 a = 1; a < n; ++a) {
        cx.frontier = a;
        if (in_set(a) && in_set(n - a)) {
          if (!first) first = a;
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("a", *first);
      v.witness.emplace_back("b", n - *first);
      return v;
    };
  }

  // ---- 3.25 ----
  {
    auto& e = add_entry(out, "c3.25.a", "3.25",
                        "pn is a primitive root modulo p_n for some prime "
                        "p < n",
                        Kind::ExistentialWitness, 7, 10'000);
    e.claimed_verified_bound = 200'000;
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return cx.prim_root(cx.mul(p, n) % pn, pn);
      });
    };
  }
  {
    auto& e = add_entry(out, "c3.25.b", "3.25",
                        "q(n-q) is a primitive root modulo p_n for some "
                        "prime q < n",
                        Kind::ExistentialWitness, 7, 10'000);
    e.claimed_verified_bound = 200'000;
    e.needs = needs_nth_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan_primes(cx, "q", 2, n - 1, [&](u64 q) {
        return cx.prim_root(cx.mul(q, n - q) % pn, pn);
      });
    };
  }
}

}  // namespace pcv::detail
