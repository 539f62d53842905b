#include <algorithm>
#include <optional>
#include <vector>

#include "eval_util.hpp"

// Catalog entries c2.*: combinatorial properties of pi(x).

namespace pcv::detail {

namespace {

// Least prime in the closed interval [lo, hi], 0 if none.
u64 least_prime_in(EvalContext& cx, u64 lo, u64 hi) {
  if (hi < 2 || lo > hi) return 0;
  if (lo <= 2) return 2;
  if (cx.tables().is_prime_u64(lo)) return lo;
  return cx.next_prime_leq(lo, hi);
}

Verdict enum_verdict(EvalContext& cx, bool qualifies, u64 n) {
  if (qualifies) {
    if (cx.collector) ++cx.collector->count;
    return Verdict::holds1("n", n);
  }
  return Verdict::exempt("not a qualifying witness");
}

KernelNeeds needs_n_squared(u64, u64 to, u64) {
  return KernelNeeds{.sieve_limit = sat_add(sat_mul(to, to), 65536)};
}

KernelNeeds needs_linear(u64, u64 to, u64) {
  return KernelNeeds{.sieve_limit = sat_add(to, 65536)};
}

}  // namespace

void add_section2(std::vector<ConjectureSpec>& out) {
  // ---- 2.1 ----
  {
    auto& e = add_entry(out, "c2.1.i.a", "2.1(i)",
                        "pi(kn) is prime for some k = 1..n",
                        Kind::ExistentialWitness, 2, 10'000);
    e.claimed_verified_bound = 20'000'000;
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      u64 hi = n;
      if (cx.collector && cx.collector->strict) hi = n - 1;
      return scan(cx, "k", 1, hi,
                  [&](u64 k) { return cx.prime(cx.pi(cx.mul(k, n))); });
    };
  }
  {
    auto& e = add_entry(out, "c2.1.i.b", "2.1(i)",
                        "some positive k < 3*sqrt(n)+3 has pi(kn) prime",
                        Kind::ExistentialWitness, 1, 10'000);
    e.claimed_verified_bound = 20'000'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(3 * isqrt_u64(to) + 4, to), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<u64> first;
      for (u64 k = 1; cx.below_3sqrt(k, n, 3); ++k) {
        cx.frontier = k;
        if (cx.prime(cx.pi(cx.mul(k, n)))) {
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
  // 2.1(ii): delta in {0, +1, -1}; n must exceed 5 / 3 / 6. The instance
  // delta is carried in param (encoded delta + 1).
  {
    struct Row {
      const char* id;
      u64 start;
      u64 encoded;  // delta + 1
      const char* stmt;
    };
    const Row rows[] = {
        {"c2.1.ii.d0", 6, 1, "some k < n has k^2+k-1 and pi(kn) both prime"},
        {"c2.1.ii.dp1", 4, 2, "some k < n has k^2+k-1 and pi(kn)+1 both prime"},
        {"c2.1.ii.dm1", 7, 0, "some k < n has k^2+k-1 and pi(kn)-1 both prime"},
    };
    for (const auto& row : rows) {
      auto& e = add_entry(out, row.id, "2.1(ii)", row.stmt,
                          Kind::ExistentialWitness, row.start, 3'000);
      e.param_name = 'd';
      e.param_default = row.encoded;
      e.needs = needs_n_squared;
      e.eval = [](EvalContext& cx, u64 n) {
        const long delta = static_cast<long>(cx.param) - 1;
        return scan(cx, "k", 1, n - 1, [&](u64 k) {
          if (!cx.prime_i128(static_cast<u128>(k) * k + k - 1)) return false;
          u64 v = cx.pi(cx.mul(k, n));
          if (delta < 0 && v == 0) return false;
          return cx.prime(delta < 0 ? v - 1 : v + static_cast<u64>(delta));
        });
      };
    }
  }

  // ---- 2.2 ----
  {
    auto& e = add_entry(out, "c2.2.i", "2.2(i)",
                        "pi(kn) == 0 (mod n) for some positive k < p_n",
                        Kind::ExistentialWitness, 1, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(nth_prime_upper(to), to), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan(cx, "k", 1, pn - 1,
                  [&](u64 k) { return cx.pi(cx.mul(k, n)) % n == 0; });
    };
  }
  {
    auto& e = add_entry(out, "c2.2.ii", "2.2(ii)",
                        "{pi(kn): k = 1..2 p_n} covers every residue mod n",
                        Kind::SetCover, 1, 2'000);
    e.counts_witnesses = false;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(2 * nth_prime_upper(to), to), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const u64 kmax = 2 * cx.nth(n);
      std::vector<u64> cover(n, 0);  // residue -> least covering k
      u64 remaining = n;
      u64 last_k = 0;
      for (u64 k = 1; k <= kmax && remaining > 0; ++k) {
        cx.frontier = k;
        u64 r = cx.pi(cx.mul(k, n)) % n;
        if (cover[r] == 0) {
          cover[r] = k;
          --remaining;
          last_k = k;
        }
      }
      if (remaining > 0) return Verdict::fails();
      Verdict v = Verdict::holds1("k_last", last_k);
      v.witness_list = std::move(cover);
      return v;
    };
  }

  // ---- 2.3 ----
  {
    auto& e = add_entry(
        out, "c2.3", "2.3",
        "pi(jn) divides pi(kn) for some 1 <= j < k <= n with k == 1 (mod j)",
        Kind::ExistentialWitness, 2, 3'000);
    e.claimed_verified_bound = 30'000;
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<std::pair<u64, u64>> first;
      for (u64 j = 1; j < n && (!first || cx.collector); ++j) {
        cx.frontier = j;
        const u64 pj = cx.pi(cx.mul(j, n));
        if (pj == 0) continue;
        for (u64 k = j + 1; k <= n; ++k) {
          if (k % j != 1 % j) continue;
          if (cx.pi(cx.mul(k, n)) % pj == 0) {
            if (!first) first = {j, k};
            if (cx.collector)
              ++cx.collector->count;
            else
              break;
          }
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("j", first->first);
      v.witness.emplace_back("k", first->second);
      return v;
    };
  }

  // ---- 2.4 ----
  {
    auto& e = add_entry(out, "c2.4.i", "2.4(i)",
                        "pi(kn) is a square for some positive k < p_n",
                        Kind::ExistentialWitness, 1, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(nth_prime_upper(to), to), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan(cx, "k", 1, pn - 1, [&](u64 k) {
        return shape_test(cx.pi(cx.mul(k, n)), Shape::Square);
      });
    };
  }
  {
    auto& e = add_entry(
        out, "c2.4.ii", "2.4(ii)",
        "the twin-pair count up to kn is a square for some k = 1..n",
        Kind::ExistentialWitness, 1, 2'000);
    e.claimed_verified_bound = 22'000;
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        return shape_test(cx.twin_upper(cx.mul(k, n)), Shape::Square);
      });
    };
  }

  // ---- 2.5 ----
  {
    auto& e = add_entry(out, "c2.5.i", "2.5(i)",
                        "kn + pi(kn) is prime for some positive k < n",
                        Kind::ExistentialWitness, 6, 10'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 kn = cx.mul(k, n);
        return cx.prime(kn + cx.pi(kn));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.5.ii", "2.5(ii)",
                        "p_{kn} - pi(kn) is prime for some k = 1..n",
                        Kind::ExistentialWitness, 1, 2'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(sat_mul(to, to)), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        const u64 kn = cx.mul(k, n);
        return cx.prime(cx.nth(kn) - cx.pi(kn));
      });
    };
  }

  // ---- 2.6 ----
  {
    auto& e = add_entry(out, "c2.6.i", "2.6(i)",
                        "pi(pi((p-1)n)) is prime for some prime p <= n",
                        Kind::ExistentialWitness, 3, 3'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n, [&](u64 p) {
        return cx.prime(cx.pi(cx.pi(cx.mul(p - 1, n))));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.6.ii.a", "2.6(ii)",
                        "pi(pi(kn)) is a square for some k = 1..n",
                        Kind::ExistentialWitness, 1, 3'000);
    e.claimed_verified_bound = 200'000;
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        return shape_test(cx.pi(cx.pi(cx.mul(k, n))), Shape::Square);
      });
    };
  }
  {
    auto& e = add_entry(
        out, "c2.6.ii.b", "2.6(ii)",
        "pi(pi(kn)) is triangular for some positive k <= (n+1)/2",
        Kind::ExistentialWitness, 1, 3'000);
    e.claimed_verified_bound = 100'000;
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, (n + 1) / 2, [&](u64 k) {
        return shape_test(cx.pi(cx.pi(cx.mul(k, n))), Shape::Triangular);
      });
    };
  }

  // ---- 2.7 ----
  {
    auto& e = add_entry(
        out, "c2.7.i", "2.7(i)",
        "pi(kn)^(1/k) > pi((k+1)n)^(1/(k+1)) for every k = 1..n",
        Kind::Inequality, 5, 1'000);
    e.counts_witnesses = false;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(sat_mul(to + 1, to), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      for (u64 k = 1; k <= n; ++k) {
        cx.frontier = k;
        const u64 a = cx.pi(cx.mul(k, n));
        const u64 b = cx.pi(cx.mul(k + 1, n));
        if (power_compare(a, k, b, k + 1) != std::strong_ordering::greater)
          return Verdict::fails();
      }
      return Verdict::holds1("k_checked", n);
    };
  }
  {
    auto& e = add_entry(
        out, "c2.7.ii", "2.7(ii)",
        "pi((k+1)n) - pi(kn) is a square for some k = 0..n-1",
        Kind::ExistentialWitness, 1, 3'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 0, n - 1, [&](u64 k) {
        return shape_test(cx.pi(cx.mul(k + 1, n)) - cx.pi(cx.mul(k, n)),
                          Shape::Square);
      });
    };
  }

  // ---- 2.8 ----
  {
    auto& e = add_entry(out, "c2.8.i.a", "2.8(i)",
                        "pi(pn) - pi((p-1)n) is prime for some prime p < n",
                        Kind::ExistentialWitness, 4, 3'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return cx.prime(cx.pi(cx.mul(p, n)) - cx.pi(cx.mul(p - 1, n)));
      });
    };
  }
  {
    auto& e = add_entry(
        out, "c2.8.i.b", "2.8(i)",
        "pi((p+1)/2 n) - pi((p-1)/2 n) is prime for some odd prime p <= n",
        Kind::ExistentialWitness, 4, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul((to + 1) / 2 + 1, to), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 3, n, [&](u64 p) {
        return cx.prime(cx.pi(cx.mul((p + 1) / 2, n)) -
                        cx.pi(cx.mul((p - 1) / 2, n)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.8.ii", "2.8(ii)",
                        "pi(kn)-pi((k-1)n) and pi((k+1)n)-pi(kn) are both "
                        "prime for some k = 1..n-1",
                        Kind::ExistentialWitness, 4, 3'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 mid = cx.pi(cx.mul(k, n));
        return cx.prime(mid - cx.pi(cx.mul(k - 1, n))) &&
               cx.prime(cx.pi(cx.mul(k + 1, n)) - mid);
      });
    };
  }

  // ---- 2.9 ----
  {
    auto& e = add_entry(out, "c2.9.i", "2.9(i)",
                        "pi(kn), pi((k+1)n), pi((k+2)n) form an arithmetic "
                        "progression for some positive k < n",
                        Kind::ExistentialWitness, 2, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(sat_mul(to + 1, to), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 a = cx.pi(cx.mul(k, n));
        const u64 b = cx.pi(cx.mul(k + 1, n));
        const u64 c = cx.pi(cx.mul(k + 2, n));
        return b - a == c - b;
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.9.ii", "2.9(ii)",
                        "pi(kn)..pi((k+3)n) form a four-term arithmetic "
                        "progression for some positive k < p_n",
                        Kind::ExistentialWitness, 5, 2'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(nth_prime_upper(to) + 3, to), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan(cx, "k", 1, pn - 1, [&](u64 k) {
        const u64 a = cx.pi(cx.mul(k, n));
        const u64 b = cx.pi(cx.mul(k + 1, n));
        const u64 c = cx.pi(cx.mul(k + 2, n));
        const u64 d = cx.pi(cx.mul(k + 3, n));
        return b - a == c - b && c - b == d - c;
      });
    };
  }

  // ---- 2.10 ----
  {
    auto& e = add_entry(
        out, "c2.10", "2.10",
        "|{pi((k+1)n)-pi(kn): k = 0..n-1}| >= sqrt(n-1), equality only at "
        "n = 2 and n = 26",
        Kind::Inequality, 1, 3'000);
    e.counts_witnesses = false;
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::vector<u64> diffs;
      diffs.reserve(n);
      u64 prev = 0;
      for (u64 k = 1; k <= n; ++k) {
        cx.frontier = k;
        const u64 cur = cx.pi(cx.mul(k, n));
        diffs.push_back(cur - prev);
        prev = cur;
      }
      std::sort(diffs.begin(), diffs.end());
      diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
      const u64 s = diffs.size();
      if (static_cast<u128>(s) * s < n - 1) return Verdict::fails();
      Verdict v = Verdict::holds1("distinct", s);
      v.equality = static_cast<u128>(s) * s == n - 1;
      return v;
    };
  }

  // ---- 2.11 ----
  {
    auto& e = add_entry(out, "c2.11", "2.11",
                        "pi(p), pi(p+n), pi(p+2n) form a nontrivial "
                        "arithmetic progression for some prime p <= p_n",
                        Kind::ExistentialWitness, 2, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(to) + 2 * to, 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan_primes(cx, "p", 2, pn, [&](u64 p) {
        const u64 a = cx.pi(p);
        const u64 b = cx.pi(p + n);
        const u64 c = cx.pi(p + 2 * n);
        return b - a == c - b && b > a;
      });
    };
  }

  // ---- 2.12 ----
  {
    auto& e = add_entry(out, "c2.12.i.a", "2.12(i)",
                        "n = k + m with pi(km) prime",
                        Kind::Representation, 11, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul((to + 1) / 2, (to + 1) / 2), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(cx.pi(cx.mul(k, m)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.12.i.b", "2.12(i)",
                        "n = k + m with pi(k^2 m) prime",
                        Kind::Representation, 11, 600);
    e.needs = [](u64, u64 to, u64) {
      const u64 t3 = sat_mul(sat_mul(to, to), to);
      return KernelNeeds{.sieve_limit = sat_add(t3 / 27 * 4 + to, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(cx.pi(cx.mul(cx.mul(k, k), m)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.12.ii.a", "2.12(ii)",
                        "n = k + m with pi(2k)-pi(k) and pi(2m)-pi(m) both "
                        "prime",
                        Kind::Representation, 10, 100'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(cx.pi(2 * k) - cx.pi(k)) &&
               cx.prime(cx.pi(2 * m) - cx.pi(m));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.12.ii.b", "2.12(ii)",
                        "n = k + m with pi(2k)-pi(k) prime and pi(2m)-pi(m) "
                        "a square",
                        Kind::Representation, 5, 100'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(cx.pi(2 * k) - cx.pi(k)) &&
               shape_test(cx.pi(2 * m) - cx.pi(m), Shape::Square);
      });
    };
  }

  // ---- 2.13 ----
  {
    auto& e = add_entry(out, "c2.13.i", "2.13(i)",
                        "n = k + m with the twin-pair count up to km prime",
                        Kind::Representation, 6, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul((to + 1) / 2, (to + 1) / 2), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.prime(cx.twin_upper(cx.mul(k, m)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.13.ii", "2.13(ii)",
                        "n = k + m with the twin-pair count up to km flanked "
                        "by twin primes",
                        Kind::Representation, 9, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul((to + 1) / 2, (to + 1) / 2), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        const u64 t = cx.twin_upper(cx.mul(k, m));
        return t >= 1 && cx.prime(t - 1) && cx.prime(t + 1);
      });
    };
  }

  // ---- 2.14 ----
  {
    auto& e = add_entry(
        out, "c2.14.i", "2.14(i)",
        "{pi(k^2): k = 1..2p_{n+1}-3} covers every residue mod n",
        Kind::SetCover, 1, 1'000);
    e.counts_witnesses = false;
    e.needs = [](u64, u64 to, u64) {
      const u64 kmax = 2 * nth_prime_upper(to + 1);
      return KernelNeeds{.sieve_limit = sat_add(sat_mul(kmax, kmax), 65536),
                         .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const u64 kmax = 2 * cx.nth(n + 1) - 3;
      std::vector<u64> cover(n, 0);
      u64 remaining = n;
      u64 last_k = 0;
      for (u64 k = 1; k <= kmax && remaining > 0; ++k) {
        cx.frontier = k;
        const u64 r = cx.pi(cx.mul(k, k)) % n;
        if (cover[r] == 0) {
          cover[r] = k;
          --remaining;
          last_k = k;
        }
      }
      if (remaining > 0) return Verdict::fails();
      Verdict v = Verdict::holds1("k_last", last_k);
      v.witness_list = std::move(cover);
      return v;
    };
  }
  {
    auto& e = add_entry(out, "c2.14.ii", "2.14(ii)",
                        "the sequence pi(n^2)^(1/n) is strictly decreasing "
                        "from n = 3",
                        Kind::Inequality, 3, 5'000);
    e.counts_witnesses = false;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(to + 1, to + 1), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const u64 a = cx.pi(cx.mul(n, n));
      const u64 b = cx.pi(cx.mul(n + 1, n + 1));
      if (power_compare(a, n, b, n + 1) != std::strong_ordering::greater)
        return Verdict::fails();
      return Verdict::holds1("pi_n2", a);
    };
  }
  {
    auto& e = add_entry(out, "c2.14.iii", "2.14(iii)",
                        "the interval [pi(n^2), pi((n+1)^2)] contains a "
                        "prime, except for five listed n",
                        Kind::ExceptionList, 1, 10'000);
    e.exceptions = {25, 35, 44, 46, 105};
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(to + 1, to + 1), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const u64 lo = cx.pi(cx.mul(n, n));
      const u64 hi = cx.pi(cx.mul(n + 1, n + 1));
      const u64 p = least_prime_in(cx, lo, hi);
      if (p == 0) return Verdict::fails();
      if (cx.collector) ++cx.collector->count;
      return Verdict::holds1("p", p);
    };
  }

  // ---- 2.15 ----
  {
    auto& e = add_entry(out, "c2.15.i", "2.15(i)",
                        "pi(k) and pi(k^2) are both prime for some k with "
                        "n < k < 2n",
                        Kind::ExistentialWitness, 9, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(2 * to, 2 * to), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", n + 1, 2 * n - 1, [&](u64 k) {
        return cx.prime(cx.pi(k)) && cx.prime(cx.pi(cx.mul(k, k)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.15.ii", "2.15(ii)",
                        "infinitely many primes p have pi(p), pi(pi(p)) and "
                        "pi(p^2) all prime (witness enumeration)",
                        Kind::WitnessEnumeration, 1, 3'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const bool ok = cx.prime(n) && cx.prime(cx.pi(n)) &&
                      cx.prime(cx.pi(cx.pi(n))) &&
                      cx.prime(cx.pi(cx.mul(n, n)));
      return enum_verdict(cx, ok, n);
    };
  }
  {
    auto& e = add_entry(out, "c2.15.iii", "2.15(iii)",
                        "for each n some prime p has pi(kp) prime for all "
                        "k = 1..n (least such p reported)",
                        Kind::WitnessEnumeration, 1, 50);
    e.counts_witnesses = false;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(sat_mul(to, 100'000), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const u64 cap = cx.tables().limit() / n;
      for (u64 p = 2; p != 0; p = cx.next_prime_leq(p, cap)) {
        cx.frontier = p;
        bool all = true;
        for (u64 k = 1; k <= n; ++k) {
          if (!cx.prime(cx.pi(k * p))) {
            all = false;
            break;
          }
        }
        if (all) return Verdict::holds1("p", p);
      }
      return Verdict::exhausted("no qualifying prime up to " +
                                std::to_string(cap));
    };
  }

  // ---- 2.16 ----
  {
    auto& e = add_entry(out, "c2.16.i", "2.16(i)",
                        "pi(n + k^a) is prime for some k = 1..n-1 "
                        "(parametrized exponent, default a = 2)",
                        Kind::ExistentialWitness, 2, 3'000);
    e.param_name = 'a';
    e.param_default = 2;
    e.needs = [](u64, u64 to, u64 a) {
      u64 arg = 1;
      for (u64 i = 0; i < a; ++i) arg = sat_mul(arg, to);
      return KernelNeeds{.sieve_limit = sat_add(sat_add(arg, to), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 a = cx.param;
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        u64 ka = 1;
        for (u64 i = 0; i < a; ++i) ka = cx.mul(ka, k);
        return cx.prime(cx.pi(n + ka));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.16.ii", "2.16(ii)",
                        "n + pi(k^2) is prime for some k = 1..n",
                        Kind::ExistentialWitness, 5, 3'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.prime(n + cx.pi(cx.mul(k, k)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.16.iii.a", "2.16(iii)",
                        "n^2 + pi(k^2) is prime for some 1 < k < n, when n "
                        "is not a divisor of 12",
                        Kind::ExceptionList, 1, 3'000);
    e.exceptions = {1, 2, 3, 4, 6, 12};
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 nn = cx.mul(n, n);
      return scan(cx, "k", 2, n - 1, [&](u64 k) {
        return cx.prime(nn + cx.pi(cx.mul(k, k)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.16.iii.b", "2.16(iii)",
                        "pi(n^2) + pi(k^2) is prime for some 1 < k < n",
                        Kind::ExistentialWitness, 5, 3'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 base = cx.pi(cx.mul(n, n));
      return scan(cx, "k", 2, n - 1, [&](u64 k) {
        return cx.prime(base + cx.pi(cx.mul(k, k)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.16.iii.c", "2.16(iii)",
                        "pi((k+1)^2)-pi(k^2) and pi(n^2)-pi(k^2) are both "
                        "prime for some positive k < n",
                        Kind::ExistentialWitness, 2, 3'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(sat_mul(to + 1, to + 1), 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 base = cx.pi(cx.mul(n, n));
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 pk2 = cx.pi(cx.mul(k, k));
        return cx.prime(cx.pi(cx.mul(k + 1, k + 1)) - pk2) &&
               cx.prime(base - pk2);
      });
    };
  }

  // ---- 2.17 ----
  {
    auto& e = add_entry(out, "c2.17.i.a", "2.17(i)",
                        "pn + pi(p) is prime for some prime p < n",
                        Kind::ExistentialWitness, 5, 100'000);
    e.claimed_verified_bound = 100'000'000;
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return cx.prime(cx.mul(p, n) + cx.pi(p));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.17.i.b", "2.17(i)",
                        "pn + pi(p) is prime for some prime "
                        "p < sqrt(2n) log(5n)",
                        Kind::ExistentialWitness, 1, 100'000);
    e.claimed_verified_bound = 100'000'000;
    e.needs = [](u64, u64 to, u64) {
      const long double b = sqrtl(2.0L * static_cast<long double>(to)) *
                            logl(5.0L * static_cast<long double>(to));
      return KernelNeeds{.sieve_limit =
                             sat_add(static_cast<u64>(b * 1.05L) + 64, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<u64> first;
      for (u64 p = 2; p != 0; p = cx.next_prime_leq(p, ~u64{0} >> 1)) {
        if (!cx.below_real(p, RealBound::Sqrt2nLog5n, n)) break;
        cx.frontier = p;
        if (cx.prime(cx.mul(p, n) + cx.pi(p))) {
          if (!first) first = p;
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      return first ? Verdict::holds1("p", *first) : Verdict::fails();
    };
  }
  {
    auto& e = add_entry(out, "c2.17.ii", "2.17(ii)",
                        "2 pi(p) - (-1)^n and pn + ((-1)^n - 3)/2 are both "
                        "prime for some prime p <= n",
                        Kind::ExistentialWitness, 3, 100'000);
    e.claimed_verified_bound = 100'000'000;
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      const bool even = n % 2 == 0;
      return scan_primes(cx, "p", 2, n, [&](u64 p) {
        const u64 t = 2 * cx.pi(p);
        const u64 first = even ? t - 1 : t + 1;
        const u64 sub = even ? 1 : 2;  // pn - 1 for even n, pn - 2 for odd
        const u64 pn = cx.mul(p, n);
        return cx.prime(first) && pn > sub && cx.prime(pn - sub);
      });
    };
  }

  // ---- 2.18 ----
  {
    auto& e = add_entry(out, "c2.18.i", "2.18(i)",
                        "n = p + q - pi(q) with odd primes p, q <= n",
                        Kind::Representation, 4, 100'000);
    e.claimed_verified_bound = 100'000'000;
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<std::pair<u64, u64>> first;  // (q, p)
      for (u64 q = 3; q != 0 && q <= n; q = cx.next_prime_leq(q, n)) {
        cx.frontier = q;
        const u64 p = n + cx.pi(q) - q;
        if (p >= 3 && p <= n && p % 2 == 1 && cx.prime(p)) {
          if (!first) first = {q, p};
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      if (!first) return Verdict::fails();
      Verdict v = Verdict::holds1("q", first->first);
      v.witness.emplace_back("p", first->second);
      return v;
    };
  }
  {
    auto& e = add_entry(out, "c2.18.ii", "2.18(ii)",
                        "n + p - pi(p) is prime for some prime p < n",
                        Kind::ExistentialWitness, 8, 100'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return cx.prime(n + p - cx.pi(p));
      });
    };
  }

  // ---- 2.19 ----
  {
    auto& e = add_entry(out, "c2.19.i", "2.19(i)",
                        "pi(p) and 2n - p are both prime for some prime "
                        "p < 2n",
                        Kind::ExistentialWitness, 3, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, 2 * n - 1, [&](u64 p) {
        return cx.prime(cx.pi(p)) && cx.prime(2 * n - p);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.19.ii", "2.19(ii)",
                        "2n - 1 = a + b + c with a, b, c primes whose pi "
                        "values are prime",
                        Kind::Representation, 37, 10'000);
    e.counts_witnesses = false;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const u64 target = 2 * n - 1;
      auto in_set = [&](u64 v) {
        return cx.prime(v) && cx.prime(cx.pi(v));
      };
      for (u64 a = 2; a != 0 && 3 * a <= target;
           a = cx.next_prime_leq(a, target / 3)) {
        cx.frontier = a;
        if (!in_set(a)) continue;
        for (u64 b = a; b != 0 && a + 2 * b <= target;
             b = cx.next_prime_leq(b, (target - a) / 2)) {
          if (!in_set(b)) continue;
          const u64 c = target - a - b;
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

  // ---- 2.20 ----
  {
    auto& e = add_entry(out, "c2.20.i.a", "2.20(i)",
                        "pi(n-p) is a Sophie Germain prime for some prime "
                        "p < n",
                        Kind::ExistentialWitness, 5, 10'000);
    e.claimed_verified_bound = 20'000'000;
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 m = cx.pi(n - p);
        return cx.prime(m) && cx.prime(2 * m + 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.20.i.b", "2.20(i)",
                        "pi(n-p) is flanked by twin primes for some prime "
                        "p < n",
                        Kind::ExistentialWitness, 9, 10'000);
    e.claimed_verified_bound = 20'000'000;
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 m = cx.pi(n - p);
        return m >= 1 && cx.prime(m - 1) && cx.prime(m + 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.20.ii.a", "2.20(ii)",
                        "3m-1, 3m+1, 3m+5 are all prime with m = pi(n-p) for "
                        "some prime p < n",
                        Kind::ExistentialWitness, 5, 10'000);
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 m = cx.pi(n - p);
        return m >= 1 && cx.prime(3 * m - 1) && cx.prime(3 * m + 1) &&
               cx.prime(3 * m + 5);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.20.ii.b", "2.20(ii)",
                        "3m-1, 3m+1, 3m-5 are all prime with m = pi(n-p) for "
                        "some prime p < n",
                        Kind::ExistentialWitness, 9, 10'000);
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 m = cx.pi(n - p);
        return m >= 2 && cx.prime(3 * m - 1) && cx.prime(3 * m + 1) &&
               cx.prime(3 * m - 5);
      });
    };
  }

  // ---- 2.21 ----
  {
    auto& e = add_entry(out, "c2.21.i", "2.21(i)",
                        "the Sophie Germain count of 1..n-p is itself a "
                        "Sophie Germain prime for some prime p < n",
                        Kind::ExistentialWitness, 5, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to + 1, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 r = cx.sg_count(n - p);
        return cx.prime(r) && cx.prime(2 * r + 1);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.21.ii", "2.21(ii)",
                        "the lower-member twin count r of 1..n-p gives twin "
                        "primes r, r+2 for some prime p < n",
                        Kind::ExistentialWitness, 13, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to + 2, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        const u64 r = cx.twin_lower(n - p);
        return cx.prime(r) && cx.prime(r + 2);
      });
    };
  }

  // ---- 2.22 ----
  {
    auto& e = add_entry(out, "c2.22.i.a", "2.22(i)",
                        "pi(n-p) is a square for some prime p < n",
                        Kind::ExistentialWitness, 3, 10'000);
    e.claimed_verified_bound = 500'000'000;
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return shape_test(cx.pi(n - p), Shape::Square);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.22.i.b", "2.22(i)",
                        "pi(n-p) is triangular for some prime p < n",
                        Kind::ExistentialWitness, 3, 10'000);
    e.needs = needs_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return shape_test(cx.pi(n - p), Shape::Triangular);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.22.ii", "2.22(ii)",
                        "pi(n+p) is a square for some prime p <= p_n",
                        Kind::ExistentialWitness, 3, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(to + nth_prime_upper(to), 65536),
          .nth_service = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      const u64 pn = cx.nth(n);
      return scan_primes(cx, "p", 2, pn, [&](u64 p) {
        return shape_test(cx.pi(n + p), Shape::Square);
      });
    };
  }

  // ---- 2.23 ----
  {
    auto& e = add_entry(out, "c2.23.i", "2.23(i)",
                        "the Sophie Germain count of 1..n-p is a square for "
                        "some prime p < n",
                        Kind::ExistentialWitness, 12, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to + 1, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return shape_test(cx.sg_count(n - p), Shape::Square);
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.23.ii", "2.23(ii)",
                        "the Sophie Germain count of 1..n-p is a cube for "
                        "some prime p < n",
                        Kind::ExistentialWitness, 54, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(2 * to + 1, 65536)};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return shape_test(cx.sg_count(n - p), Shape::Cube);
      });
    };
  }

  // ---- 2.24 ----
  {
    auto& e = add_entry(out, "c2.24.i", "2.24(i)",
                        "the squarefree count of 1..(p-1)n/2 is prime for "
                        "some odd prime p < 2n",
                        Kind::ExistentialWitness, 2, 2'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(sat_mul(to, to), 65536),
                         .squarefree = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 3, 2 * n - 1, [&](u64 p) {
        return cx.prime(cx.squarefree(cx.mul((p - 1) / 2, n)));
      });
    };
  }
  {
    auto& e = add_entry(out, "c2.24.ii", "2.24(ii)",
                        "the squarefree count of 1..n-p is prime for some "
                        "prime p < n",
                        Kind::ExistentialWitness, 4, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .squarefree = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return cx.prime(cx.squarefree(n - p));
      });
    };
  }

  // ---- 2.25 ----
  {
    auto& e = add_entry(out, "c2.25", "2.25",
                        "the number of Gaussian prime ideals with norm not "
                        "exceeding kn is a prime congruent to 1 modulo 4, "
                        "for some k = 1..n",
                        Kind::ExistentialWitness, 5, 2'000);
    e.needs = needs_n_squared;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        const u64 g = cx.gauss(cx.mul(k, n));
        return g % 4 == 1 && cx.prime(g);
      });
    };
  }
}

}  // namespace pcv::detail
