#include <algorithm>
#include <optional>
#include <vector>

#include "eval_util.hpp"

// Catalog entries c4.*: primes related to partition functions.

namespace pcv::detail {

namespace {

// Smallest partition-table size whose last entry exceeds `value`
// (log p(j) ~ 2.56 sqrt(j), padded).
u64 partition_index_for(u64 value) {
  const long double l = logl(static_cast<long double>(std::max<u64>(value, 2)));
  const long double j = (l / 2.56L) * (l / 2.56L) * 1.3L + 32;
  return static_cast<u64>(j);
}

const char* side_prime(u64 n, u64) {
  return is_prime_u64(n) ? nullptr : "prime n only";
}

KernelNeeds needs_part_linear(u64, u64 to, u64) {
  return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                     .partition_bound = to,
                     .bignum = true};
}

}  // namespace

void add_section4(std::vector<ConjectureSpec>& out) {
  // ---- 4.1 ----
  {
    auto& e = add_entry(out, "c4.1.i.a", "4.1(i)",
                        "p(n) + k is prime for some k = 1..n",
                        Kind::ExistentialWitness, 1, 10'000);
    e.claimed_verified_bound = 150'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const BigNat* pn = nullptr;
      cx.attempt([&] {
        pn = &cx.part_p(n);
        return true;
      });
      if (!pn) return Verdict::fails();
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.attempt([&] { return cx.prime_big(*pn + big_from_u64(k)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.1.i.b", "4.1(i)",
                        "q(n) + k is prime for some k = 1..n",
                        Kind::ExistentialWitness, 1, 10'000);
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const BigNat* qn = nullptr;
      cx.attempt([&] {
        qn = &cx.part_q(n);
        return true;
      });
      if (!qn) return Verdict::fails();
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.attempt([&] { return cx.prime_big(*qn + big_from_u64(k)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.1.ii.a", "4.1(ii)",
                        "p(n) + p(k) - 1 is prime for some 0 < k < n",
                        Kind::ExistentialWitness, 2, 10'000);
    e.claimed_verified_bound = 150'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const BigNat* pn = nullptr;
      cx.attempt([&] {
        pn = &cx.part_p(n);
        return true;
      });
      if (!pn) return Verdict::fails();
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt(
            [&] { return cx.prime_big(*pn + cx.part_p(k) - 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.1.ii.b", "4.1(ii)",
                        "p(k) + q(n) is prime for some 0 < k < n",
                        Kind::ExistentialWitness, 2, 10'000);
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      const BigNat* qn = nullptr;
      cx.attempt([&] {
        qn = &cx.part_q(n);
        return true;
      });
      if (!qn) return Verdict::fails();
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt([&] { return cx.prime_big(*qn + cx.part_p(k)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.1.ii.c", "4.1(ii)",
                        "n + p(k) is prime for some positive k < n",
                        Kind::ExistentialWitness, 8, 10'000);
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt(
            [&] { return cx.prime_big(cx.part_p(k) + big_from_u64(n)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.1.iii.a", "4.1(iii)",
                        "k p(n)(p(n)-1) + 1 is prime for some k = 1..n-1",
                        Kind::ExistentialWitness, 2, 3'000);
    e.claimed_verified_bound = 100'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      BigNat base;
      if (!cx.attempt([&] {
            base = cx.part_p(n) * (cx.part_p(n) - 1);
            return true;
          }))
        return Verdict::fails();
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt(
            [&] { return cx.prime_big(base * big_from_u64(k) + 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.1.iii.b", "4.1(iii)",
                        "p(k) p(n)(p(n)-1) + 1 is prime for some k = 1..n-1",
                        Kind::ExistentialWitness, 2, 3'000);
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      BigNat base;
      if (!cx.attempt([&] {
            base = cx.part_p(n) * (cx.part_p(n) - 1);
            return true;
          }))
        return Verdict::fails();
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt(
            [&] { return cx.prime_big(base * cx.part_p(k) + 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.1.iii.c", "4.1(iii)",
                        "p(k) p(n)(p(n)+1) - 1 is prime for some k = 1..n-1",
                        Kind::ExistentialWitness, 2, 3'000);
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      BigNat base;
      if (!cx.attempt([&] {
            base = cx.part_p(n) * (cx.part_p(n) + 1);
            return true;
          }))
        return Verdict::fails();
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt(
            [&] { return cx.prime_big(base * cx.part_p(k) - 1); });
      });
    };
  }

  // ---- 4.2 ----
  {
    auto& e = add_entry(out, "c4.2.i.a", "4.2(i)",
                        "2 p(n-q) + 1 is prime for some prime q < n",
                        Kind::ExistentialWitness, 3, 10'000);
    e.claimed_verified_bound = 100'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "q", 2, n - 1, [&](u64 q) {
        return cx.attempt(
            [&] { return cx.prime_big(2 * cx.part_p(n - q) + 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.2.i.b", "4.2(i)",
                        "2 p(n-q) - 1 is prime for some prime q < n",
                        Kind::ExistentialWitness, 4, 10'000);
    e.claimed_verified_bound = 100'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "q", 2, n - 1, [&](u64 q) {
        return cx.attempt(
            [&] { return cx.prime_big(2 * cx.part_p(n - q) - 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.2.ii.a", "4.2(ii)",
                        "q(n-p) + 1 is prime for some prime p < n",
                        Kind::ExistentialWitness, 3, 10'000);
    e.claimed_verified_bound = 100'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return cx.attempt([&] { return cx.prime_big(cx.part_q(n - p) + 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.2.ii.b", "4.2(ii)",
                        "q(n-p) - 1 is prime for some prime p < n",
                        Kind::ExistentialWitness, 7, 10'000);
    e.claimed_verified_bound = 100'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_primes(cx, "p", 2, n - 1, [&](u64 p) {
        return cx.attempt([&] { return cx.prime_big(cx.part_q(n - p) - 1); });
      });
    };
  }

  // ---- 4.3 ----
  {
    auto& e = add_entry(out, "c4.3.i", "4.3(i)",
                        "p(k + phi(n-k)/2) is prime for some positive "
                        "k < n-2",
                        Kind::ExistentialWitness, 128, 10'000);
    e.claimed_verified_bound = 25'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = to,
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 3, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 2 != 0) return false;
        return cx.attempt(
            [&] { return cx.prime_big(cx.part_p(k + ph / 2)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.3.ii", "4.3(ii)",
                        "q = phi(k)+phi(n-k)/2+1 and p(q-1) are both prime "
                        "for some positive k < n-2",
                        Kind::ExistentialWitness, 728, 10'000);
    e.claimed_verified_bound = 56'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = to,
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 3, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 2 != 0) return false;
        const u64 q = cx.phi(k) + ph / 2 + 1;
        if (!cx.prime(q)) return false;
        return cx.attempt([&] { return cx.prime_big(cx.part_p(q - 1)); });
      });
    };
  }

  // ---- 4.4 ----
  {
    auto& e = add_entry(out, "c4.4.i.a", "4.4(i)",
                        "p(n+k) + 1 is prime for some k = 1..n",
                        Kind::ExistentialWitness, 4, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = 2 * to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.attempt([&] { return cx.prime_big(cx.part_p(n + k) + 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.4.i.b", "4.4(i)",
                        "p(n+k) - 1 is prime for some k = 1..n",
                        Kind::ExistentialWitness, 16, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = 2 * to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.attempt([&] { return cx.prime_big(cx.part_p(n + k) - 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.4.ii", "4.4(ii)",
                        "n = k + m (k, m >= 3) with q(phi(k)phi(m)/4) + 1 "
                        "prime",
                        Kind::Representation, 6, 560);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = sat_mul(to, to) / 16 + 2,
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 3, [&](u64 k, u64 m) {
        const u128 prod = static_cast<u128>(cx.phi(k)) * cx.phi(m);
        if (prod % 4 != 0) return false;
        const u128 arg = prod / 4;
        if ((arg >> 64) != 0) {
          cx.soft_exhausted = true;
          if (cx.soft_note.empty())
            cx.soft_note = "partition argument beyond 64 bits";
          return false;
        }
        return cx.attempt([&] {
          return cx.prime_big(cx.part_q(static_cast<u64>(arg)) + 1);
        });
      });
    };
  }

  // ---- 4.5 ----
  {
    auto& e = add_entry(out, "c4.5.a", "4.5",
                        "n = k + m with p = p_k + phi(m) and q(p) - 1 both "
                        "prime",
                        Kind::Representation, 8, 1'500);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(to), 65536),
          .partition_bound = sat_add(nth_prime_upper(to), to),
          .mult_bound = to,
          .nth_service = true,
          .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        const u64 p = cx.nth(k) + cx.phi(m);
        if (!cx.prime(p)) return false;
        return cx.attempt([&] { return cx.prime_big(cx.part_q(p) - 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.5.b", "4.5",
                        "n = k + m with p = p_k + phi(m) and q(p) + 1 both "
                        "prime, for n other than 15",
                        Kind::ExceptionList, 8, 1'500);
    e.exceptions = {15};
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{
          .sieve_limit = sat_add(nth_prime_upper(to), 65536),
          .partition_bound = sat_add(nth_prime_upper(to), to),
          .mult_bound = to,
          .nth_service = true,
          .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        const u64 p = cx.nth(k) + cx.phi(m);
        if (!cx.prime(p)) return false;
        return cx.attempt([&] { return cx.prime_big(cx.part_q(p) + 1); });
      });
    };
  }

  // ---- 4.6 ----
  {
    auto& e = add_entry(out, "c4.6", "4.6",
                        "m-1, m+1 and q(m)+1 are all prime with "
                        "m = phi(k)+phi(n-k)/4, for some positive k < n",
                        Kind::ExistentialWitness, 60, 10'000);
    e.claimed_verified_bound = 100'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = to,
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 4 != 0) return false;
        const u64 m = cx.phi(k) + ph / 4;
        if (m < 2 || !cx.prime(m - 1) || !cx.prime(m + 1)) return false;
        return cx.attempt([&] { return cx.prime_big(cx.part_q(m) + 1); });
      });
    };
  }

  // ---- 4.7 ----
  {
    auto& e = add_entry(out, "c4.7.i", "4.7(i)",
                        "r = phi(k)+phi(n-k)/6+1 and p(r)+q(r) are both "
                        "prime for some positive k < n",
                        Kind::ExistentialWitness, 128, 10'000);
    e.claimed_verified_bound = 30'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = sat_add(to, 2),
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 6 != 0) return false;
        const u64 r = cx.phi(k) + ph / 6 + 1;
        if (!cx.prime(r)) return false;
        return cx.attempt(
            [&] { return cx.prime_big(cx.part_p(r) + cx.part_q(r)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.7.ii", "4.7(ii)",
                        "p(m)^2 + q(m)^2 is prime with the integer "
                        "m = phi(k)/2 + phi(n-k)/8, for some positive k < n",
                        Kind::ExistentialWitness, 18, 10'000);
    e.claimed_verified_bound = 65'000;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = to,
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 t = 4 * cx.phi(k) + cx.phi(n - k);
        if (t % 8 != 0) return false;
        const u64 m = t / 8;
        return cx.attempt([&] {
          const BigNat& pm = cx.part_p(m);
          const BigNat& qm = cx.part_q(m);
          return cx.prime_big(pm * pm + qm * qm);
        });
      });
    };
  }

  // ---- 4.8 ----
  {
    auto& e = add_entry(out, "c4.8.i", "4.8(i)",
                        "p = phi(k)/2 + phi(n-k)/12 + 1 and the repeated-"
                        "part count of p are both prime, for some positive "
                        "k < n",
                        Kind::ExistentialWitness, 99, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = sat_add(to, 2),
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        const u64 t = 6 * cx.phi(k) + cx.phi(n - k);
        if (t % 12 != 0) return false;
        const u64 p = t / 12 + 1;
        if (!cx.prime(p)) return false;
        return cx.attempt([&] { return cx.prime_big(cx.part_qbar(p)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.8.ii", "4.8(ii)",
                        "q(m)^2 plus the squared repeated-part count of m "
                        "is prime with m = k + phi(n-k)/2, for some "
                        "positive k < n-2",
                        Kind::ExistentialWitness, 4, 10'000);
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = to,
                         .mult_bound = to,
                         .bignum = true};
    };
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 3, [&](u64 k) {
        const u64 ph = cx.phi(n - k);
        if (ph % 2 != 0) return false;
        const u64 m = k + ph / 2;
        return cx.attempt([&] {
          const BigNat& qm = cx.part_q(m);
          const BigNat qb = cx.part_qbar(m);
          return cx.prime_big(qm * qm + qb * qb);
        });
      });
    };
  }

  // ---- 4.9 ----
  {
    auto& e = add_entry(out, "c4.9.i.a", "4.9(i)",
                        "k p(n) q(n) qbar(n) - 1 is prime for some k = 1..n",
                        Kind::ExistentialWitness, 2, 10'000);
    e.claimed_verified_bound = 83'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      BigNat base;
      if (!cx.attempt([&] {
            base = cx.part_p(n) * cx.part_q(n) * cx.part_qbar(n);
            return true;
          }))
        return Verdict::fails();
      return scan(cx, "k", 1, n, [&](u64 k) {
        return cx.attempt(
            [&] { return cx.prime_big(base * big_from_u64(k) - 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.9.i.b", "4.9(i)",
                        "2 p(k) p(n) q(n) qbar(n) + 1 is prime for some "
                        "k = 1..n-1",
                        Kind::ExistentialWitness, 2, 10'000);
    e.claimed_verified_bound = 50'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      BigNat base;
      if (!cx.attempt([&] {
            base = 2 * cx.part_p(n) * cx.part_q(n) * cx.part_qbar(n);
            return true;
          }))
        return Verdict::fails();
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt(
            [&] { return cx.prime_big(base * cx.part_p(k) + 1); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.9.ii", "4.9(ii)",
                        "n = k + m with q(k) plus the repeated-part count "
                        "of m prime",
                        Kind::Representation, 3, 10'000);
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan_split(cx, n, 1, [&](u64 k, u64 m) {
        return cx.attempt(
            [&] { return cx.prime_big(cx.part_q(k) + cx.part_qbar(m)); });
      });
    };
  }
  {
    auto& e = add_entry(out, "c4.9.iii", "4.9(iii)",
                        "2^k - 1 + q(n-k) is prime for some positive k < n",
                        Kind::ExistentialWitness, 2, 3'000);
    e.claimed_verified_bound = 200'000;
    e.needs = needs_part_linear;
    e.eval = [](EvalContext& cx, u64 n) {
      return scan(cx, "k", 1, n - 1, [&](u64 k) {
        return cx.attempt([&] {
          cx.check_bits(k + 64);
          return cx.prime_big(big_pow2(k) - 1 + cx.part_q(n - k));
        });
      });
    };
  }

  // ---- 4.10 ----
  {
    auto& e = add_entry(out, "c4.10.i", "4.10(i)",
                        "every prime p has a primitive root g < p that is a "
                        "partition number",
                        Kind::ExistentialWitness, 2, 100'000);
    e.claimed_verified_bound = 20'000'000;
    e.side_note = "prime n only";
    e.side = side_prime;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = partition_index_for(to)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<u64> first;
      for (u64 j = 1;; ++j) {
        cx.frontier = j;
        u64 g = 0;
        const bool in_range = cx.attempt([&] {
          const BigNat& v = cx.part_p(j);
          if (v >= static_cast<unsigned long>(n)) return false;
          g = static_cast<u64>(v.get_ui());
          return true;
        });
        if (!in_range) break;
        if (cx.prim_root(g, n)) {
          if (!first) first = g;
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      return first ? Verdict::holds1("g", *first) : Verdict::fails();
    };
  }
  {
    auto& e = add_entry(out, "c4.10.ii", "4.10(ii)",
                        "every prime p > 3 has a primitive root g < p that "
                        "is a strict partition number",
                        Kind::ExistentialWitness, 5, 100'000);
    e.claimed_verified_bound = 5'000'000;
    e.side_note = "prime n only";
    e.side = side_prime;
    e.needs = [](u64, u64 to, u64) {
      return KernelNeeds{.sieve_limit = sat_add(to, 65536),
                         .partition_bound = partition_index_for(to)};
    };
    e.eval = [](EvalContext& cx, u64 n) -> Verdict {
      std::optional<u64> first;
      u64 prev = 0;
      for (u64 j = 1;; ++j) {
        cx.frontier = j;
        u64 g = 0;
        const bool in_range = cx.attempt([&] {
          const BigNat& v = cx.part_q(j);
          if (v >= static_cast<unsigned long>(n)) return false;
          g = static_cast<u64>(v.get_ui());
          return true;
        });
        if (!in_range) break;
        if (g == prev) continue;  // q repeats values; count each once
        prev = g;
        if (cx.prim_root(g, n)) {
          if (!first) first = g;
          if (cx.collector)
            ++cx.collector->count;
          else
            break;
        }
      }
      return first ? Verdict::holds1("g", *first) : Verdict::fails();
    };
  }
}

}  // namespace pcv::detail
