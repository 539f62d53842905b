#pragma once

#include <cstdint>
#include <string>

#include "pcv/arith.hpp"
#include "pcv/bignat.hpp"
#include "pcv/errors.hpp"
#include "pcv/modular.hpp"
#include "pcv/partition.hpp"
#include "pcv/primality.hpp"
#include "pcv/prime_tables.hpp"

namespace pcv {

// Read-only kernel handles shared by any number of workers. The factor
// cache is the only mutable part and is internally synchronized.
struct Kernels {
  const PrimeTables* primes = nullptr;
  const PartitionTable* parts = nullptr;
  const SmallMultiplicativeTable* mult = nullptr;
  FactorCache* factors = nullptr;
};

struct Budget {
  u64 steps = 10'000'000;           // kernel queries per n
  u64 bignum_bits = 1'000'000;      // operand-size cap for big primality
  u64 chain_start_bound = 100'000;  // q1 ceiling for the chain search
};

// Sink for counting every witness of one instance instead of stopping at
// the first (drives the witness-count sequence stats).
struct WitnessCollector {
  u64 count = 0;
  bool strict = false;  // c2.1.i.a remark variant: search k < n, not k <= n
};

// Per-instance evaluation state: counts one step per kernel query, raises
// BudgetExhausted when the step or bignum budget runs out, and records
// whether any probabilistic primality verdict participated.
class EvalContext {
 public:
  EvalContext(const Kernels& k, const Budget& b, u64 param = 0)
      : kernels_(k), budget_(b), param(param) {}

  const PrimeTables& tables() const { return *kernels_.primes; }
  bool has_parts() const { return kernels_.parts != nullptr; }

  u64 pi(u64 x) {
    step();
    return kernels_.primes->prime_count(x);
  }
  u64 nth(u64 i) {
    step();
    return kernels_.primes->nth_prime(i);
  }
  bool prime(u64 v) {
    step();
    return kernels_.primes->is_prime_u64(v);
  }
  bool prime_i128(u128 v) {
    if (v <= ~u64{0}) return prime(static_cast<u64>(v));
    BigNat big;
    mpz_import(big.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return prime_big(big);
  }
  bool prime_big(const BigNat& v) {
    step();
    check_bits(big_bits(v));
    bool wide = !v.fits_ulong_p();
    if (wide) probabilistic = true;
    return is_probable_prime_big(v);
  }
  // Least prime > after and <= max_inclusive, else 0.
  u64 next_prime_leq(u64 after, u64 max_inclusive) {
    if (after >= max_inclusive) return 0;
    step();
    u64 p = kernels_.primes->next_prime_after(after);
    return p <= max_inclusive ? p : 0;
  }
  u64 twin_upper(u64 x) {
    step();
    return kernels_.primes->twin_pair_count_upper(x);
  }
  u64 twin_lower(u64 x) {
    step();
    return kernels_.primes->twin_pair_count_lower(x);
  }
  u64 sg_count(u64 x) {
    step();
    return kernels_.primes->sophie_germain_count(x);
  }
  u64 squarefree(u64 x) {
    step();
    return kernels_.primes->squarefree_count(x);
  }
  u64 gauss(u64 x) {
    step();
    return kernels_.primes->gaussian_ideal_count(x);
  }
  u64 phi(u64 n) {
    step();
    if (kernels_.mult && n <= kernels_.mult->upto()) return kernels_.mult->phi(n);
    return euler_phi_u64(n);
  }
  u64 sigma(u64 n) {
    step();
    if (kernels_.mult && n <= kernels_.mult->upto()) return kernels_.mult->sigma(n);
    return divisor_sigma_u64(n);
  }
  const BigNat& part_p(u64 n) {
    step();
    require_parts(n);
    return kernels_.parts->partition_number(n);
  }
  const BigNat& part_q(u64 n) {
    step();
    require_parts(n);
    return kernels_.parts->strict_partition_number(n);
  }
  BigNat part_qbar(u64 n) {
    step();
    require_parts(n);
    return kernels_.parts->repeated_part_count(n);
  }
  bool partition_member(const BigNat& v) {
    step();
    require_parts(0);
    return kernels_.parts->is_partition_value(v);
  }
  bool strict_partition_member(const BigNat& v) {
    step();
    require_parts(0);
    return kernels_.parts->is_strict_partition_value(v);
  }
  bool prim_root(u64 g, u64 p) {
    step();
    if (p == 2) return g % 2 == 1;
    if (kernels_.factors) return is_primitive_root(g, p, kernels_.factors->get(p - 1));
    return is_primitive_root(g, p, factorize(p - 1));
  }
  u64 inverse(u64 a, u64 m) {
    step();
    return mod_inverse(a, m);
  }
  // k < 3*sqrt(n) + add, exact.
  bool below_3sqrt(u64 k, u64 n, u64 add) { return below_3sqrt_bound(k, n, add); }
  bool below_real(u64 candidate, RealBound kind, u64 n) {
    auto r = below_real_bound(candidate, kind, n);
    if (r.tie_admitted) tie_admitted = true;
    return r.below;
  }
  void check_bits(u64 bits) {
    if (bits > budget_.bignum_bits)
      throw BudgetExhausted{"bignum budget (" + std::to_string(budget_.bignum_bits) +
                                " bits) exceeded",
                            false};
  }
  // Checked product for kernel arguments; anything that overflows 64 bits
  // is beyond any provisionable table.
  u64 mul(u64 a, u64 b) {
    auto r = checked_mul_u64(a, b);
    if (!r)
      throw KernelLimitError("kernel argument overflows 64 bits", ~u64{0});
    return *r;
  }
  // Runs one candidate check; a soft budget trip (bignum/partition bound)
  // skips the candidate instead of aborting the scan, and the dispatcher
  // turns a witnessless result into Exhausted.
  template <class F>
  bool attempt(F f) {
    try {
      return f();
    } catch (const BudgetExhausted& e) {
      if (e.hard) throw;
      soft_exhausted = true;
      if (soft_note.empty()) soft_note = e.note;
      return false;
    }
  }

  u64 steps_used() const { return steps_used_; }
  const Budget& budget() const { return budget_; }

  u64 param = 0;
  u64 frontier = 0;          // search cursor, reported on exhaustion
  bool probabilistic = false;
  bool tie_admitted = false;
  bool soft_exhausted = false;  // a candidate was skipped on a soft budget
  std::string soft_note;
  WitnessCollector* collector = nullptr;

 private:
  void step() {
    if (steps_used_ >= budget_.steps)
      throw BudgetExhausted{"step budget (" + std::to_string(budget_.steps) +
                                ") exhausted",
                            true};
    ++steps_used_;
  }
  void require_parts(u64 n) {
    if (!kernels_.parts)
      throw KernelLimitError("partition kernel not provisioned", n);
    if (n > kernels_.parts->upto())
      throw BudgetExhausted{"partition bound " +
                                std::to_string(kernels_.parts->upto()) +
                                " exceeded (needed " + std::to_string(n) + ")",
                            false};
  }

  const Kernels& kernels_;
  const Budget& budget_;
  u64 steps_used_ = 0;
};

}  // namespace pcv
