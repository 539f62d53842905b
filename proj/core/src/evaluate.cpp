#include "pcv/evaluate.hpp"

#include <algorithm>

#include "eval_util.hpp"
#include "pcv/errors.hpp"

namespace pcv {

namespace detail {

ChainResult chain_search(EvalContext& cx, u64 m, u64 start_bound) {
  if (m < 2) throw UsageError("chain length must be at least 2");
  ChainResult result;
  if (start_bound < 2) {
    result.exhausted = true;
    return result;
  }
  const u64 nth_cap = cx.tables().max_prime_index();
  for (u64 q1 = 2; q1 != 0;
       q1 = (q1 < start_bound ? cx.next_prime_leq(q1, start_bound) : 0)) {
    cx.frontier = q1;
    result.frontier = q1;
    std::vector<u64> chain{q1};
    bool ok = true;
    for (u64 link = 1; link < m; ++link) {
      const u64 qk = chain.back();
      if (qk > nth_cap) {  // cannot extend within the provisioned tables
        ok = false;
        break;
      }
      const u64 next = cx.nth(qk) - qk + 1;
      if (!(next > qk && cx.prime(next))) {
        ok = false;
        break;
      }
      chain.push_back(next);
    }
    if (ok) {
      result.chain = std::move(chain);
      return result;
    }
  }
  result.exhausted = true;
  return result;
}

}  // namespace detail

Verdict evaluate(const ConjectureSpec& entry, const Kernels& kernels, u64 n,
                 const Budget& budget, std::optional<u64> param,
                 WitnessCollector* collector) {
  const u64 p = param.value_or(entry.param_default);
  if (n < entry.domain_start)
    return Verdict::exempt("below domain start " +
                           std::to_string(entry.domain_start));
  if (std::find(entry.exceptions.begin(), entry.exceptions.end(), n) !=
      entry.exceptions.end())
    return Verdict::exempt("listed exception");
  if (entry.side) {
    if (const char* reason = entry.side(n, p)) return Verdict::exempt(reason);
  }

  EvalContext cx(kernels, budget, p);
  cx.collector = collector;
  try {
    Verdict v = entry.eval(cx, n);
    if (v.outcome == Outcome::Fails && cx.soft_exhausted) {
      Verdict ex = Verdict::exhausted(cx.soft_note);
      ex.probabilistic = cx.probabilistic;
      return ex;
    }
    v.probabilistic = v.probabilistic || cx.probabilistic;
    if (cx.tie_admitted) {
      if (!v.note.empty()) v.note += "; ";
      v.note += "bound tie admitted conjecture-favorably";
    }
    return v;
  } catch (const BudgetExhausted& ex) {
    Verdict v = Verdict::exhausted(
        ex.note + "; search frontier " + std::to_string(cx.frontier));
    v.probabilistic = cx.probabilistic;
    return v;
  }
}

std::vector<u64> witness_count_sequence(const ConjectureSpec& entry,
                                        const Kernels& kernels, SeqStat stat,
                                        u64 to, const Budget& budget,
                                        std::optional<u64> param) {
  if ((stat == SeqStat::WitnessCount || stat == SeqStat::WitnessCountStrict) &&
      !entry.counts_witnesses)
    throw UsageError("entry " + entry.id +
                     " does not support the witness-count stat");
  if (stat == SeqStat::WitnessCountStrict && entry.id != "c2.1.i.a")
    throw UsageError("the strict witness-count variant is defined only for "
                     "c2.1.i.a");

  std::vector<u64> seq;
  for (u64 n = entry.domain_start; n <= to; ++n) {
    switch (stat) {
      case SeqStat::WitnessCount:
      case SeqStat::WitnessCountStrict: {
        WitnessCollector coll;
        coll.strict = stat == SeqStat::WitnessCountStrict;
        (void)evaluate(entry, kernels, n, budget, param, &coll);
        seq.push_back(coll.count);
        break;
      }
      case SeqStat::LeastWitness: {
        Verdict v = evaluate(entry, kernels, n, budget, param);
        seq.push_back(v.outcome == Outcome::Holds ? v.primary() : 0);
        break;
      }
      case SeqStat::FirstN: {
        Verdict v = evaluate(entry, kernels, n, budget, param);
        if (v.outcome == Outcome::Holds) seq.push_back(n);
        break;
      }
    }
  }
  return seq;
}

ChainResult find_chain(u64 m, u64 start_bound, const Kernels& kernels,
                       const Budget& budget) {
  EvalContext cx(kernels, budget);
  try {
    return detail::chain_search(cx, m, start_bound);
  } catch (const BudgetExhausted&) {
    ChainResult r;
    r.exhausted = true;
    r.frontier = cx.frontier;
    return r;
  }
}

}  // namespace pcv
