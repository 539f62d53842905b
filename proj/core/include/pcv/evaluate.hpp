#pragma once

#include <optional>
#include <vector>

#include "pcv/catalog.hpp"

namespace pcv {

// Evaluates one instance. Pure function of (entry, n, param): Exempt below
// the domain or in the exception set, otherwise the least witness in the
// entry's declared search order, Fails on a fully searched space, and
// Exhausted when a step/bignum/partition budget intervenes. Kernel
// under-provisioning surfaces as KernelLimitError.
Verdict evaluate(const ConjectureSpec& entry, const Kernels& kernels, u64 n,
                 const Budget& budget, std::optional<u64> param = std::nullopt,
                 WitnessCollector* collector = nullptr);

enum class SeqStat { WitnessCount, WitnessCountStrict, LeastWitness, FirstN };

// Per-n statistic stream for n = domain_start..to. WitnessCount scans the
// entry's whole witness space; LeastWitness emits 0 for non-Holds verdicts;
// FirstN returns the qualifying n themselves.
std::vector<u64> witness_count_sequence(const ConjectureSpec& entry,
                                        const Kernels& kernels, SeqStat stat,
                                        u64 to, const Budget& budget,
                                        std::optional<u64> param = std::nullopt);

struct ChainResult {
  std::vector<u64> chain;  // q1 < ... < qm, empty when exhausted
  bool exhausted = false;
  u64 frontier = 0;  // last q1 candidate examined
};

// Least-q1 prime chain of length m with q_{k+1} = p_{q_k} - q_k + 1; every
// link prime and strictly increasing. Exhausted when no chain starts at or
// below start_bound (or the tables cannot extend a candidate).
ChainResult find_chain(u64 m, u64 start_bound, const Kernels& kernels,
                       const Budget& budget);

}  // namespace pcv
