#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "pcv/catalog.hpp"
#include "pcv/verdict.hpp"

namespace pcv {

// Resumable run state. Resuming from a checkpoint reproduces the final
// report of an uninterrupted run exactly: evaluation is pure and the saved
// aggregates are everything the merged prefix contributed.
struct Checkpoint {
  std::string id;
  u64 from = 0, to = 0;
  u64 next_n = 0;
  u64 holds = 0, fails = 0, exempt = 0, exhausted = 0;
  std::vector<u64> counterexamples;
  std::vector<u64> equality_ns;
  std::optional<u64> first_holds;
  WitnessStats witnesses;
  u64 probabilistic = 0;
  // Kernel and run fingerprint; resume refuses a mismatch.
  u64 sieve_limit = 0;
  std::uint32_t table_crc = 0;
  u64 partition_bound = 0;
  u64 steps = 0;
  u64 bignum_bits = 0;
  u64 param = 0;
};

std::string checkpoint_to_json(const Checkpoint& c);
Checkpoint checkpoint_from_json(const std::string& text);

struct VerifyOptions {
  unsigned jobs = 1;
  Budget budget;
  std::optional<u64> param;
  u64 chunk = 256;  // contiguous n per work unit

  // Called in ascending n for every evaluated instance.
  std::function<void(u64 n, const Verdict&)> emit;

  // Checkpointing: save_checkpoint fires every checkpoint_every_n merged
  // instances or checkpoint_every_s seconds, whichever comes first.
  const Checkpoint* resume = nullptr;
  std::function<void(const Checkpoint&)> save_checkpoint;
  u64 checkpoint_every_n = u64{1} << 16;
  double checkpoint_every_s = 10.0;
  std::uint32_t table_crc = 0;  // recorded into checkpoints

  // Fault-injection hook for resume tests: hard-exits the process right
  // after emitting instance n.
  u64 abort_at_n = 0;
};

// Aggregates evaluate() over [from, to]. Work is partitioned into
// contiguous chunks across `jobs` workers sharing the read-only kernels;
// results merge back in ascending n, so reports are identical for any
// worker count.
RangeReport verify_range(const ConjectureSpec& entry, const Kernels& kernels,
                         u64 from, u64 to, const VerifyOptions& options = {});

}  // namespace pcv
