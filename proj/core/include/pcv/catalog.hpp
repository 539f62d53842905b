#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcv/kernels.hpp"
#include "pcv/verdict.hpp"

namespace pcv {

enum class Kind {
  ExistentialWitness,
  Representation,
  Inequality,
  SetCover,
  SetEquality,
  ExceptionList,
  WitnessEnumeration,
  ChainSearch,
};

const char* kind_name(Kind k);

// Resource plan an entry needs for a verification range; monotone in the
// range endpoints. sieve_limit is the largest prime-table argument, the
// bounds size the partition and phi/sigma tables, and the service flags
// drive the memory estimate (prime list, squarefree index).
struct KernelNeeds {
  u64 sieve_limit = 0;
  u64 partition_bound = 0;
  u64 mult_bound = 0;
  bool nth_service = false;
  bool squarefree = false;
  bool bignum = false;
};

// One sub-assertion of the catalog: a pure witness-producing predicate over
// n together with its metadata. `eval` never sees n below domain_start, in
// the exception set, or rejected by the side condition; the dispatcher
// returns Exempt for those.
struct ConjectureSpec {
  std::string id;
  std::string anchor;     // conjecture number, e.g. "2.14(iii)"
  std::string statement;  // the claim itself
  Kind kind = Kind::ExistentialWitness;
  u64 domain_start = 1;
  std::vector<u64> exceptions;
  std::string side_note;  // human description of the side condition, if any
  u64 claimed_verified_bound = 0;  // bound the source reports as checked
  u64 desk_bound = 10'000;         // default verification ceiling
  char param_name = '\0';
  u64 param_default = 0;

  KernelNeeds (*needs)(u64 from, u64 to, u64 param) = nullptr;
  Verdict (*eval)(EvalContext&, u64 n) = nullptr;
  // Returns an exempt reason when the side condition rejects n.
  const char* (*side)(u64 n, u64 param) = nullptr;
  bool counts_witnesses = true;  // supports the witness-count stat
};

// The full registry in catalog order.
const std::vector<ConjectureSpec>& catalog();

// Exact id lookup; null when absent.
const ConjectureSpec* find_entry(std::string_view id);

// Exact lookup, falling back to the ".a" sub-entry for a bare id whose
// lettered variants exist (so "c2.1.i" resolves to "c2.1.i.a"). Throws
// UsageError for unknown ids.
const ConjectureSpec& lookup(std::string_view id);

}  // namespace pcv
