#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "pcv/catalog.hpp"

namespace pcv {

struct ProvisionOptions {
  u64 mem_budget = u64{2} << 30;  // bytes; sieve past this refuses the run
  u64 partition_cap = 20'000;     // table ceiling; deeper needs run Exhausted
  std::optional<std::filesystem::path> cache;  // sieve cache to reuse
  u64 min_sieve = 1'000;
};

// Owns the kernel tables for one run.
struct ProvisionedKernels {
  std::unique_ptr<PrimeTables> primes;
  std::unique_ptr<PartitionTable> parts;
  std::unique_ptr<SmallMultiplicativeTable> mult;
  std::unique_ptr<FactorCache> factors;
  bool cache_used = false;
  std::string note;  // human diagnostics (cache fallback etc.)

  Kernels handles() const {
    Kernels k;
    k.primes = primes.get();
    k.parts = parts.get();
    k.mult = mult.get();
    k.factors = factors.get();
    return k;
  }
};

// Memory footprint estimate for a need set, in bytes.
u64 estimate_memory(const KernelNeeds& needs);

// Builds (or reloads from cache) the tables an entry needs. Refuses runs
// whose sieve would blow the memory budget; the partition table is clamped
// to partition_cap so deeper queries surface as Exhausted verdicts.
ProvisionedKernels provision(const KernelNeeds& needs,
                             const ProvisionOptions& options = {});

}  // namespace pcv
