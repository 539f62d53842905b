#include "pcv/provision.hpp"

#include <cmath>

#include "pcv/errors.hpp"
#include "pcv/table_cache.hpp"

namespace pcv {

namespace {

u64 approx_pi(u64 x) {
  if (x < 17) return 6;
  const double lx = std::log(static_cast<double>(x));
  return static_cast<u64>(static_cast<double>(x) / (lx - 1.1)) + 16;
}

}  // namespace

u64 estimate_memory(const KernelNeeds& needs) {
  const u64 limit = needs.sieve_limit;
  u64 bytes = limit / 16 + limit / 8192 * 8 + (1 << 20);
  if (needs.nth_service) bytes += approx_pi(limit) * 8;
  if (needs.squarefree) bytes += limit / 8 + limit / 8192 * 8;
  if (needs.partition_bound > 0) {
    const double b = static_cast<double>(needs.partition_bound);
    bytes += static_cast<u64>(32.0 * b + 1.5 * b * std::sqrt(b));
  }
  bytes += needs.mult_bound * 16;
  return bytes;
}

ProvisionedKernels provision(const KernelNeeds& needs,
                             const ProvisionOptions& options) {
  KernelNeeds clamped = needs;
  if (clamped.partition_bound > options.partition_cap) {
    clamped.partition_bound = options.partition_cap;
  }
  const u64 estimate = estimate_memory(clamped);
  if (estimate > options.mem_budget)
    throw ResourceError(
        "run needs about " + std::to_string(estimate) +
        " bytes of tables (sieve limit " + std::to_string(clamped.sieve_limit) +
        "), over the memory budget of " + std::to_string(options.mem_budget) +
        "; raise --mem-budget or shrink the range");

  ProvisionedKernels out;
  const u64 limit = std::max(clamped.sieve_limit, options.min_sieve);

  if (options.cache) {
    std::error_code ec;
    if (std::filesystem::exists(*options.cache, ec)) {
      PrimeTables loaded = load_tables(*options.cache);
      if (loaded.limit() >= limit) {
        out.primes = std::make_unique<PrimeTables>(std::move(loaded));
        out.cache_used = true;
      } else {
        out.note = "cache limit " + std::to_string(loaded.limit()) +
                   " below required " + std::to_string(limit) +
                   "; sieving fresh tables";
      }
    }
  }
  if (!out.primes) out.primes = std::make_unique<PrimeTables>(PrimeTables::build(limit));

  if (needs.partition_bound > 0)
    out.parts = std::make_unique<PartitionTable>(
        PartitionTable::build(clamped.partition_bound));
  if (needs.mult_bound > 0)
    out.mult = std::make_unique<SmallMultiplicativeTable>(
        SmallMultiplicativeTable::build(needs.mult_bound));
  out.factors = std::make_unique<FactorCache>();
  return out;
}

}  // namespace pcv
