#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcv {

// A query fell outside the domain a kernel table was built for. `needed`
// carries the limit that would have served the query.
class KernelLimitError : public std::runtime_error {
 public:
  KernelLimitError(const std::string& what, std::uint64_t needed)
      : std::runtime_error(what), needed_(needed) {}
  std::uint64_t needed() const { return needed_; }

 private:
  std::uint64_t needed_;
};

// Allocation or I/O failure while building/loading kernel state.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown inside predicate evaluation when a step or bignum budget runs out.
// Converted to an Exhausted verdict by the evaluator, never surfaced as an
// error and never conflated with a counterexample. `hard` marks the step
// budget (aborts the whole instance); soft trips (bignum size, partition
// bound) may skip just the offending candidate.
struct BudgetExhausted {
  std::string note;
  bool hard = true;
};

}  // namespace pcv
