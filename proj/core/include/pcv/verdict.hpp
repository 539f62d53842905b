#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcv/intmath.hpp"

namespace pcv {

enum class Outcome { Holds, Fails, Exempt, Exhausted };

const char* outcome_name(Outcome o);

// Per-n outcome of one conjecture instance. A Holds verdict carries the
// least witness in the entry's declared search order: named scalars in
// `witness` (the first one is the search variable) plus, for map- or
// chain-shaped witnesses, the sequence in `witness_list`. Fails carries
// nothing; the fully searched range is implied by the entry.
struct Verdict {
  Outcome outcome = Outcome::Fails;
  std::vector<std::pair<std::string, u64>> witness;
  std::vector<u64> witness_list;
  std::string note;            // exempt reason / exhaustion frontier
  bool probabilistic = false;  // a big-integer primality verdict participated
  bool equality = false;       // inequality entries: bound attained exactly

  static Verdict holds() {
    Verdict v;
    v.outcome = Outcome::Holds;
    return v;
  }
  static Verdict holds1(const char* name, u64 value) {
    Verdict v = holds();
    v.witness.emplace_back(name, value);
    return v;
  }
  static Verdict fails() { return Verdict{}; }
  static Verdict exempt(std::string reason) {
    Verdict v;
    v.outcome = Outcome::Exempt;
    v.note = std::move(reason);
    return v;
  }
  static Verdict exhausted(std::string frontier) {
    Verdict v;
    v.outcome = Outcome::Exhausted;
    v.note = std::move(frontier);
    return v;
  }

  // First witness scalar, 0 when the verdict carries none.
  u64 primary() const { return witness.empty() ? 0 : witness.front().second; }
};

struct WitnessStats {
  u64 min = 0, max = 0, count = 0;
  u64 sum = 0;
  void add(u64 w) {
    if (count == 0) {
      min = max = w;
    } else {
      if (w < min) min = w;
      if (w > max) max = w;
    }
    ++count;
    sum += w;
  }
  double mean() const {
    return count ? static_cast<double>(sum) / static_cast<double>(count) : 0.0;
  }
};

// Aggregate of a verification run over [from, to]. Tallies sum to
// to - from + 1; counterexamples are ascending and nonempty iff fails > 0.
struct RangeReport {
  std::string id;
  u64 from = 0, to = 0;
  u64 holds = 0, fails = 0, exempt = 0, exhausted = 0;
  std::vector<u64> counterexamples;
  std::vector<u64> equality_ns;
  std::optional<u64> first_holds;
  WitnessStats witnesses;
  u64 probabilistic = 0;
  u64 checkpoint_cursor = 0;
  double elapsed_s = 0.0;

  u64 total() const { return holds + fails + exempt + exhausted; }
};

}  // namespace pcv
