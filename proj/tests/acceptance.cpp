// Acceptance suite: runs the artifact's acceptance criteria and prints one
// PASS/FAIL line per criterion. Returns the number of failed criteria.
//
//   pcv_acceptance [--only N] [--sub ID] [--heavy]
//
// --only restricts to one criterion; --sub restricts criterion 4 to one of
// its six desk runs; criterion 5 (the long anchor) runs only with --heavy.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "naive_eval.hpp"
#include "oracles.hpp"
#include "pcv/arith.hpp"
#include "pcv/catalog.hpp"
#include "pcv/errors.hpp"
#include "pcv/evaluate.hpp"
#include "pcv/modular.hpp"
#include "pcv/partition.hpp"
#include "pcv/provision.hpp"
#include "pcv/report_io.hpp"
#include "pcv/table_cache.hpp"
#include "pcv/verify.hpp"

using namespace pcv;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string label)
      : number_(number), label_(std::move(label)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      details_.push_back(detail);
    }
  }

  ~Criterion() {
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    std::printf("%s criterion-%d: %s (%.1f s)\n", ok_ ? "PASS" : "FAIL",
                number_, label_.c_str(), secs);
    for (const auto& d : details_) std::printf("       %s\n", d.c_str());
    if (!ok_) ++failures;
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string label_;
  bool ok_ = true;
  std::vector<std::string> details_;
  std::chrono::steady_clock::time_point start_;
};

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + PCV_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status), out};
}

std::string last_line(const std::string& s) {
  std::string last, line;
  std::istringstream is(s);
  while (std::getline(is, line))
    if (!line.empty()) last = line;
  return last;
}

// ---- criterion 1: exact fast-tier anchor values -------------------------

void criterion1() {
  Criterion c(1, "exact anchor values (fast tier)");
  auto t = PrimeTables::build(4'600'000);
  c.require(t.prime_count(0) == 0, "pi(0) != 0");
  c.require(t.prime_count(150) == 35, "pi(150) != 35");
  c.require(t.prime_count(350) == 70, "pi(350) != 70");
  c.require(t.prime_count(350) % t.prime_count(150) == 0, "35 does not divide 70");
  c.require(t.prime_count(4550901) == 319225, "pi(4550901) != 319225");
  c.require(319225 == u64{565} * 565, "319225 != 565^2");
  c.require(t.nth_prime(7) == 17, "p_7 != 17");
  c.require(t.is_prime_u64(24 + 17), "4! + p_7 = 41 not prime");

  FactorCache cache;
  Kernels k{&t, nullptr, nullptr, &cache};
  Budget b;
  const Verdict v = evaluate(lookup("c2.18.i"), k, 9, b);
  c.require(v.outcome == Outcome::Holds, "9 = p + q - pi(q) not found");
  c.require(v.witness.size() == 2 && v.witness[0].second == 5 &&
                v.witness[1].second == 7,
            "representation of 9 is not 7 + 5 - pi(5)");
}

// ---- criterion 2: exception and equality sets ---------------------------

void criterion2() {
  Criterion c(2, "exception list of c2.14.iii and equality set of c2.10");
  const auto& e14 = lookup("c2.14.iii");
  auto kern = provision(e14.needs(1, 200, 0));
  VerifyOptions opt;
  std::vector<u64> exempt_ns;
  opt.emit = [&](u64 n, const Verdict& v) {
    if (v.outcome == Outcome::Exempt) exempt_ns.push_back(n);
  };
  const RangeReport r14 = verify_range(e14, kern.handles(), 1, 200, opt);
  c.require(r14.fails == 0, "c2.14.iii has counterexamples below 200");
  c.require(exempt_ns == std::vector<u64>{25, 35, 44, 46, 105},
            "exempt set differs from {25,35,44,46,105}");

  const auto& e10 = lookup("c2.10");
  auto kern10 = provision(e10.needs(2, 300, 0));
  const RangeReport r10 = verify_range(e10, kern10.handles(), 2, 300, {});
  c.require(r10.fails == 0, "c2.10 fails below 300");
  c.require(r10.equality_ns == std::vector<u64>{2, 26},
            "equality witnesses differ from {2, 26}");
}

// ---- criterion 3: first witness of c3.7.i -------------------------------

void criterion3() {
  Criterion c(3, "first witness of c3.7.i is 22110");
  const auto& e = lookup("c3.7.i");
  auto kern = provision(e.needs(1, 22'110, 0));
  const RangeReport r = verify_range(e, kern.handles(), 1, 22'110, {});
  c.require(r.holds == 1, "expected exactly one witness up to 22110, got " +
                              std::to_string(r.holds));
  c.require(r.first_holds && *r.first_holds == 22'110,
            "first witness is not 22110");
  c.require(r.fails == 0 && r.exhausted == 0, "unexpected non-witness verdicts");
}

// ---- criterion 4: desk-scale no-counterexample runs ---------------------

struct DeskRun {
  const char* id;
  u64 from, to;
};

const std::vector<DeskRun>& desk_runs() {
  static const std::vector<DeskRun> runs = {
      {"c2.1.i", 2, 10'000},   {"c2.18.i", 4, 100'000}, {"c3.1", 3, 100'000},
      {"c3.2", 3, 100'000},    {"c4.10.i", 2, 99'999},  {"c3.25.a", 7, 10'000},
  };
  return runs;
}

void criterion4(const std::string& sub) {
  for (const auto& run : desk_runs()) {
    if (!sub.empty() && sub != run.id) continue;
    Criterion c(4, std::string("no counterexamples: ") + run.id + " on [" +
                       std::to_string(run.from) + ", " +
                       std::to_string(run.to) + "]");
    const auto& e = lookup(run.id);
    auto kern = provision(e.needs(run.from, run.to, e.param_default),
                          ProvisionOptions{.mem_budget = u64{3} << 30});
    const RangeReport r = verify_range(e, kern.handles(), run.from, run.to, {});
    c.require(r.fails == 0, "counterexamples found: " +
                                std::to_string(r.fails));
    c.require(r.exhausted == 0,
              "exhausted instances: " + std::to_string(r.exhausted));
    c.require(r.total() == run.to - run.from + 1, "tally mismatch");
  }
}

// ---- criterion 5: heavy anchor (flag-gated) ------------------------------

void criterion5() {
  Criterion c(5, "heavy anchors: pi_2(252427740) = 10^6 and c2.4.ii at 19939");
  const auto& e = lookup("c2.4.ii");
  auto kern = provision(e.needs(1, 19'939, 0),
                        ProvisionOptions{.mem_budget = u64{3} << 30});
  c.require(kern.primes->twin_pair_count_upper(252427740) == 1'000'000,
            "twin pair count at 252427740 is not 10^6");
  Budget b;
  const Verdict v = evaluate(e, kern.handles(), 19'939, b);
  c.require(v.outcome == Outcome::Holds, "c2.4.ii fails at 19939");
  c.require(v.primary() == 12'660, "least witness at 19939 is not 12660, got " +
                                       std::to_string(v.primary()));
}

// ---- criterion 6: oracle equivalence suites ------------------------------

void criterion6() {
  Criterion c(6, "oracle equivalence: counts, partitions, roots, inverses");
  auto t = PrimeTables::build(30'000);

  // Counting functions against running enumerations, all x <= 10^4.
  {
    oracle::NaiveKit kit(30'000);
    u64 twin_u = 0, twin_l = 0, sg = 0, sqf = 0;
    bool counts_ok = true;
    for (u64 x = 0; x <= 10'000; ++x) {
      if (x >= 5 && kit.prime(x) && kit.prime(x - 2)) ++twin_u;
      if (kit.prime(x) && kit.prime(x + 2)) ++twin_l;
      if (x >= 2 && kit.prime(x) && kit.prime(2 * x + 1)) ++sg;
      if (x >= 1) {
        bool squarefree = true;
        for (u64 d = 2; d * d <= x; ++d)
          if (x % (d * d) == 0) {
            squarefree = false;
            break;
          }
        if (squarefree) ++sqf;
      }
      counts_ok = counts_ok && t.prime_count(x) == kit.pi(x) &&
                  t.twin_pair_count_upper(x) == twin_u &&
                  t.twin_pair_count_lower(x) == twin_l &&
                  t.sophie_germain_count(x) == sg &&
                  t.squarefree_count(x) == sqf &&
                  t.gaussian_ideal_count(x) == kit.gauss(x);
      if (!counts_ok) {
        c.require(false, "count mismatch at x = " + std::to_string(x));
        break;
      }
    }
  }

  // Partitions: exhaustive enumeration to 60, dual recurrences to 500.
  {
    auto pt = PartitionTable::build(500);
    bool enum_ok = true;
    for (u64 n = 0; n <= 60 && enum_ok; ++n) {
      enum_ok = pt.partition_number(n) ==
                    static_cast<unsigned long>(
                        oracle::NaiveKit::enumerate_partitions(n)) &&
                pt.strict_partition_number(n) ==
                    static_cast<unsigned long>(
                        oracle::NaiveKit::enumerate_distinct_partitions(n));
    }
    c.require(enum_ok, "partition enumeration mismatch below 60");
    oracle::NaiveKit kit(10);
    kit.build_partitions(500);
    bool dp_ok = true;
    for (u64 n = 0; n <= 500 && dp_ok; ++n)
      dp_ok = pt.partition_number(n) == kit.p(n) &&
              pt.strict_partition_number(n) == kit.q(n);
    c.require(dp_ok, "recurrence disagreement below 500");
  }

  // Primitive-root verdicts and per-p counts for all p <= 1000.
  {
    oracle::NaiveKit kit(2'100);
    bool roots_ok = true;
    for (u64 p = 2; p <= 1000 && roots_ok; ++p) {
      if (!kit.prime(p)) continue;
      u64 count = 0;
      for (u64 g = 1; g < p; ++g) {
        const bool claimed = is_primitive_root(g, p);
        if (claimed != kit.prim_root(g, p)) roots_ok = false;
        if (claimed) ++count;
      }
      if (p > 2 && count != kit.phi(p - 1)) roots_ok = false;
      if (p == 2 && count != 1) roots_ok = false;
    }
    c.require(roots_ok, "primitive-root verdicts disagree with order counts");
  }

  // Modular inverse round trip on 10^5 random coprime pairs.
  {
    std::mt19937_64 rng(987654321);
    bool inv_ok = true;
    u64 tested = 0;
    while (tested < 100'000 && inv_ok) {
      const u64 m = 2 + rng() % 2'000'000'000ull;
      const u64 a = 1 + rng() % (m - 1);
      if (gcd_u64(a, m) != 1) continue;
      ++tested;
      const u64 x = mod_inverse(a, m);
      inv_ok = x >= 1 && x < m && mulmod_u64(a, x, m) == 1;
    }
    c.require(inv_ok, "modular inverse round trip failed");
  }
}

// ---- criterion 7: harness determinism ------------------------------------

void criterion7() {
  Criterion c(7, "harness determinism: jobs, kill/resume, cache round trip");

  // jobs=1 vs jobs=8, byte-identical reports.
  const std::string args =
      "verify c2.1.i --from 2 --to 2000 --witnesses all --chunk 64";
  const CliRun one = run_cli(args + " --jobs 1");
  const CliRun eight = run_cli(args + " --jobs 8");
  c.require(one.exit_code == 0 && eight.exit_code == 0,
            "verify runs did not exit cleanly");
  c.require(one.out == eight.out, "jobs=1 and jobs=8 reports differ");

  // Kill at a pseudo-random n, resume, compare final summaries.
  const auto cp = std::filesystem::temp_directory_path() /
                  ("pcv_acceptance_cp_" + std::to_string(::getpid()));
  std::mt19937_64 rng(
      static_cast<u64>(std::chrono::system_clock::now().time_since_epoch().count()));
  const u64 abort_at = 200 + rng() % 1500;
  const std::string base =
      "verify c2.1.i --from 2 --to 2000 --witnesses none --checkpoint-every 64";
  const CliRun full = run_cli(base);
  const CliRun aborted =
      run_cli(base + " --checkpoint " + cp.string(),
              "PCV_ABORT_AT=" + std::to_string(abort_at));
  c.require(aborted.exit_code == 9, "abort hook did not fire");
  const CliRun resumed = run_cli(base + " --checkpoint " + cp.string());
  c.require(resumed.exit_code == 0, "resumed run failed");
  c.require(last_line(resumed.out) == last_line(full.out),
            "resumed summary differs (killed at n = " +
                std::to_string(abort_at) + ")");
  std::filesystem::remove(cp);

  // Cache round trip across every kernel query type.
  {
    auto t = PrimeTables::build(400'000);
    const auto path = std::filesystem::temp_directory_path() /
                      ("pcv_acceptance_cache_" + std::to_string(::getpid()));
    save_tables(t, path);
    auto back = load_tables(path);
    std::mt19937_64 qrng(13579);
    bool same = back.limit() == t.limit();
    for (int i = 0; i < 10'000 && same; ++i) {
      const u64 x = qrng() % 400'001;
      same = back.prime_count(x) == t.prime_count(x) &&
             back.is_prime(x) == t.is_prime(x) &&
             back.twin_pair_count_upper(x) == t.twin_pair_count_upper(x) &&
             back.squarefree_count(x) == t.squarefree_count(x) &&
             back.gaussian_ideal_count(x) == t.gaussian_ideal_count(x);
      if (2 * x + 1 <= 400'000)
        same = same && back.sophie_germain_count(x) == t.sophie_germain_count(x);
    }
    c.require(same, "cache round trip changed kernel answers");
    std::filesystem::remove(path);
  }
}

// ---- criterion 8: witness minimality against the brute-force oracle ------

void criterion8() {
  Criterion c(8, "witness minimality vs brute force, all entries, n <= 200");

  KernelNeeds max_needs;
  for (const auto& e : catalog()) {
    const KernelNeeds n = e.needs(e.domain_start, 200, e.param_default);
    max_needs.sieve_limit = std::max(max_needs.sieve_limit, n.sieve_limit);
    max_needs.partition_bound =
        std::max(max_needs.partition_bound, n.partition_bound);
    max_needs.mult_bound = std::max(max_needs.mult_bound, n.mult_bound);
    max_needs.nth_service |= n.nth_service;
    max_needs.squarefree |= n.squarefree;
  }
  auto kern = provision(max_needs, ProvisionOptions{.mem_budget = u64{3} << 30});
  const Kernels k = kern.handles();

  oracle::NaiveKit kit(k.primes->limit());
  kit.build_partitions(max_needs.partition_bound);
  if (kit.prime_count_total() != k.primes->max_prime_index()) {
    c.require(false, "oracle and kernel sieves disagree on pi(limit)");
    return;
  }

  Budget budget;
  u64 compared = 0, skipped = 0;
  for (const auto& e : catalog()) {
    for (u64 n = e.domain_start; n <= 200; ++n) {
      if (std::find(e.exceptions.begin(), e.exceptions.end(), n) !=
          e.exceptions.end())
        continue;
      if (e.side && e.side(n, e.param_default) != nullptr) continue;

      const Verdict v = evaluate(e, k, n, budget);
      if (v.outcome == Outcome::Exhausted) {
        ++skipped;
        continue;
      }
      const oracle::NaiveResult naive = oracle::naive_evaluate(
          e.id, n, kit, e.param_default, budget.chain_start_bound,
          k.primes->limit(), kit.prime_count_total());
      if (naive.status == oracle::NaiveResult::Status::Skip) {
        ++skipped;
        continue;
      }
      ++compared;

      using S = oracle::NaiveResult::Status;
      if (v.outcome == Outcome::Holds) {
        if (naive.status != S::Holds) {
          c.require(false, e.id + " at n=" + std::to_string(n) +
                               ": engine holds, oracle does not");
          return;
        }
        if (naive.witness != v.witness) {
          std::string detail = e.id + " at n=" + std::to_string(n) +
                               ": witness mismatch (engine";
          for (auto& [name, val] : v.witness)
            detail += " " + name + "=" + std::to_string(val);
          detail += ", oracle";
          for (auto& [name, val] : naive.witness)
            detail += " " + name + "=" + std::to_string(val);
          detail += ")";
          c.require(false, detail);
          return;
        }
        if (!naive.list.empty() && naive.list != v.witness_list) {
          c.require(false, e.id + " at n=" + std::to_string(n) +
                               ": witness map/chain mismatch");
          return;
        }
      } else if (v.outcome == Outcome::Fails) {
        if (naive.status != S::Fails) {
          c.require(false, e.id + " at n=" + std::to_string(n) +
                               ": engine fails, oracle disagrees");
          return;
        }
      } else if (v.outcome == Outcome::Exempt) {
        if (naive.status != S::NotAWitness) {
          c.require(false, e.id + " at n=" + std::to_string(n) +
                               ": unexpected exempt verdict");
          return;
        }
      }
    }
  }
  std::printf("       compared %llu instances, skipped %llu budget-bound\n",
              static_cast<unsigned long long>(compared),
              static_cast<unsigned long long>(skipped));
  c.require(compared > 20'000, "comparison coverage unexpectedly small");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string sub;
  bool heavy = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--sub") == 0 && i + 1 < argc)
      sub = argv[++i];
    else if (std::strcmp(argv[i], "--heavy") == 0)
      heavy = true;
  }

  const auto want = [&](int n) { return only == 0 || only == n; };
  try {
    if (want(1)) criterion1();
    if (want(2)) criterion2();
    if (want(3)) criterion3();
    if (want(4)) criterion4(sub);
    if (want(5) && (heavy || only == 5)) {
      if (heavy)
        criterion5();
      else
        std::printf("SKIP criterion-5: heavy anchor (pass --heavy to run)\n");
    }
    if (want(6)) criterion6();
    if (want(7)) criterion7();
    if (want(8)) criterion8();
  } catch (const std::exception& e) {
    std::printf("FAIL unexpected error: %s\n", e.what());
    return 99;
  }
  return failures;
}
