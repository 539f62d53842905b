#include <doctest.h>

#include <sstream>
#include <vector>

#include "pcv/catalog.hpp"
#include "pcv/provision.hpp"
#include "pcv/report_io.hpp"
#include "pcv/verify.hpp"

using namespace pcv;

TEST_SUITE_BEGIN("verify");

namespace {

const ProvisionedKernels& kernels_1m() {
  static const ProvisionedKernels k = [] {
    KernelNeeds needs;
    needs.sieve_limit = 1'000'000;
    return provision(needs);
  }();
  return k;
}

std::string run_to_string(const ConjectureSpec& e, u64 from, u64 to,
                          unsigned jobs, u64 chunk = 64) {
  VerifyOptions opt;
  opt.jobs = jobs;
  opt.chunk = chunk;
  std::ostringstream os;
  opt.emit = [&](u64 n, const Verdict& v) {
    os << verdict_record(e.id, n, v, ReportFormat::Jsonl) << "\n";
  };
  const RangeReport r = verify_range(e, kernels_1m().handles(), from, to, opt);
  os << summary_record(r, ReportFormat::Jsonl) << "\n";
  return os.str();
}

}  // namespace

TEST_CASE("worker count does not change the report") {
  const auto& e = lookup("c2.1.i");
  const std::string one = run_to_string(e, 2, 800, 1);
  const std::string four = run_to_string(e, 2, 800, 4);
  const std::string eight = run_to_string(e, 2, 800, 8, 17);
  CHECK(one == four);
  CHECK(one == eight);
}

TEST_CASE("emission is ascending and tallies sum") {
  const auto& e = lookup("c2.22.i.a");
  VerifyOptions opt;
  opt.jobs = 4;
  opt.chunk = 8;
  u64 prev = 0;
  u64 records = 0;
  opt.emit = [&](u64 n, const Verdict&) {
    CHECK(n > prev);
    prev = n;
    ++records;
  };
  const RangeReport r = verify_range(e, kernels_1m().handles(), 1, 500, opt);
  CHECK(records == 500);
  CHECK(r.total() == 500);
  CHECK(r.counterexamples.empty() == (r.fails == 0));
}

TEST_CASE("checkpoint resume reproduces the uninterrupted summary") {
  const auto& e = lookup("c2.1.i");
  const Kernels k = kernels_1m().handles();

  VerifyOptions ref_opt;
  const RangeReport reference = verify_range(e, k, 2, 600, ref_opt);
  const std::string ref_summary = summary_record(reference, ReportFormat::Jsonl);

  // Capture periodic checkpoints from a full run.
  std::vector<Checkpoint> saved;
  VerifyOptions cap_opt;
  cap_opt.checkpoint_every_n = 50;
  cap_opt.save_checkpoint = [&](const Checkpoint& c) { saved.push_back(c); };
  (void)verify_range(e, k, 2, 600, cap_opt);
  REQUIRE(saved.size() >= 3);

  // Resume from a mid-run state, as if the first run had been killed there.
  const Checkpoint mid = saved[saved.size() / 2];
  CHECK(mid.next_n > 2);
  CHECK(mid.next_n <= 600);
  VerifyOptions res_opt;
  res_opt.resume = &mid;
  const RangeReport resumed = verify_range(e, k, 2, 600, res_opt);
  CHECK(summary_record(resumed, ReportFormat::Jsonl) == ref_summary);
}

TEST_CASE("checkpoint json round trip") {
  Checkpoint c;
  c.id = "c2.1.i.a";
  c.from = 2;
  c.to = 1000;
  c.next_n = 512;
  c.holds = 400;
  c.exempt = 10;
  c.counterexamples = {77};
  c.fails = 1;
  c.witnesses.add(3);
  c.witnesses.add(9);
  c.first_holds = 2;
  c.sieve_limit = 123456;
  c.table_crc = 0xdeadbeef;
  c.steps = 1000;
  c.bignum_bits = 64;
  const Checkpoint back = checkpoint_from_json(checkpoint_to_json(c));
  CHECK(back.id == c.id);
  CHECK(back.next_n == c.next_n);
  CHECK(back.holds == c.holds);
  CHECK(back.counterexamples == c.counterexamples);
  CHECK(back.witnesses.sum == c.witnesses.sum);
  CHECK(back.witnesses.count == c.witnesses.count);
  CHECK(back.first_holds == c.first_holds);
  CHECK(back.table_crc == c.table_crc);
  CHECK_THROWS_AS(checkpoint_from_json("{"), ResourceError);
  CHECK_THROWS_AS(checkpoint_from_json("{\"schema\":\"other\"}"), ResourceError);
}

TEST_CASE("resume refuses a mismatched fingerprint") {
  const auto& e = lookup("c2.1.i");
  const Kernels k = kernels_1m().handles();
  Checkpoint c;
  c.id = "c2.1.i.a";
  c.from = 2;
  c.to = 600;
  c.next_n = 100;
  c.sieve_limit = 999;  // wrong
  c.steps = Budget{}.steps;
  c.bignum_bits = Budget{}.bignum_bits;
  VerifyOptions opt;
  opt.resume = &c;
  CHECK_THROWS_AS(verify_range(e, k, 2, 600, opt), UsageError);
}

TEST_SUITE_END();
