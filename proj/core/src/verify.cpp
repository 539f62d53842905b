#include "pcv/verify.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pcv/errors.hpp"
#include "pcv/evaluate.hpp"

namespace pcv {

namespace {

using nlohmann::ordered_json;

void require_match(bool ok, const char* what) {
  if (!ok)
    throw UsageError(std::string("checkpoint does not match this run: ") +
                     what);
}

}  // namespace

std::string checkpoint_to_json(const Checkpoint& c) {
  ordered_json j;
  j["schema"] = "pcv-checkpoint-1";
  j["id"] = c.id;
  j["from"] = c.from;
  j["to"] = c.to;
  j["next_n"] = c.next_n;
  j["holds"] = c.holds;
  j["fails"] = c.fails;
  j["exempt"] = c.exempt;
  j["exhausted"] = c.exhausted;
  j["counterexamples"] = c.counterexamples;
  j["equality_ns"] = c.equality_ns;
  if (c.first_holds)
    j["first_holds"] = *c.first_holds;
  else
    j["first_holds"] = nullptr;
  j["witness_min"] = c.witnesses.min;
  j["witness_max"] = c.witnesses.max;
  j["witness_sum"] = c.witnesses.sum;
  j["witness_count"] = c.witnesses.count;
  j["probabilistic"] = c.probabilistic;
  j["sieve_limit"] = c.sieve_limit;
  j["table_crc"] = c.table_crc;
  j["partition_bound"] = c.partition_bound;
  j["steps"] = c.steps;
  j["bignum_bits"] = c.bignum_bits;
  j["param"] = c.param;
  return j.dump();
}

Checkpoint checkpoint_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ResourceError(std::string("unparsable checkpoint: ") + e.what());
  }
  if (j.value("schema", "") != "pcv-checkpoint-1")
    throw ResourceError("unknown checkpoint schema");
  Checkpoint c;
  c.id = j.at("id").get<std::string>();
  c.from = j.at("from").get<u64>();
  c.to = j.at("to").get<u64>();
  c.next_n = j.at("next_n").get<u64>();
  c.holds = j.at("holds").get<u64>();
  c.fails = j.at("fails").get<u64>();
  c.exempt = j.at("exempt").get<u64>();
  c.exhausted = j.at("exhausted").get<u64>();
  c.counterexamples = j.at("counterexamples").get<std::vector<u64>>();
  c.equality_ns = j.at("equality_ns").get<std::vector<u64>>();
  if (!j.at("first_holds").is_null())
    c.first_holds = j.at("first_holds").get<u64>();
  c.witnesses.min = j.at("witness_min").get<u64>();
  c.witnesses.max = j.at("witness_max").get<u64>();
  c.witnesses.sum = j.at("witness_sum").get<u64>();
  c.witnesses.count = j.at("witness_count").get<u64>();
  c.probabilistic = j.at("probabilistic").get<u64>();
  c.sieve_limit = j.at("sieve_limit").get<u64>();
  c.table_crc = j.at("table_crc").get<std::uint32_t>();
  c.partition_bound = j.at("partition_bound").get<u64>();
  c.steps = j.at("steps").get<u64>();
  c.bignum_bits = j.at("bignum_bits").get<u64>();
  c.param = j.at("param").get<u64>();
  return c;
}

RangeReport verify_range(const ConjectureSpec& entry, const Kernels& kernels,
                         u64 from, u64 to, const VerifyOptions& options) {
  if (from > to) throw UsageError("verify_range requires from <= to");
  const auto t0 = std::chrono::steady_clock::now();

  RangeReport report;
  report.id = entry.id;
  report.from = from;
  report.to = to;

  u64 start_n = from;
  if (options.resume) {
    const Checkpoint& c = *options.resume;
    require_match(c.id == entry.id, "id");
    require_match(c.from == from && c.to == to, "range");
    require_match(c.sieve_limit == kernels.primes->limit(), "sieve limit");
    require_match(options.table_crc == 0 || c.table_crc == 0 ||
                      c.table_crc == options.table_crc,
                  "table checksum");
    require_match(c.steps == options.budget.steps &&
                      c.bignum_bits == options.budget.bignum_bits,
                  "budget");
    require_match(c.param == options.param.value_or(entry.param_default),
                  "param");
    start_n = std::max(start_n, c.next_n);
    report.holds = c.holds;
    report.fails = c.fails;
    report.exempt = c.exempt;
    report.exhausted = c.exhausted;
    report.counterexamples = c.counterexamples;
    report.equality_ns = c.equality_ns;
    report.first_holds = c.first_holds;
    report.witnesses = c.witnesses;
    report.probabilistic = c.probabilistic;
  }

  const u64 chunk = std::max<u64>(1, options.chunk);
  auto last_checkpoint = std::chrono::steady_clock::now();
  u64 since_checkpoint = 0;

  auto fold = [&](u64 n, const Verdict& v) {
    switch (v.outcome) {
      case Outcome::Holds:
        ++report.holds;
        if (!report.first_holds) report.first_holds = n;
        if (!v.witness.empty()) report.witnesses.add(v.primary());
        if (v.probabilistic) ++report.probabilistic;
        break;
      case Outcome::Fails:
        ++report.fails;
        report.counterexamples.push_back(n);
        break;
      case Outcome::Exempt:
        ++report.exempt;
        break;
      case Outcome::Exhausted:
        ++report.exhausted;
        break;
    }
    if (v.equality) report.equality_ns.push_back(n);
    if (options.emit) options.emit(n, v);
    if (options.abort_at_n != 0 && n == options.abort_at_n) std::_Exit(9);
  };

  auto maybe_checkpoint = [&](u64 next_n, bool force) {
    if (!options.save_checkpoint) return;
    const auto now = std::chrono::steady_clock::now();
    const double secs =
        std::chrono::duration<double>(now - last_checkpoint).count();
    if (!force && since_checkpoint < options.checkpoint_every_n &&
        secs < options.checkpoint_every_s)
      return;
    Checkpoint c;
    c.id = entry.id;
    c.from = from;
    c.to = to;
    c.next_n = next_n;
    c.holds = report.holds;
    c.fails = report.fails;
    c.exempt = report.exempt;
    c.exhausted = report.exhausted;
    c.counterexamples = report.counterexamples;
    c.equality_ns = report.equality_ns;
    c.first_holds = report.first_holds;
    c.witnesses = report.witnesses;
    c.probabilistic = report.probabilistic;
    c.sieve_limit = kernels.primes->limit();
    c.table_crc = options.table_crc;
    c.partition_bound = kernels.parts ? kernels.parts->upto() : 0;
    c.steps = options.budget.steps;
    c.bignum_bits = options.budget.bignum_bits;
    c.param = options.param.value_or(entry.param_default);
    options.save_checkpoint(c);
    last_checkpoint = now;
    since_checkpoint = 0;
  };

  if (start_n <= to) {
    const u64 total = to - start_n + 1;
    const u64 nchunks = (total + chunk - 1) / chunk;
    const unsigned jobs =
        std::max(1u, std::min<unsigned>(options.jobs,
                                        static_cast<unsigned>(nchunks)));
    if (jobs == 1) {
      for (u64 n = start_n; n <= to; ++n) {
        fold(n, evaluate(entry, kernels, n, options.budget, options.param));
        ++since_checkpoint;
        maybe_checkpoint(n + 1, false);
      }
    } else {
      std::mutex mu;
      std::condition_variable cv;
      std::map<u64, std::vector<Verdict>> done;
      std::atomic<u64> next_chunk{0};
      std::exception_ptr worker_error;

      auto work = [&] {
        while (true) {
          const u64 ci = next_chunk.fetch_add(1);
          if (ci >= nchunks) return;
          const u64 lo = start_n + ci * chunk;
          const u64 hi = std::min(to, lo + chunk - 1);
          std::vector<Verdict> verdicts;
          verdicts.reserve(hi - lo + 1);
          try {
            for (u64 n = lo; n <= hi; ++n)
              verdicts.push_back(
                  evaluate(entry, kernels, n, options.budget, options.param));
          } catch (...) {
            std::lock_guard lock(mu);
            if (!worker_error) worker_error = std::current_exception();
            cv.notify_all();
            return;
          }
          std::lock_guard lock(mu);
          done.emplace(ci, std::move(verdicts));
          cv.notify_all();
        }
      };

      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);

      for (u64 ci = 0; ci < nchunks; ++ci) {
        std::vector<Verdict> verdicts;
        {
          std::unique_lock lock(mu);
          cv.wait(lock, [&] {
            return done.count(ci) != 0 || worker_error != nullptr;
          });
          if (worker_error) break;
          verdicts = std::move(done.at(ci));
          done.erase(ci);
        }
        const u64 lo = start_n + ci * chunk;
        for (u64 i = 0; i < verdicts.size(); ++i) {
          fold(lo + i, verdicts[i]);
          ++since_checkpoint;
        }
        maybe_checkpoint(lo + verdicts.size(), false);
      }
      for (auto& t : pool) t.join();
      if (worker_error) std::rethrow_exception(worker_error);
    }
  }

  maybe_checkpoint(to + 1, true);
  report.checkpoint_cursor = to + 1;
  report.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace pcv
