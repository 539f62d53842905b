// primeconj: verification harness for a catalog of prime-combinatorics
// conjectures. Subcommands: tables, verify, sequence, catalog, chain.
//
// Exit codes for verify: 0 = all holds/exempt, 1 = any fails,
// 2 = any exhausted (and no fails), 3 = usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pcv/arith.hpp"
#include "pcv/catalog.hpp"
#include "pcv/errors.hpp"
#include "pcv/evaluate.hpp"
#include "pcv/provision.hpp"
#include "pcv/report_io.hpp"
#include "pcv/table_cache.hpp"
#include "pcv/verify.hpp"

namespace {

using pcv::u64;

// Numeric flags accept underscores as digit separators ("250_000_000").
u64 parse_u64(const std::string& text) {
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c == '_') continue;
    if (c < '0' || c > '9')
      throw pcv::UsageError("not a nonnegative integer: '" + text + "'");
    digits.push_back(c);
  }
  if (digits.empty())
    throw pcv::UsageError("not a nonnegative integer: '" + text + "'");
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(digits.c_str(), &end, 10);
  if (errno != 0 || end == nullptr || *end != '\0')
    throw pcv::UsageError("integer out of range: '" + text + "'");
  return static_cast<u64>(v);
}

std::optional<u64> parse_opt(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_u64(text);
}

std::optional<std::filesystem::path> cache_path_from(
    const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  if (const char* env = std::getenv("PCV_CACHE"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

void write_checkpoint_atomically(const pcv::Checkpoint& c,
                                 const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << pcv::checkpoint_to_json(c) << "\n";
    if (!out)
      throw pcv::ResourceError("cannot write checkpoint: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

struct VerifyArgs {
  std::string id;
  std::string from_s, to_s, param_s;
  unsigned jobs = 1;
  u64 budget_steps = 10'000'000;
  u64 bignum_bits = 1'000'000;
  u64 chain_bound = 100'000;
  u64 chunk = 256;
  std::string format = "jsonl";
  std::string witnesses = "all";
  std::string checkpoint;
  u64 checkpoint_every = u64{1} << 16;
  std::string cache;
  u64 mem_budget = u64{2} << 30;
  u64 partition_cap = 20'000;
  bool timing = false;
};

int run_verify(const VerifyArgs& args) {
  const pcv::ConjectureSpec& entry = pcv::lookup(args.id);
  const std::optional<u64> param = parse_opt(args.param_s);
  const u64 from = parse_opt(args.from_s).value_or(entry.domain_start);
  const u64 to = parse_opt(args.to_s).value_or(
      std::max<u64>(entry.desk_bound, from));
  if (from > to) throw pcv::UsageError("--from must not exceed --to");

  const pcv::ReportFormat format = args.format == "text"
                                       ? pcv::ReportFormat::Text
                                       : pcv::ReportFormat::Jsonl;
  if (args.format != "text" && args.format != "jsonl")
    throw pcv::UsageError("unknown format: " + args.format);
  if (args.witnesses != "all" && args.witnesses != "failures" &&
      args.witnesses != "first" && args.witnesses != "none")
    throw pcv::UsageError("unknown witness policy: " + args.witnesses);

  const pcv::KernelNeeds needs =
      entry.needs(from, to, param.value_or(entry.param_default));
  pcv::ProvisionOptions popt;
  popt.mem_budget = args.mem_budget;
  popt.partition_cap = args.partition_cap;
  popt.cache = cache_path_from(args.cache);
  auto kernels = pcv::provision(needs, popt);
  if (!kernels.note.empty()) std::cerr << "note: " << kernels.note << "\n";

  pcv::VerifyOptions vopt;
  vopt.jobs = args.jobs;
  vopt.budget.steps = args.budget_steps;
  vopt.budget.bignum_bits = args.bignum_bits;
  vopt.budget.chain_start_bound = args.chain_bound;
  vopt.param = param;
  vopt.chunk = args.chunk;
  vopt.checkpoint_every_n = args.checkpoint_every;

  if (const char* abort_env = std::getenv("PCV_ABORT_AT"); abort_env && *abort_env)
    vopt.abort_at_n = parse_u64(abort_env);

  pcv::Checkpoint resume_state;
  std::filesystem::path checkpoint_path;
  if (!args.checkpoint.empty()) {
    checkpoint_path = args.checkpoint;
    vopt.table_crc = pcv::tables_checksum(*kernels.primes);
    vopt.save_checkpoint = [&](const pcv::Checkpoint& c) {
      write_checkpoint_atomically(c, checkpoint_path);
    };
    std::error_code ec;
    if (std::filesystem::exists(checkpoint_path, ec)) {
      std::ifstream in(checkpoint_path);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      resume_state = pcv::checkpoint_from_json(text);
      vopt.resume = &resume_state;
      std::cerr << "resuming from checkpoint at n = " << resume_state.next_n
                << "\n";
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  bool first_emitted = false;
  vopt.emit = [&](u64 n, const pcv::Verdict& v) {
    bool print = false;
    if (args.witnesses == "all") {
      print = true;
    } else if (args.witnesses == "failures") {
      print = v.outcome == pcv::Outcome::Fails;
    } else if (args.witnesses == "first") {
      if (!first_emitted && v.outcome == pcv::Outcome::Holds) {
        print = true;
        first_emitted = true;
      }
    }
    if (!print) return;
    const u64 us = static_cast<u64>(
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    std::cout << pcv::verdict_record(entry.id, n, v, format, args.timing, us)
              << "\n";
  };

  pcv::RangeReport report =
      pcv::verify_range(entry, kernels.handles(), from, to, vopt);
  std::cout << pcv::summary_record(report, format) << "\n";
  std::cerr << "verified " << report.total() << " instances in "
            << report.elapsed_s << " s\n";

  if (report.fails > 0) return 1;
  if (report.exhausted > 0) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime-conjecture verification harness"};
  app.require_subcommand(1);

  // tables
  auto* tables_cmd =
      app.add_subcommand("tables", "sieve prime tables and cache them");
  std::string tables_limit, tables_out;
  tables_cmd->add_option("--limit", tables_limit, "sieve limit")->required();
  tables_cmd->add_option("--out", tables_out, "cache file path")->required();

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "verify one catalog entry over a range");
  VerifyArgs va;
  verify_cmd->add_option("id", va.id, "catalog entry id")->required();
  verify_cmd->add_option("--from", va.from_s, "first n (default: domain start)");
  verify_cmd->add_option("--to", va.to_s, "last n (default: desk bound)");
  verify_cmd->add_option("--jobs", va.jobs, "worker threads");
  std::string steps_s, bits_s, mem_s, chunk_s, cp_every_s, chain_s, pcap_s;
  verify_cmd->add_option("--budget-steps", steps_s, "kernel queries per n");
  verify_cmd->add_option("--bignum-bits", bits_s, "big operand bit cap");
  verify_cmd->add_option("--chain-bound", chain_s, "chain search q1 cap");
  verify_cmd->add_option("--chunk", chunk_s, "work unit size");
  verify_cmd->add_option("--format", va.format, "jsonl or text");
  verify_cmd->add_option("--witnesses", va.witnesses,
                         "records to stream: all, failures, first, none");
  verify_cmd->add_option("--checkpoint", va.checkpoint, "checkpoint file");
  verify_cmd->add_option("--checkpoint-every", cp_every_s,
                         "instances between checkpoints");
  verify_cmd->add_option("--cache", va.cache,
                         "sieve cache file (default: $PCV_CACHE)");
  verify_cmd->add_option("--mem-budget", mem_s, "table memory budget, bytes");
  verify_cmd->add_option("--partition-cap", pcap_s, "partition table cap");
  verify_cmd->add_option("--param", va.param_s, "entry parameter override");
  verify_cmd->add_flag("--timing", va.timing, "attach elapsed_us to records");

  // sequence
  auto* seq_cmd =
      app.add_subcommand("sequence", "per-n statistic stream for one entry");
  std::string seq_id, seq_stat = "witness-count", seq_to, seq_format = "plain",
              seq_param;
  seq_cmd->add_option("id", seq_id, "catalog entry id")->required();
  seq_cmd->add_option("--stat", seq_stat,
                      "witness-count, witness-count-strict, least-witness, "
                      "first-n");
  seq_cmd->add_option("--to", seq_to, "last n")->required();
  seq_cmd->add_option("--format", seq_format, "plain or jsonl");
  seq_cmd->add_option("--param", seq_param, "entry parameter override");

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "dump the conjecture catalog");
  std::string cat_format = "table";
  cat_cmd->add_option("--format", cat_format, "table or jsonl");

  // chain
  auto* chain_cmd =
      app.add_subcommand("chain", "search a prime chain q_{k+1} = p_{q_k} - q_k + 1");
  std::string chain_len, chain_start = "100_000", chain_mem;
  chain_cmd->add_option("--length", chain_len, "chain length m >= 2")->required();
  chain_cmd->add_option("--start-bound", chain_start, "largest q1 to try");
  chain_cmd->add_option("--mem-budget", chain_mem, "table memory budget, bytes");

  try {
    app.parse(argc, argv);

    if (*tables_cmd) {
      const u64 limit = parse_u64(tables_limit);
      pcv::PrimeTables t = pcv::PrimeTables::build(limit);
      pcv::save_tables(t, tables_out);
      std::cerr << "wrote tables to " << tables_out << " (limit " << limit
                << ", pi = " << t.prime_count(limit) << ")\n";
      return 0;
    }

    if (*verify_cmd) {
      if (!steps_s.empty()) va.budget_steps = parse_u64(steps_s);
      if (!bits_s.empty()) va.bignum_bits = parse_u64(bits_s);
      if (!chain_s.empty()) va.chain_bound = parse_u64(chain_s);
      if (!chunk_s.empty()) va.chunk = std::max<u64>(1, parse_u64(chunk_s));
      if (!cp_every_s.empty()) va.checkpoint_every = parse_u64(cp_every_s);
      if (!mem_s.empty()) va.mem_budget = parse_u64(mem_s);
      if (!pcap_s.empty()) va.partition_cap = parse_u64(pcap_s);
      return run_verify(va);
    }

    if (*seq_cmd) {
      const pcv::ConjectureSpec& entry = pcv::lookup(seq_id);
      const u64 to = parse_u64(seq_to);
      const std::optional<u64> param = parse_opt(seq_param);
      pcv::SeqStat stat;
      if (seq_stat == "witness-count") stat = pcv::SeqStat::WitnessCount;
      else if (seq_stat == "witness-count-strict") stat = pcv::SeqStat::WitnessCountStrict;
      else if (seq_stat == "least-witness") stat = pcv::SeqStat::LeastWitness;
      else if (seq_stat == "first-n") stat = pcv::SeqStat::FirstN;
      else throw pcv::UsageError("unknown stat: " + seq_stat);

      const pcv::KernelNeeds needs = entry.needs(
          entry.domain_start, to, param.value_or(entry.param_default));
      auto kernels = pcv::provision(needs);
      pcv::Budget budget;
      const auto seq = pcv::witness_count_sequence(entry, kernels.handles(),
                                                   stat, to, budget, param);
      if (seq_format == "jsonl") {
        u64 n = entry.domain_start;
        for (u64 v : seq) {
          if (stat == pcv::SeqStat::FirstN)
            std::cout << "{\"n\":" << v << "}\n";
          else
            std::cout << "{\"n\":" << n++ << ",\"value\":" << v << "}\n";
        }
      } else {
        for (u64 v : seq) std::cout << v << "\n";
      }
      return 0;
    }

    if (*cat_cmd) {
      const pcv::ReportFormat f = cat_format == "jsonl"
                                      ? pcv::ReportFormat::Jsonl
                                      : pcv::ReportFormat::Text;
      for (const auto& e : pcv::catalog())
        std::cout << pcv::catalog_record(e, f) << "\n";
      return 0;
    }

    if (*chain_cmd) {
      const u64 m = parse_u64(chain_len);
      if (m < 2) throw pcv::UsageError("chain length must be at least 2");
      const u64 bound = parse_u64(chain_start);
      pcv::KernelNeeds needs;
      // Size the prime tables for the first few links; deeper links that
      // outgrow the tables end the search as exhausted.
      u64 lim = bound;
      for (u64 i = 1; i < std::min<u64>(m, 4); ++i)
        lim = pcv::nth_prime_upper_bound(lim);
      needs.sieve_limit = lim + 65536;
      needs.nth_service = true;
      pcv::ProvisionOptions popt;
      if (!chain_mem.empty()) popt.mem_budget = parse_u64(chain_mem);
      // Clamp to the budget rather than refusing: a capped table still
      // searches honestly and reports exhaustion.
      while (pcv::estimate_memory(needs) > popt.mem_budget &&
             needs.sieve_limit > 1'000'000)
        needs.sieve_limit /= 2;
      auto kernels = pcv::provision(needs, popt);
      pcv::Budget budget;
      budget.steps = ~pcv::u64{0};
      const auto result = pcv::find_chain(m, bound, kernels.handles(), budget);
      if (result.chain.empty()) {
        std::cout << "exhausted (no chain with q1 <= " << bound << ")\n";
        return 2;
      }
      for (size_t i = 0; i < result.chain.size(); ++i)
        std::cout << (i ? " " : "") << result.chain[i];
      std::cout << "\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const pcv::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const pcv::KernelLimitError& e) {
    std::cerr << "kernel limit error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
