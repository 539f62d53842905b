#include "pcv/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace pcv {

namespace {

using nlohmann::ordered_json;

ordered_json witness_json(const Verdict& v) {
  ordered_json w = ordered_json::object();
  for (const auto& [name, value] : v.witness) w[name] = value;
  if (!v.witness_list.empty()) w["list"] = v.witness_list;
  return w;
}

}  // namespace

std::string verdict_record(const std::string& id, u64 n, const Verdict& v,
                           ReportFormat format, bool include_timing,
                           u64 elapsed_us) {
  if (format == ReportFormat::Jsonl) {
    ordered_json j;
    j["type"] = "verdict";
    j["id"] = id;
    j["n"] = n;
    j["verdict"] = outcome_name(v.outcome);
    if (v.outcome == Outcome::Holds) j["witness"] = witness_json(v);
    if (!v.note.empty()) j["note"] = v.note;
    if (v.equality) j["equality"] = true;
    j["probabilistic"] = v.probabilistic;
    if (include_timing) j["elapsed_us"] = elapsed_us;
    return j.dump();
  }
  std::ostringstream os;
  os << id << " n=" << n << " " << outcome_name(v.outcome);
  for (const auto& [name, value] : v.witness)
    os << " " << name << "=" << value;
  if (!v.witness_list.empty()) {
    os << " list=[";
    for (size_t i = 0; i < v.witness_list.size(); ++i)
      os << (i ? "," : "") << v.witness_list[i];
    os << "]";
  }
  if (v.equality) os << " equality";
  if (v.probabilistic) os << " probabilistic";
  if (!v.note.empty()) os << " (" << v.note << ")";
  if (include_timing) os << " elapsed_us=" << elapsed_us;
  return os.str();
}

std::string summary_record(const RangeReport& r, ReportFormat format) {
  if (format == ReportFormat::Jsonl) {
    ordered_json j;
    j["type"] = "summary";
    j["id"] = r.id;
    j["from"] = r.from;
    j["to"] = r.to;
    j["holds"] = r.holds;
    j["fails"] = r.fails;
    j["exempt"] = r.exempt;
    j["exhausted"] = r.exhausted;
    j["counterexamples"] = r.counterexamples;
    j["equality_ns"] = r.equality_ns;
    if (r.first_holds)
      j["first_holds"] = *r.first_holds;
    else
      j["first_holds"] = nullptr;
    j["witness_min"] = r.witnesses.min;
    j["witness_max"] = r.witnesses.max;
    j["witness_count"] = r.witnesses.count;
    j["witness_mean"] = r.witnesses.mean();
    j["probabilistic"] = r.probabilistic;
    j["checkpoint_cursor"] = r.checkpoint_cursor;
    return j.dump();
  }
  std::ostringstream os;
  os << "summary " << r.id << " [" << r.from << "," << r.to << "]"
     << " holds=" << r.holds << " fails=" << r.fails << " exempt=" << r.exempt
     << " exhausted=" << r.exhausted;
  if (!r.counterexamples.empty()) {
    os << " counterexamples=[";
    for (size_t i = 0; i < r.counterexamples.size(); ++i)
      os << (i ? "," : "") << r.counterexamples[i];
    os << "]";
  }
  if (!r.equality_ns.empty()) {
    os << " equality_ns=[";
    for (size_t i = 0; i < r.equality_ns.size(); ++i)
      os << (i ? "," : "") << r.equality_ns[i];
    os << "]";
  }
  if (r.first_holds) os << " first_holds=" << *r.first_holds;
  if (r.witnesses.count > 0)
    os << " witness_min=" << r.witnesses.min
       << " witness_max=" << r.witnesses.max
       << " witness_mean=" << r.witnesses.mean();
  if (r.probabilistic > 0) os << " probabilistic=" << r.probabilistic;
  return os.str();
}

std::string catalog_record(const ConjectureSpec& e, ReportFormat format) {
  if (format == ReportFormat::Jsonl) {
    ordered_json j;
    j["id"] = e.id;
    j["anchor"] = e.anchor;
    j["statement"] = e.statement;
    j["kind"] = kind_name(e.kind);
    j["domain_start"] = e.domain_start;
    j["exceptions"] = e.exceptions;
    if (!e.side_note.empty()) j["side_condition"] = e.side_note;
    j["claimed_verified"] = e.claimed_verified_bound;
    j["desk_bound"] = e.desk_bound;
    if (e.param_name != '\0') {
      j["param"] = std::string(1, e.param_name);
      j["param_default"] = e.param_default;
    }
    return j.dump();
  }
  std::ostringstream os;
  os << e.id;
  for (size_t i = os.str().size(); i < 14; ++i) os << ' ';
  os << " " << kind_name(e.kind);
  for (size_t i = std::string(kind_name(e.kind)).size(); i < 20; ++i) os << ' ';
  os << " start=" << e.domain_start;
  if (!e.exceptions.empty()) {
    os << " except={";
    for (size_t i = 0; i < e.exceptions.size(); ++i)
      os << (i ? "," : "") << e.exceptions[i];
    os << "}";
  }
  if (e.claimed_verified_bound > 0) os << " checked_to=" << e.claimed_verified_bound;
  os << " desk=" << e.desk_bound;
  os << " :: " << e.statement;
  return os.str();
}

}  // namespace pcv
