#pragma once

#include <string>

#include "pcv/catalog.hpp"
#include "pcv/verdict.hpp"

namespace pcv {

enum class ReportFormat { Jsonl, Text };

// One line per record. The canonical stream is deterministic: timing is
// only attached when include_timing is set.
std::string verdict_record(const std::string& id, u64 n, const Verdict& v,
                           ReportFormat format, bool include_timing = false,
                           u64 elapsed_us = 0);

// Summary record (deterministic; wall time is reported separately by the
// caller, not inside the summary).
std::string summary_record(const RangeReport& report, ReportFormat format);

// Catalog export: one machine-readable record per entry, or an aligned
// human-readable table row.
std::string catalog_record(const ConjectureSpec& entry, ReportFormat format);

}  // namespace pcv
