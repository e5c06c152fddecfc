#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtlab/report/config.hpp"
#include "gtlab/report/report.hpp"

namespace gtlab {

/// Used when neither the config nor GTLAB_TIMESTAMP supplies one, so that
/// reports stay byte-identical across runs.
inline constexpr const char* kDefaultTimestamp = "1970-01-01T00:00:00Z";

/// Cases of one suite. Streams derive from (seed, suite) and the equation tag,
/// so adding or reordering checks does not shift other checks' draws.
std::vector<ReportCase> run_suite(const SuiteEntry& entry, std::uint64_t master_seed);

/// Runs every configured suite in order.
ReportDocument run(const SuiteConfig& config);

/// Exit status for a finished report: 0 when nothing failed, else 1.
int exit_status(const ReportDocument& doc);

}  // namespace gtlab
