#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtlab/inequalities/gap_report.hpp"
#include "gtlab/numerics/statistics.hpp"

namespace gtlab {

enum class CaseStatus { pass, fail, indeterminate };

std::string to_string(CaseStatus s);
CaseStatus case_status_from_string(const std::string& s);

struct ReportCase {
  std::string name;
  /// Equation tag, e.g. "Eq.1", "Eq.RU".
  std::string equation;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  bool pass = true;
  long trials = 1;
  std::optional<Interval> ci;
  CaseStatus status = CaseStatus::pass;
  std::string detail;
  /// Counter-example matrices and both sides, when the case carries one.
  std::optional<nlohmann::json> witness;

  bool operator==(const ReportCase&) const;
};

/// A case from an inequality check; the worst margin of a sweep is reported
/// as one case with the sweep's trial count.
ReportCase case_from_gap(std::string name, std::string equation, const GapReport& gap, long trials = 1);

/// A case for a statistical estimate compared to a target: passes when
/// |estimate - target| <= allowed.
ReportCase case_from_estimate(std::string name, std::string equation, double estimate, double target,
                              double allowed, long trials, std::optional<Interval> ci, std::string detail);

struct ReportSummary {
  long total = 0;
  long passed = 0;
  long failed = 0;
  long indeterminate = 0;

  bool operator==(const ReportSummary&) const = default;
};

inline constexpr int kReportSchemaVersion = 1;

struct ReportDocument {
  int schema_version = kReportSchemaVersion;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::vector<ReportCase> cases;
  ReportSummary summary;

  /// Recomputes summary from the cases.
  void tally();
  bool operator==(const ReportDocument&) const;
};

enum class ReportFormat { json, csv };

ReportFormat report_format_from_string(const std::string& s);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

/// json: the full document, pretty-printed; csv: header plus one row per case.
std::string emit(const ReportDocument& doc, ReportFormat format);

/// Writes emit(doc, format) to path; throws std::runtime_error when unwritable.
void write_report(const ReportDocument& doc, ReportFormat format, const std::string& path);

}  // namespace gtlab
