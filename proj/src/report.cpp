#include "gtlab/report/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gtlab {

using nlohmann::json;

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::indeterminate: return "indeterminate";
  }
  return "fail";
}

CaseStatus case_status_from_string(const std::string& s) {
  if (s == "pass") return CaseStatus::pass;
  if (s == "fail") return CaseStatus::fail;
  if (s == "indeterminate") return CaseStatus::indeterminate;
  throw std::invalid_argument("unknown case status: " + s);
}

bool ReportCase::operator==(const ReportCase& o) const {
  const bool ci_eq = ci.has_value() == o.ci.has_value() && (!ci || (ci->low == o.ci->low && ci->high == o.ci->high));
  return name == o.name && equation == o.equation && lhs == o.lhs && rhs == o.rhs && margin == o.margin &&
         pass == o.pass && trials == o.trials && ci_eq && status == o.status && detail == o.detail &&
         witness == o.witness;
}

bool ReportDocument::operator==(const ReportDocument& o) const {
  return schema_version == o.schema_version && seed == o.seed && timestamp == o.timestamp && cases == o.cases &&
         summary == o.summary;
}

ReportCase case_from_gap(std::string name, std::string equation, const GapReport& gap, long trials) {
  ReportCase c;
  c.name = std::move(name);
  c.equation = std::move(equation);
  c.lhs = gap.lhs;
  c.rhs = gap.rhs;
  c.margin = gap.margin;
  c.pass = gap.pass;
  c.trials = trials;
  c.status = gap.pass ? CaseStatus::pass : CaseStatus::fail;
  c.detail = gap.context;
  return c;
}

ReportCase case_from_estimate(std::string name, std::string equation, double estimate, double target,
                              double allowed, long trials, std::optional<Interval> ci, std::string detail) {
  ReportCase c;
  c.name = std::move(name);
  c.equation = std::move(equation);
  c.lhs = estimate;
  c.rhs = target;
  c.margin = target - estimate;
  c.pass = std::abs(c.margin) <= allowed;
  c.trials = trials;
  c.ci = ci;
  c.status = c.pass ? CaseStatus::pass : CaseStatus::fail;
  c.detail = std::move(detail);
  return c;
}

void ReportDocument::tally() {
  summary = {};
  for (const auto& c : cases) {
    ++summary.total;
    switch (c.status) {
      case CaseStatus::pass: ++summary.passed; break;
      case CaseStatus::fail: ++summary.failed; break;
      case CaseStatus::indeterminate: ++summary.indeterminate; break;
    }
  }
}

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + s);
}

json to_json(const ReportDocument& doc) {
  json cases = json::array();
  for (const auto& c : doc.cases) {
    json jc = {{"name", c.name},       {"equation", c.equation}, {"lhs", c.lhs},
               {"rhs", c.rhs},         {"margin", c.margin},     {"pass", c.pass},
               {"trials", c.trials},   {"status", to_string(c.status)}, {"detail", c.detail}};
    jc["ci"] = c.ci ? json::array({c.ci->low, c.ci->high}) : json(nullptr);
    if (c.witness) jc["witness"] = *c.witness;
    cases.push_back(std::move(jc));
  }
  return json{{"schema_version", doc.schema_version},
              {"seed", doc.seed},
              {"timestamp", doc.timestamp},
              {"cases", std::move(cases)},
              {"summary",
               {{"total", doc.summary.total},
                {"passed", doc.summary.passed},
                {"failed", doc.summary.failed},
                {"indeterminate", doc.summary.indeterminate}}}};
}

ReportDocument report_from_json(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported report schema_version " + std::to_string(doc.schema_version));
  }
  doc.seed = j.at("seed").get<std::uint64_t>();
  doc.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& jc : j.at("cases")) {
    ReportCase c;
    c.name = jc.at("name").get<std::string>();
    c.equation = jc.at("equation").get<std::string>();
    c.lhs = jc.at("lhs").get<double>();
    c.rhs = jc.at("rhs").get<double>();
    c.margin = jc.at("margin").get<double>();
    c.pass = jc.at("pass").get<bool>();
    c.trials = jc.at("trials").get<long>();
    c.status = case_status_from_string(jc.at("status").get<std::string>());
    c.detail = jc.value("detail", "");
    if (!jc.at("ci").is_null()) c.ci = Interval{jc["ci"].at(0).get<double>(), jc["ci"].at(1).get<double>()};
    if (jc.contains("witness")) c.witness = jc["witness"];
    doc.cases.push_back(std::move(c));
  }
  const json& s = j.at("summary");
  doc.summary = {s.at("total").get<long>(), s.at("passed").get<long>(), s.at("failed").get<long>(),
                 s.at("indeterminate").get<long>()};
  return doc;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string emit(const ReportDocument& doc, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(doc).dump(2) + "\n";
  std::ostringstream out;
  out.precision(17);
  out << "name,equation,lhs,rhs,margin,pass,trials\n";
  for (const auto& c : doc.cases) {
    out << csv_field(c.name) << ',' << csv_field(c.equation) << ',' << c.lhs << ',' << c.rhs << ',' << c.margin
        << ',' << (c.pass ? "true" : "false") << ',' << c.trials << '\n';
  }
  return out.str();
}

void write_report(const ReportDocument& doc, ReportFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open report output: " + path);
  f << emit(doc, format);
  if (!f) throw std::runtime_error("failed writing report output: " + path);
}

}  // namespace gtlab
