#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtlab/concentration/concentration.hpp"
#include "gtlab/report/config.hpp"
#include "gtlab/report/report.hpp"
#include "gtlab/report/suites.hpp"

namespace {

enum Exit { kPass = 0, kViolation = 1, kConfigError = 2, kResourceGuard = 3 };

gtlab::ReportDocument read_report(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw gtlab::ConfigError("cannot read report: " + path);
  std::ostringstream s;
  s << f.rdbuf();
  try {
    return gtlab::report_from_json(nlohmann::json::parse(s.str()));
  } catch (const nlohmann::json::exception& e) {
    throw gtlab::ConfigError("malformed report " + path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gtlab: Golden-Thompson verification laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "json";
  std::string out_path;

  struct Command {
    const char* name;
    const char* help;
    std::optional<gtlab::SuiteName> suite;
  };
  const Command commands[] = {
      {"verify", "Run the inequality suite", gtlab::SuiteName::inequalities},
      {"tail", "Run the concentration sweeps", gtlab::SuiteName::concentration},
      {"ratio", "Run the ensemble-average studies", gtlab::SuiteName::studies},
      {"hunt", "Run the counter-example search", gtlab::SuiteName::counterexamples},
      {"run", "Run every suite listed in the config", std::nullopt},
      {"report", "Re-emit an existing JSON report (given as --config)", std::nullopt},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "Config document (JSON)")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "Output path (default: stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    gtlab::ReportDocument doc;
    if (name == "report") {
      doc = read_report(config_path);
      doc.tally();
    } else {
      gtlab::SuiteConfig cfg = gtlab::load_config(config_path);
      for (const auto& c : commands) {
        if (name == c.name && c.suite) cfg.suites = gtlab::entries_for(cfg, *c.suite);
      }
      doc = gtlab::run(cfg);
    }
    const auto fmt = gtlab::report_format_from_string(format);
    if (out_path.empty()) {
      std::cout << gtlab::emit(doc, fmt);
    } else {
      gtlab::write_report(doc, fmt, out_path);
    }
    std::cerr << "gtlab " << name << ": " << doc.summary.total << " cases, " << doc.summary.passed << " passed, "
              << doc.summary.failed << " failed, " << doc.summary.indeterminate << " indeterminate\n";
    return gtlab::exit_status(doc) == 0 ? kPass : kViolation;
  } catch (const gtlab::ConfigError& e) {
    std::cerr << "gtlab: " << e.what() << '\n';
    return kConfigError;
  } catch (const gtlab::ResourceGuardError& e) {
    std::cerr << "gtlab: resource guard: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const gtlab::DomainError& e) {
    std::cerr << "gtlab: invalid configuration value: " << e.what() << '\n';
    return kConfigError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gtlab: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::runtime_error& e) {
    std::cerr << "gtlab: " << e.what() << '\n';
    return kConfigError;
  }
}
