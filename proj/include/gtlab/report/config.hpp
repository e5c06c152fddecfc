#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gtlab {

/// Malformed config; the message carries the position of the problem.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SuiteName { inequalities, concentration, studies, counterexamples };

std::string to_string(SuiteName s);
std::optional<SuiteName> suite_from_string(const std::string& s);

struct SuiteEntry {
  SuiteName name = SuiteName::inequalities;
  /// Unset fields fall back to the document-level value, then to the suite default.
  std::optional<long> trials;
  std::vector<long> dims;
  std::optional<std::uint64_t> seed;
  /// Relative tolerance per equation tag.
  std::map<std::string, double> tolerances;
  /// Suite-specific knobs, e.g. {"hermitization_trials": 200}.
  nlohmann::json options = nlohmann::json::object();
};

struct SuiteConfig {
  std::vector<SuiteEntry> suites;
  /// Document-level trials/dims/tolerances/options; the base of every entry.
  SuiteEntry defaults;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> timestamp;
};

/// Parses the JSON config document. "all" expands to the four suites.
/// Unknown keys, unknown suite names, unknown equation tags in tolerance
/// overrides, and trials < 1 are rejected.
SuiteConfig parse_config(const std::string& text);
SuiteConfig load_config(const std::string& path);

/// The configured entries for one suite, or the document defaults when the
/// config does not list it.
std::vector<SuiteEntry> entries_for(const SuiteConfig& config, SuiteName name);

/// Config seed, overridden by GTLAB_SEED when set.
std::uint64_t resolve_master_seed(const SuiteConfig& config);

}  // namespace gtlab
