#include "gtlab/report/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "gtlab/random/rng.hpp"
#include "gtlab/report/registry.hpp"

namespace gtlab {

using nlohmann::json;

std::string to_string(SuiteName s) {
  switch (s) {
    case SuiteName::inequalities: return "inequalities";
    case SuiteName::concentration: return "concentration";
    case SuiteName::studies: return "studies";
    case SuiteName::counterexamples: return "counterexamples";
  }
  return "inequalities";
}

std::optional<SuiteName> suite_from_string(const std::string& s) {
  for (SuiteName n : {SuiteName::inequalities, SuiteName::concentration, SuiteName::studies, SuiteName::counterexamples}) {
    if (to_string(n) == s) return n;
  }
  return std::nullopt;
}

namespace {

std::string line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

/// Values carry no source positions after parsing, so semantic errors are
/// located by the JSON path plus the first occurrence of the offending token.
class Locator {
 public:
  explicit Locator(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message, const std::string& token = "") const {
    std::string where = "at " + (path.empty() ? std::string("/") : path);
    if (!token.empty()) {
      const std::size_t pos = text_.find(token);
      if (pos != std::string::npos) where += " (" + line_col(text_, pos) + ")";
    }
    throw ConfigError("config error " + where + ": " + message);
  }

 private:
  const std::string& text_;
};

std::uint64_t parse_seed(const json& v, const std::string& path, const Locator& loc) {
  if (!v.is_number_unsigned()) loc.fail(path, "seed must be a non-negative integer", "\"seed\"");
  return v.get<std::uint64_t>();
}

long parse_trials(const json& v, const std::string& path, const Locator& loc) {
  if (!v.is_number_integer() || v.get<long long>() < 1) loc.fail(path, "trials must be an integer >= 1", "\"trials\"");
  return v.get<long>();
}

std::vector<long> parse_dims(const json& v, const std::string& path, const Locator& loc) {
  if (!v.is_array()) loc.fail(path, "dims must be a list of integers", "\"dims\"");
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || v[i].get<long long>() < 1) {
      loc.fail(path + "/" + std::to_string(i), "dims entries must be integers >= 1", "\"dims\"");
    }
    out.push_back(v[i].get<long>());
  }
  return out;
}

std::map<std::string, double> parse_tolerances(const json& v, const std::string& path, const Locator& loc) {
  if (!v.is_object()) loc.fail(path, "tolerances must map equation tags to numbers", "\"tolerances\"");
  std::map<std::string, double> out;
  for (const auto& [tag, tol] : v.items()) {
    if (find_equation(tag) == nullptr) loc.fail(path + "/" + tag, "unknown equation tag '" + tag + "'", "\"" + tag + "\"");
    if (!tol.is_number() || !(tol.get<double>() > 0)) {
      loc.fail(path + "/" + tag, "tolerance must be a positive number", "\"" + tag + "\"");
    }
    out[tag] = tol.get<double>();
  }
  return out;
}

void expand_name(const std::string& name, const std::string& path, const Locator& loc, std::vector<SuiteName>& out) {
  if (name == "all") {
    for (SuiteName n : {SuiteName::inequalities, SuiteName::concentration, SuiteName::studies, SuiteName::counterexamples}) {
      out.push_back(n);
    }
    return;
  }
  const auto n = suite_from_string(name);
  if (!n) {
    loc.fail(path, "unknown suite '" + name + "' (expected inequalities, concentration, studies, counterexamples or all)",
             "\"" + name + "\"");
  }
  out.push_back(*n);
}

}  // namespace

SuiteConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  const Locator loc(text);
  if (!doc.is_object()) loc.fail("", "config must be an object");

  static const std::set<std::string> top_keys = {"suites", "trials", "dims", "seed", "tolerances", "options", "timestamp"};
  for (const auto& [key, _] : doc.items()) {
    if (!top_keys.count(key)) loc.fail("/" + key, "unknown key '" + key + "'", "\"" + key + "\"");
  }

  SuiteConfig cfg;
  SuiteEntry defaults;
  if (doc.contains("seed")) cfg.seed = parse_seed(doc["seed"], "/seed", loc);
  if (doc.contains("timestamp")) {
    if (!doc["timestamp"].is_string()) loc.fail("/timestamp", "timestamp must be a string", "\"timestamp\"");
    cfg.timestamp = doc["timestamp"].get<std::string>();
  }
  if (doc.contains("trials")) defaults.trials = parse_trials(doc["trials"], "/trials", loc);
  if (doc.contains("dims")) defaults.dims = parse_dims(doc["dims"], "/dims", loc);
  if (doc.contains("tolerances")) defaults.tolerances = parse_tolerances(doc["tolerances"], "/tolerances", loc);
  if (doc.contains("options")) {
    if (!doc["options"].is_object()) loc.fail("/options", "options must be an object", "\"options\"");
    defaults.options = doc["options"];
  }

  cfg.defaults = defaults;
  if (!doc.contains("suites")) return cfg;
  const json& suites = doc["suites"];
  if (!suites.is_array()) loc.fail("/suites", "suites must be a list", "\"suites\"");

  static const std::set<std::string> entry_keys = {"name", "trials", "dims", "seed", "tolerances", "options"};
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const std::string path = "/suites/" + std::to_string(i);
    const json& item = suites[i];
    std::vector<SuiteName> names;
    SuiteEntry entry = defaults;
    if (item.is_string()) {
      expand_name(item.get<std::string>(), path, loc, names);
    } else if (item.is_object()) {
      for (const auto& [key, _] : item.items()) {
        if (!entry_keys.count(key)) loc.fail(path + "/" + key, "unknown key '" + key + "'", "\"" + key + "\"");
      }
      if (!item.contains("name") || !item["name"].is_string()) loc.fail(path, "suite entry needs a string 'name'");
      expand_name(item["name"].get<std::string>(), path + "/name", loc, names);
      if (item.contains("trials")) entry.trials = parse_trials(item["trials"], path + "/trials", loc);
      if (item.contains("dims")) entry.dims = parse_dims(item["dims"], path + "/dims", loc);
      if (item.contains("seed")) entry.seed = parse_seed(item["seed"], path + "/seed", loc);
      if (item.contains("tolerances")) {
        for (const auto& [tag, tol] : parse_tolerances(item["tolerances"], path + "/tolerances", loc)) {
          entry.tolerances[tag] = tol;
        }
      }
      if (item.contains("options")) {
        if (!item["options"].is_object()) loc.fail(path + "/options", "options must be an object", "\"options\"");
        entry.options.update(item["options"]);
      }
    } else {
      loc.fail(path, "suite entries must be names or objects");
    }
    for (SuiteName n : names) {
      SuiteEntry e = entry;
      e.name = n;
      cfg.suites.push_back(std::move(e));
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file: " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return parse_config(s.str());
}

std::vector<SuiteEntry> entries_for(const SuiteConfig& config, SuiteName name) {
  std::vector<SuiteEntry> out;
  for (const auto& e : config.suites) {
    if (e.name == name) out.push_back(e);
  }
  if (out.empty()) {
    SuiteEntry e = config.defaults;
    e.name = name;
    out.push_back(std::move(e));
  }
  return out;
}

std::uint64_t resolve_master_seed(const SuiteConfig& config) {
  const std::uint64_t base = config.seed.value_or(kDefaultSeed);
  if (const char* s = std::getenv("GTLAB_SEED"); s != nullptr && *s != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == nullptr || *end != '\0') throw ConfigError(std::string("GTLAB_SEED is not an unsigned integer: ") + s);
    return v;
  }
  return base;
}

}  // namespace gtlab
