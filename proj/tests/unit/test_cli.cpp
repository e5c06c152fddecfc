#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("gtlab_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << content;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int gtlab(const std::string& args) {
  const std::string cmd = "env -u GTLAB_SEED -u GTLAB_TIMESTAMP " + std::string(GTLAB_CLI) + " " + args +
                          " 2>" + (workdir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verify is byte-identical across runs") {
  const fs::path cfg = write_file("ineq.json", R"({"suites": ["inequalities"], "trials": 100, "dims": [2, 3, 4], "seed": 1})");
  const fs::path a = workdir() / "a.json", b = workdir() / "b.json";
  CHECK(gtlab("verify --config " + cfg.string() + " --out " + a.string()) == 0);
  CHECK(gtlab("verify --config " + cfg.string() + " --out " + b.string()) == 0);
  CHECK(read_file(a) == read_file(b));
  const auto j = nlohmann::json::parse(read_file(a));
  CHECK(j["seed"] == 1);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["total"] == j["cases"].size());
}

TEST_CASE("csv output") {
  const fs::path cfg = write_file("csv.json", R"({"suites": ["inequalities"], "trials": 20, "dims": [2]})");
  const fs::path out = workdir() / "out.csv";
  CHECK(gtlab("verify --config " + cfg.string() + " --format csv --out " + out.string()) == 0);
  const std::string csv = read_file(out);
  CHECK(csv.rfind("name,equation,lhs,rhs,margin,pass,trials", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') > 10);
}

TEST_CASE("empty suite list exits 0 with zero cases") {
  const fs::path cfg = write_file("empty.json", R"({"suites": []})");
  const fs::path out = workdir() / "empty_out.json";
  CHECK(gtlab("run --config " + cfg.string() + " --out " + out.string()) == 0);
  CHECK(nlohmann::json::parse(read_file(out))["cases"].empty());
}

TEST_CASE("GTLAB_SEED overrides the config seed") {
  const fs::path cfg = write_file("seeded.json", R"({"suites": ["inequalities"], "trials": 10, "dims": [2], "seed": 1})");
  const fs::path out = workdir() / "seeded_out.json";
  const std::string cmd = "GTLAB_SEED=77 " + std::string(GTLAB_CLI) + " verify --config " + cfg.string() +
                          " --out " + out.string() + " 2>/dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(nlohmann::json::parse(read_file(out))["seed"] == 77);
}

TEST_CASE("config errors exit 2") {
  CHECK(gtlab("verify --config " + write_file("bad1.json", R"({"suites": ["nope"]})").string()) == 2);
  CHECK(gtlab("verify --config " + write_file("bad2.json", "{\n \"suites\": [\n").string()) == 2);
  CHECK(read_file(workdir() / "stderr.txt").find("line") != std::string::npos);
  CHECK(gtlab("verify --config " + write_file("bad3.json", R"({"trials": 0})").string()) == 2);
  CHECK(gtlab("verify --config " + (workdir() / "missing.json").string()) == 2);
  CHECK(gtlab("verify") == 2);
  CHECK(gtlab("verify --config " + write_file("ok.json", "{}").string() + " --format xml") == 2);
}

TEST_CASE("unwritable output path exits 2") {
  const fs::path cfg = write_file("unw.json", R"({"suites": []})");
  CHECK(gtlab("run --config " + cfg.string() + " --out /nonexistent-dir/out.json") == 2);
}

TEST_CASE("enumeration beyond the cost guard exits 3") {
  const fs::path cfg = write_file(
      "guard.json", R"({"suites": [{"name": "concentration", "trials": 1000, "dims": [8],
                                    "options": {"oliveira_terms": 15}}]})");
  CHECK(gtlab("tail --config " + cfg.string()) == 3);
}

TEST_CASE("report re-emits and a failed case exits 1") {
  const fs::path cfg = write_file("src.json", R"({"suites": ["inequalities"], "trials": 10, "dims": [2]})");
  const fs::path rep = workdir() / "rep.json";
  REQUIRE(gtlab("verify --config " + cfg.string() + " --out " + rep.string()) == 0);
  const fs::path again = workdir() / "again.json";
  CHECK(gtlab("report --config " + rep.string() + " --out " + again.string()) == 0);
  CHECK(read_file(rep) == read_file(again));

  auto j = nlohmann::json::parse(read_file(rep));
  j["cases"][0]["pass"] = false;
  j["cases"][0]["status"] = "fail";
  const fs::path failed = write_file("failed.json", j.dump());
  const fs::path out = workdir() / "failed_out.json";
  CHECK(gtlab("report --config " + failed.string() + " --out " + out.string()) == 1);
  const auto k = nlohmann::json::parse(read_file(out));
  CHECK(k["summary"]["failed"] == 1);
  CHECK(k["cases"][0]["pass"] == false);
}

TEST_CASE("hunt serializes witnesses with both sides") {
  const fs::path cfg = write_file("hunt.json", R"({"suites": ["counterexamples"]})");
  const fs::path out = workdir() / "hunt_out.json";
  CHECK(gtlab("hunt --config " + cfg.string() + " --out " + out.string()) == 0);
  const auto j = nlohmann::json::parse(read_file(out));
  int witnesses = 0;
  for (const auto& c : j["cases"]) {
    if (!c.contains("witness")) continue;
    ++witnesses;
    CHECK(c["witness"].contains("lhs"));
    CHECK(c["witness"].contains("rhs"));
    CHECK(c["witness"]["matrices"].size() == 3);
  }
  CHECK(witnesses == 2);
}
