#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "packcert/cli.hpp"
#include "packcert/constructions.hpp"
#include "packcert/io.hpp"

using nlohmann::json;
namespace cli = packcert::cli;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "packcert");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  const cli::ParseOutcome p = cli::parse(static_cast<int>(argv.size()), argv.data(), out, err);
  r.code = p.config ? cli::run(*p.config, out, err) : p.exit_code;
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("packcert_cli_" + name)).string();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("leven size table with the integrality filter") {
  const Result r = invoke({"leven", "--d", "7", "--al-filter"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "leven_sizes");
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["n"]["num"] == "63");
  CHECK(j["rows"][0]["verdict"] == "feasible");
  CHECK(j["verdict"] == "feasible");

  const Result all = invoke({"leven", "--d", "7"});
  CHECK(json::parse(all.out)["rows"].size() == 5);
}

TEST_CASE("etf queries") {
  Result r = invoke({"etf", "--d", "6", "--n", "18"});
  CHECK(r.code == cli::kExitInfeasible);
  CHECK(json::parse(r.out)["verdict"] == "infeasible");

  r = invoke({"etf", "--d", "6", "--n", "16"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["verdict"] == "feasible");

  r = invoke({"--format", "csv", "etf", "--d", "6", "--n", "16"});
  CHECK(r.code == cli::kExitOk);
  CHECK(count_lines(r.out) == j["conditions"].size() + 1);

  r = invoke({"etf", "--d", "6", "--n", "16", "--format", "text"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("krein") != std::string::npos);
}

TEST_CASE("leven single size") {
  CHECK(invoke({"leven", "--d", "7", "--n", "63"}).code == cli::kExitOk);
  CHECK(invoke({"leven", "--d", "7", "--n", "42"}).code == cli::kExitInfeasible);
}

TEST_CASE("bounds") {
  const Result r = invoke({"bounds", "--d", "7", "--s", "4", "--t", "5"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "bounds");
  CHECK(j["bounds"].is_array());
  CHECK(j["bounds"].size() >= 2);
  CHECK(j.contains("best_known"));
  const Result csv = invoke({"bounds", "--d", "7", "--s", "4", "--t", "5", "--format", "csv"});
  CHECK(count_lines(csv.out) == j["bounds"].size() + 2);
}

TEST_CASE("scan output is ordered by dimension") {
  ::setenv("PACKCERT_THREADS", "3", 1);
  Result r = invoke({"scan", "--mode", "etf", "--d-min", "3", "--d-max", "12"});
  CHECK(r.code == cli::kExitOk);
  json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(j["rows"][i]["d"] == 3 + static_cast<long>(i));
  CHECK(j["rows"][3]["survivors"] == json::array({16}));  // d = 6

  ::setenv("PACKCERT_THREADS", "1", 1);
  const Result serial = invoke({"scan", "--mode", "etf", "--d-min", "3", "--d-max", "12"});
  CHECK(serial.out == r.out);
  ::unsetenv("PACKCERT_THREADS");

  r = invoke({"scan", "--mode", "leven", "--d-min", "3", "--d-max", "8", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("leven,7,63\n") != std::string::npos);
  j = json::parse(invoke({"scan", "--mode", "leven", "--d-min", "3", "--d-max", "4"}).out);
  CHECK(j["rows"][0].contains("note"));
}

TEST_CASE("construct then verify") {
  const std::string ico = temp_path("icosa.json");
  Result r = invoke({"construct", "--name", "icosahedron", "--output", ico});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["n"] == 12);

  r = invoke({"verify", "--input", ico, "--claim", "design:5"});
  CHECK(r.code == cli::kExitOk);
  json j = json::parse(r.out);
  CHECK(j["claim"]["status"] == "pass");
  CHECK(j["profile"]["strength"] == 5);

  CHECK(invoke({"verify", "--input", ico, "--claim", "design:6"}).code == cli::kExitInfeasible);
  CHECK(invoke({"verify", "--input", ico, "--claim", "etf"}).code == cli::kExitInfeasible);

  const std::string half = temp_path("icosa_half.json");
  REQUIRE(invoke({"construct", "--name", "icosahedron", "--half", "--output", half}).code == cli::kExitOk);
  CHECK(invoke({"verify", "--input", half, "--claim", "etf"}).code == cli::kExitOk);

  const std::string leven = temp_path("e8_derived_half.json");
  REQUIRE(invoke({"construct", "--name", "e8-derived", "--half", "--output", leven}).code == cli::kExitOk);
  r = invoke({"verify", "--input", leven, "--claim", "leven"});
  CHECK(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["profile"]["verdict"] == "levenstein");

  const std::string cross = temp_path("cross.json");
  REQUIRE(invoke({"construct", "--name", "cross", "--d", "4", "--output", cross}).code == cli::kExitOk);
  CHECK(packcert::read_points(cross).mode() == packcert::PointMode::exact);
  r = invoke({"verify", "--input", cross, "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("strength,3\n") != std::string::npos);

  for (const std::string& p : {ico, half, leven, cross}) std::filesystem::remove(p);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"etf", "--d", "6"}).code == cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({"etf", "--d", "six", "--n", "16"}).code == cli::kExitUsage);
  CHECK(invoke({"scan", "--mode", "both", "--d-min", "3", "--d-max", "4"}).code == cli::kExitUsage);
  CHECK(invoke({"--format", "xml", "etf", "--d", "6", "--n", "16"}).code == cli::kExitUsage);
  CHECK(invoke({"construct", "--name", "dodecahedron", "--output", temp_path("x.json")}).code == cli::kExitUsage);
  CHECK(invoke({"construct", "--name", "e8", "--d", "7", "--output", temp_path("x.json")}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--input", temp_path("missing.json")}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--input", temp_path("missing.json"), "--claim", "design:x"}).code == cli::kExitUsage);
  const Result r = invoke({"etf", "--d", "5", "--n", "6"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("packcert:") != std::string::npos);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}
