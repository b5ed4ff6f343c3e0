#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "packcert/constructions.hpp"
#include "packcert/etf.hpp"
#include "packcert/io.hpp"
#include "packcert/leven.hpp"

using namespace packcert;
using nlohmann::json;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("rational and surd serialization") {
  const json q = to_json(Rational(-7, 3));
  CHECK(q["num"] == "-7");
  CHECK(q["den"] == "3");
  CHECK(q["approx"].get<double>() == doctest::Approx(-7.0 / 3));
  CHECK(rational_from_json(q) == Rational(-7, 3));
  CHECK(rational_from_json(json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(json(4)) == 4);

  const json s = to_json(Surd(Rational(1), Rational(2), Rational(5)));
  CHECK(s["coeff"]["num"] == "2");
  CHECK(s["radicand"]["num"] == "5");
  CHECK(s["approx"].get<double>() == doctest::Approx(1 + 2 * std::sqrt(5.0)));
}

TEST_CASE("point files: exact detection") {
  PointSet x = parse_points_json(R"({"dim": 2, "tolerance": 1e-9, "points": [["3/5", "4/5"], ["-4/5", "3/5"]]})");
  CHECK(x.mode() == PointMode::exact);
  CHECK((*x.exact_rows())(0, 0) == Rational(3, 5));

  x = parse_points_json(R"({"points": [[1, 0], [0, 1]]})");
  CHECK(x.mode() == PointMode::exact);

  x = parse_points_json(R"({"points": [[0.6, 0.8], ["0", "1"]]})");
  CHECK(x.mode() == PointMode::floating);

  x = parse_points_json(R"({"points": [["1", "1"], ["1", "-1"]], "gram_scale": "1/2"})");
  CHECK(x.mode() == PointMode::gram_exact);
  CHECK((*x.exact_gram())(0, 1) == 0);

  x = parse_points_json(R"({"tolerance": 0.5, "points": [[1.2, 0]]})");
  CHECK(x.tolerance() == 0.5);
  CHECK(parse_points_json(R"({"tolerance": 0.5, "points": [[1, 0]]})", 1e-3).tolerance() == 1e-3);

  CHECK_THROWS(parse_points_json("not json"));
  CHECK_THROWS(parse_points_json(R"({"points": []})"));
  CHECK_THROWS(parse_points_json(R"({"dim": 3, "points": [[1, 0]]})"));
  CHECK_THROWS(parse_points_json(R"({"points": [[1, 0], [1]]})"));
  CHECK_THROWS(parse_points_json(R"({"points": [["abc", 0]]})"));
  CHECK_THROWS(parse_points_json(R"({"points": [[0.5, 0.5]], "gram_scale": "2"})"));
}

TEST_CASE("point files: csv") {
  const PointSet x = parse_points_csv("# cross\n1,0\n-1,0\n\n0,1\n0, -1\n");
  CHECK(x.size() == 4);
  CHECK(x.mode() == PointMode::exact);
  CHECK(design_strength(x, 6).strength == 3);
  CHECK(parse_points_csv("0.6,0.8\n").mode() == PointMode::floating);
  CHECK_THROWS(parse_points_csv("1,0\n1\n"));
}

TEST_CASE("point files round-trip") {
  const auto dir = std::filesystem::temp_directory_path();
  for (const PointSet& x : {cross_polytope(3), icosahedron(), e8_roots(), simplex_etf(3)}) {
    const std::string path = (dir / "packcert_io_roundtrip.json").string();
    write_points(x, path);
    const PointSet y = read_points(path);
    CHECK(y.size() == x.size());
    CHECK(y.dim() == x.dim());
    CHECK((y.points() - x.points()).cwiseAbs().maxCoeff() < 1e-12);
    if (x.mode() == PointMode::exact || (x.exact_rows() && x.mode() == PointMode::gram_exact)) {
      CHECK(y.mode() == x.mode());
      CHECK(*y.exact_gram() == *x.exact_gram());
    }
    std::filesystem::remove(path);
  }
}

TEST_CASE("report schema") {
  for (const FeasibilityReport& r : {etf_report(6, 16), etf_report(6, 18), leven_report(7, 63), leven_report(7, 42)}) {
    const json j = json::parse(to_json(r).dump());
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j.contains("query"));
    CHECK(j["verdict"] == to_string(r.verdict));
    REQUIRE(j["conditions"].size() == r.conditions.size());
    for (const json& c : j["conditions"]) {
      CHECK(c.contains("id"));
      CHECK(c.contains("status"));
      CHECK(c["witness"].is_object());
    }
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("id,status,witness,note\n", 0) == 0);
    CHECK(count_lines(csv) == r.conditions.size() + 1);
    CHECK(!to_text(r).empty());
  }
  const json k = to_json(etf_report(6, 16))["conditions"];
  CHECK(k[3]["id"] == "krein");
  CHECK(rational_from_json(k[3]["witness"]["K1"]["rational"]) == 26);
}

TEST_CASE("csv escaping") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("profile json") {
  const json p = to_json(classify(half(icosahedron())));
  CHECK(p["verdict"] == "etf");
  CHECK(p["angle_set"].size() == 2);
  CHECK(rational_from_json(p["welch_sq"]) == Rational(1, 5));
}
