#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = arcmetric::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(ARCMETRIC_CONFIG_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("arcmetric_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("arc-length prints the bare length") {
  const auto r = run({"arc-length", "--pants", "2,2,2", "--arc", "a12"});
  CHECK(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(1.7049128323580137).epsilon(1e-15));
  CHECK(std::stod(run({"arc-length", "--pants", "2,2,2", "--arc", "a33"}).out) ==
        doctest::Approx(3.612225999682252).epsilon(1e-15));
  CHECK(std::stod(run({"arc-length", "--torus", "1,0,2", "--arc", "a(1,1)"}).out) > 0.0);
}

TEST_CASE("usage, domain and unsupported errors map to exit codes") {
  CHECK(run({"arc-length", "--pants", "2,2,2"}).code == arcmetric::cli::kUsage);
  CHECK(run({}).code == arcmetric::cli::kUsage);
  CHECK(run({"frobnicate"}).code == arcmetric::cli::kUsage);
  CHECK(run({"arc-length", "--pants", "2,2", "--arc", "a12"}).code == arcmetric::cli::kUsage);
  CHECK(run({"arc-length", "--pants", "2,x,2", "--arc", "a12"}).code == arcmetric::cli::kUsage);
  CHECK(run({"arc-length", "--pants", "2,2,2", "--torus", "1,0,1", "--arc", "a12"}).code ==
        arcmetric::cli::kUsage);
  CHECK(run({"arc-length", "--pants", "-1,2,2", "--arc", "a12"}).code == arcmetric::cli::kDomain);
  CHECK(run({"arc-length", "--pants", "2,2,2", "--arc", "a99"}).code == arcmetric::cli::kUnsupported);
  CHECK(run({"arc-length", "--pants", "2,2,2", "--arc", "B1"}).code == arcmetric::cli::kUnsupported);
  CHECK(run({"experiment", "dt-sphere", "--surface", "0,0,2"}).code == arcmetric::cli::kUnsupported);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("curve-length and double") {
  CHECK(std::stod(run({"curve-length", "--torus", "1.5,0,2", "--curve", "C1"}).out) == 1.5);
  const auto d = nlohmann::json::parse(run({"double", "--torus", "1.5,0.25,2"}).out);
  CHECK(d["C1"]["length"] == 1.5);
  CHECK(d["C1bar"]["twist"] == -0.25);
  CHECK(d["B1"]["length"] == 2.0);
  const auto l = nlohmann::json::parse(run({"double", "--pants", "2,2,2", "--class", "a12"}).out);
  CHECK(l["doubled_length"].get<double>() == doctest::Approx(2.0 * l["length"].get<double>()).epsilon(1e-12));
}

TEST_CASE("distance reports both directions with maximizers") {
  const auto r = run({"distance", "--pants", "--x", "2,2,2", "--y", "4,4,4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["d_xy"]["value"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(j["d_xy"]["maximizer"] == "B1");
  CHECK(j["d_yx"]["value"].get<double>() == doctest::Approx(0.72329904229974479).epsilon(1e-13));
  CHECK(j["d_yx"]["panel_N"] == 2);
  const auto same = nlohmann::json::parse(run({"distance", "--pants", "--x", "2,2,2", "--y", "2,2,2"}).out);
  CHECK(same["d_xy"]["value"] == 0.0);
  CHECK(same["d_yx"]["value"] == 0.0);
  double prev = -1.0;
  for (const char* n : {"0", "1", "2", "3"}) {
    const auto t = nlohmann::json::parse(
        run({"distance", "--torus", "--x", "1,0.2,2", "--y", "2,-0.5,1", "--panel-n", n}).out);
    CHECK(t["d_xy"]["value"].get<double>() >= prev);
    prev = t["d_xy"]["value"].get<double>();
  }
}

TEST_CASE("FN files on general surfaces") {
  const std::string x = temp_file("x.json", R"({"C1": {"length": 1.0, "twist": 0.5}, "B1": 2.0})");
  const std::string y = temp_file("y.json", R"({"C1": {"length": 2.0}, "B1": 1.0})");
  const auto r = run({"distance", "--surface", "1,0,1", "--x", x, "--y", y});
  CHECK(r.code == 0);
  CHECK(std::stod(run({"curve-length", "--surface", "1,0,1", "--fn", x, "--curve", "B1"}).out) == 2.0);
  const std::string bad = temp_file("bad.json", R"({"C1": {"length": 1.0}, "B1": 2.0, "Q7": 1})");
  const auto e = run({"curve-length", "--surface", "1,0,1", "--fn", bad, "--curve", "B1"});
  CHECK(e.code == arcmetric::cli::kUsage);
  CHECK(e.err.find("Q7") != std::string::npos);
  CHECK(run({"curve-length", "--surface", "1,0,1", "--curve", "B1"}).code == arcmetric::cli::kUsage);
}

TEST_CASE("horofn") {
  const auto r = run({"horofn", "--pants", "--base", "1,1,1", "--x", "3,1,1", "--y", "1,1,1"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == doctest::Approx(0.0).epsilon(1e-15));
  const std::string mu = temp_file("mu.json", R"([{"class": "a33", "weight": 1}])");
  const auto b = run({"horofn", "--pants", "--base", "1,1,1", "--lamination", mu, "--y", "1,1,5"});
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["kind"] == "boundary");
  CHECK(run({"horofn", "--pants", "--base", "1,1,1", "--y", "1,1,5"}).code == arcmetric::cli::kUsage);
}

TEST_CASE("experiment inequality writes a deterministic table") {
  const auto a = run({"experiment", "inequality", config("demo_cprime.json")});
  const auto b = run({"experiment", "inequality", config("demo_cprime.json")});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string header, line, last;
  std::getline(in, header);
  CHECK(header == "t,panel_n,B1,B2,B3,a11,a22,a33,a12,a13,a23");
  while (std::getline(in, line)) last = line;
  CHECK(last.rfind("10,2,", 0) == 0);
  CHECK(last.find("1.30364465") != std::string::npos);
}

TEST_CASE("experiment summaries") {
  const auto path = (std::filesystem::temp_directory_path() / "arcmetric_test_summary.json").string();
  const auto r = run({"experiment", "boundary-limit", config("torus_arc.json"), "--summary", path});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["experiment"] == "boundary-limit");
  CHECK(j["final_distance"].get<double>() < 1e-3);
  CHECK(j["regimes"]["C1"] == "hold");

  const auto h = run({"experiment", "horo-converge", config("pants_horo.json")});
  REQUIRE(h.code == 0);
  CHECK(h.out.rfind("t,panel_n,max_deviation\n", 0) == 0);

  const auto s = run({"experiment", "separate", config("pants_separate.json")});
  REQUIRE(s.code == 0);
  const auto w = nlohmann::json::parse(s.out);
  CHECK(w["reverified"] == true);
  CHECK(w["gap"].get<double>() >= 1e-3);
}

TEST_CASE("experiment dt-sphere") {
  const auto r = run({"experiment", "dt-sphere", "--surface", "1,0,1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coordinate_dimension"] == 3);
  CHECK(j["sphere_dimension"] == 2);
  CHECK(j["round_trip"]["passed"] == j["round_trip"]["total"]);
  const auto g = nlohmann::json::parse(run({"experiment", "dt-sphere", "--surface", "2,1,2"}).out);
  CHECK(g["coordinate_dimension"] == 14);
  CHECK(g["round_trip"].is_null());
}

TEST_CASE("malformed configs report where they fail") {
  const auto syntax = temp_file("syntax.json", "{\n  \"surface\": [0, 0, 3],\n  \"point\": {\n}}}\n");
  const auto r = run({"experiment", "inequality", syntax});
  CHECK(r.code == arcmetric::cli::kUsage);
  CHECK(r.err.find("syntax.json:4:") != std::string::npos);

  const auto missing = temp_file("missing.json", R"({"surface": [0, 0, 3], "point": {"B1": 1, "B2": 1}})");
  const auto m = run({"experiment", "inequality", missing});
  CHECK(m.code == arcmetric::cli::kUsage);
  CHECK(m.err.find("point.B3") != std::string::npos);

  const auto klass = temp_file("klass.json", R"({"surface": [0, 0, 3], "point": {"B1": 1, "B2": 1, "B3": 1},
      "lamination": [{"class": "a99", "weight": 1}]})");
  const auto k = run({"experiment", "inequality", klass});
  CHECK(k.code == arcmetric::cli::kUsage);
  CHECK(k.err.find("lamination[0].class") != std::string::npos);

  const auto regime = temp_file("regime.json", R"({"surface": [0, 0, 3], "point": {"B1": 1, "B2": 1, "B3": 1},
      "lamination": [{"class": "a33", "weight": 1}], "regimes": {"B3": "shrink"}})");
  CHECK(run({"experiment", "inequality", regime}).err.find("regimes.B3") != std::string::npos);

  CHECK(run({"experiment", "inequality", "/nonexistent/config.json"}).code == arcmetric::cli::kUsage);
}
