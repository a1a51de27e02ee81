#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trinomia/cli.hpp"
#include "trinomia/curve_io.hpp"

using namespace trinomia;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("trinomia_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("determinant table at d = 4") {
  const auto r = run({"tables", "--which", "det", "--degree", "4"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  std::vector<std::string> dets;
  for (const auto& row : j["rows"]) dets.push_back(row["determinant"]);
  CHECK(dets == std::vector<std::string>{"64", "48", "32", "36", "28"});
  CHECK(j["matches_printed"] == true);
}

TEST_CASE("Belyi table at d = 3 keeps the printed degrees next to the computed ones") {
  const auto t = cli::make_table("belyi", 3);
  std::vector<std::string> printed;
  std::vector<int> computed;
  for (const auto& row : t.json) {
    printed.push_back(row["printed_degree"]);
    computed.push_back(row["degree"]);
  }
  CHECK(printed == std::vector<std::string>{"9", "6", "3", "4", "6"});
  CHECK(computed == std::vector<int>{9, 6, 3, 4, 3});
  CHECK_FALSE(t.matches_golden);
  REQUIRE(t.errata.size() == 1);
  CHECK(t.errata[0].find("klein") == 0);
}

TEST_CASE("cubic table flags the printed small Jordan cubic") {
  const auto t = cli::make_table("cubics", 3);
  std::vector<std::string> js;
  for (const auto& row : t.json) js.push_back(row["printed_j"]);
  CHECK(js == std::vector<std::string>{"0", "0", "0", "1728", "0"});
  CHECK(t.json[1]["j_of_printed"].is_null());
  CHECK(t.json[1]["j_of_canonical"] == "0");
  CHECK(t.json[1]["erratum"] == true);
  const auto md = t.markdown();
  CHECK(md.find("ERRATUM") != std::string::npos);
}

TEST_CASE("theorem 1 table flags only the small Jordan row") {
  const auto t = cli::make_table("theorem1", 5);
  int flagged = 0;
  for (const auto& row : t.json) {
    if (row["erratum"] == true) {
      ++flagged;
      CHECK(row["type"] == "small_jordan");
      CHECK(row["smoothness"]["witness"] == "(1:0:0)");
    }
  }
  CHECK(flagged == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"tables", "--which", "nonsense"}).code == cli::kExitUsage);
  CHECK(run({"verify-all", "--max-degree", "2"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--degree", "2"}).code == cli::kExitUsage);
  CHECK(run({"belyi", "--type", "octagon", "--degree", "4"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"smooth-check"}).code == cli::kExitUsage);
  CHECK(run({"smooth-check", "--curve", "/nonexistent/curve.json"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("verify-all manifest") {
  const auto m = cli::verify_all(3);
  CHECK(m.all_passed());
  CHECK(m.errata.at("theorem1_small_jordan_erratum") == "detected");
  CHECK(m.errata.count("quartic_matrix_degenerate") == 1);
  CHECK(m.errata.count("diagonal_mod_d_reading") == 1);
  CHECK(m.errata.count("orbit_counts") == 1);
  const json j = m.to_json();
  CHECK(j["command"] == "verify-all");
  CHECK_FALSE(j.contains("run_info"));
  bool line = false;
  for (const auto& l : j["errata_lines"]) line = line || l == "theorem1_small_jordan_erratum: detected";
  CHECK(line);
  CHECK_THROWS_AS(cli::verify_all(2), std::invalid_argument);
}

TEST_CASE("smooth-check output round-trips through the curve format") {
  const std::string path =
      temp_file("sj.json", R"({"d": 4, "P": [[4,0,0],[0,4,0],[0,1,3]], "A": ["1","3/2","1"], "type": "small_jordan"})");
  const auto r = run({"smooth-check", "--curve", path, "--primes", "5,7,11"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["status"] == "smooth-certified");
  const TrinomialCurve back = curve_from_json(j["curve"]);
  const TrinomialCurve orig = load_curve_file(path);
  CHECK(back.power_matrix() == orig.power_matrix());
  CHECK(back.coefficients() == orig.coefficients());
  CHECK(back.type() == orig.type());

  const std::string singular = temp_file("printed.json", R"({"d": 4, "P": [[1,3,0],[0,4,0],[0,0,4]]})");
  const auto s = run({"smooth-check", "--curve", singular});
  CHECK(json::parse(s.out)["witness"] == "(1:0:0)");
}

TEST_CASE("aut-group with the oracle") {
  const auto r = run({"aut-group", "--type", "klein", "--degree", "4", "--oracle"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["order"] == "7");
  CHECK(j["oracle_order"] == "7");
  CHECK(j["generators"][0] == json({"0", "1", "3"}));
}

TEST_CASE("belyi and quartic subcommands") {
  const auto b = run({"belyi", "--type", "block", "--degree", "5", "--verify"});
  REQUIRE(b.code == 0);
  const json j = json::parse(b.out);
  CHECK(j["degree"] == 15);
  CHECK(j["rh_defect"] == 0);

  const auto all = run({"belyi", "--all", "--degree", "4", "--format", "table"});
  CHECK(all.code == 0);
  CHECK(all.out.find("| Klein |") != std::string::npos);

  const auto qe = run({"quartic-equiv", "--check-paper-matrix"});
  REQUIRE(qe.code == 0);
  const json w = json::parse(qe.out);
  CHECK(w["verified"] == true);
  CHECK(w["paper_matrix"]["determinant"] == "0");
  CHECK(w["paper_matrix"]["rank"] == 2);
  CHECK(w["target_roots_cross_ratio"] == "-1");

  const auto jv = run({"j-invariant", "--type", "big_jordan"});
  CHECK(json::parse(jv.out)["j"] == "1728");
  const std::string quartic = temp_file("q.json", R"({"d": 4, "P": [[4,0,0],[0,4,0],[0,0,4]]})");
  CHECK(run({"j-invariant", "--curve", quartic}).code == cli::kExitUsage);
}

TEST_CASE("classify and orbits output") {
  const auto c = run({"classify", "-d", "5"});
  REQUIRE(c.code == 0);
  const json j = json::parse(c.out);
  CHECK(j["counts"]["types"] == 5);
  CHECK(j["excluded"][0]["verdict"]["witness"] == "(0:0:1)");
  const auto o = run({"orbits", "--trace"});
  REQUIRE(o.code == 0);
  const json oj = json::parse(o.out);
  std::size_t members = 0;
  for (const auto& orbit : oj["orbits"]) members += orbit["members"].size();
  CHECK(members == 512);
}
