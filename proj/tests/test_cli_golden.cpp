#include <doctest.h>

#include <fstream>

#include "cli_cases.hpp"
#include "cuspcheck/json_io.hpp"

using cuspcheck::io::json;

namespace {

const std::filesystem::path kSource{CUSPCHECK_SOURCE_DIR};

json run_json(const std::vector<std::string>& args, int expected_exit) {
  const auto r = testing::run_cli_case({"adhoc", args, expected_exit, ""}, kSource);
  CHECK(r.exit_code == expected_exit);
  return json::parse(r.out);
}

json load(const std::string& rel) {
  std::ifstream f(kSource / rel);
  return json::parse(f);
}

}  // namespace

TEST_CASE("golden files for every subcommand") {
  for (const auto& c : testing::cli_cases()) {
    CAPTURE(c.name);
    const auto problem = testing::check_cli_case(c, kSource);
    CHECK_MESSAGE(problem.empty(), problem);
  }
}

TEST_CASE("every report carries the common envelope") {
  for (const auto& c : testing::cli_cases()) {
    if (c.name == "version" || c.name.find("pretty") != std::string::npos) continue;
    CAPTURE(c.name);
    const auto r = testing::run_cli_case(c, kSource);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("schema") == cuspcheck::cli::kReportSchema);
    CHECK(doc.at("version") == cuspcheck::cli::kVersion);
    CHECK(doc.at("command") == c.args[c.args[0] == "--float" || c.args[0] == "--pretty" ? (c.args[0] == "--float" ? 2 : 1) : 0]);
    CHECK(doc.at("diagnostics").is_array());
    CHECK(doc.contains("inputs_digest"));
    CHECK(doc.contains("error") == (r.exit_code == 1 || r.exit_code == 2));
  }
}

TEST_CASE("parse -> serialize -> parse is a fixed point for every shipped polytope") {
  for (const char* name : {"data/simplex2.json", "data/simplex3.json", "data/square.json", "data/chopped_asymmetric.json"}) {
    CAPTURE(name);
    const auto once = cuspcheck::io::polytope_to_json(cuspcheck::io::parse_polytope(load(name)));
    CHECK(cuspcheck::io::polytope_to_json(cuspcheck::io::parse_polytope(once)) == once);
  }
  for (const char* name : {"data/config_balanced.json", "data/config_unbalanced.json", "data/config_no_eval.json"}) {
    CAPTURE(name);
    const auto once = cuspcheck::io::configuration_to_json(cuspcheck::io::parse_configuration(load(name)));
    CHECK(cuspcheck::io::configuration_to_json(cuspcheck::io::parse_configuration(once)) == once);
  }
  for (const char* name : {"data/trivial.json", "data/spectrum_mixed.json"}) {
    CAPTURE(name);
    const auto once = cuspcheck::io::spectrum_to_json(cuspcheck::io::parse_spectrum(load(name)));
    CHECK(cuspcheck::io::spectrum_to_json(cuspcheck::io::parse_spectrum(once)) == once);
  }
}

TEST_CASE("blowup and tower outputs are valid polytope documents") {
  const auto blown = run_json({"blowup", "data/simplex2.json", "--vertex", "0,0", "--eps", "1/4"}, 0);
  const auto p = cuspcheck::io::parse_polytope(blown.at("result").at("polytope"));
  CHECK(p.facet_count() == 4);
  CHECK(cuspcheck::io::polytope_to_json(p) == blown.at("result").at("polytope"));

  const auto tower = run_json({"tower", "data/simplex2.json", "--facet", "hyp", "--rounds", "2", "--eps", "1/4,1/16"}, 0);
  const auto rounds = tower.at("result").at("rounds");
  REQUIRE(rounds.size() == 2);
  for (const auto& r : rounds) {
    CHECK(r.at("delzant") == true);
    CHECK(r.at("obstruction").at("satisfied") == true);
  }
  CHECK(cuspcheck::io::parse_polytope(tower.at("result").at("polytope")).facet_count() == 6);
}

TEST_CASE("the divisor condition on the unit triangle reports offset -2") {
  const auto doc = run_json({"check-obstruction", "data/simplex2.json", "--facet", "hyp"}, 0);
  CHECK(doc.at("result").at("offset") == "-2");
  CHECK(doc.at("result").at("satisfied") == true);
}

TEST_CASE("--float adds decimals next to, never instead of, rationals") {
  const auto doc = run_json({"--float", "3", "extremal-affine", "data/simplex2.json", "--facet", "hyp"}, 0);
  CHECK(doc.at("result").at("constant") == "12");
  CHECK(doc.at("result_decimal").at("constant") == "12.000");
  CHECK(doc.at("result_decimal").at("excluded")[0] == "hyp");
}

TEST_CASE("stdin and file inputs produce the same digest") {
  const auto a = testing::run_cli_case({"f", {"vertices", "data/simplex3.json"}, 0, ""}, kSource);
  const auto b = testing::run_cli_case({"s", {"vertices", "-"}, 0, "data/simplex3.json"}, kSource);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors go to stderr with a nonzero exit") {
  const auto none = testing::run_cli_case({"u", {}, 1, ""}, kSource);
  CHECK(none.exit_code == 1);
  CHECK_FALSE(none.err.empty());
  const auto bad_flag = testing::run_cli_case({"u", {"vertices", "--bogus"}, 1, ""}, kSource);
  CHECK(bad_flag.exit_code == 1);
  CHECK_FALSE(bad_flag.err.empty());
  const auto missing = testing::run_cli_case({"u", {"blowup", "data/simplex2.json"}, 1, ""}, kSource);
  CHECK(missing.exit_code == 1);
}

TEST_CASE("condition violated is never reported as an error") {
  const auto r = testing::run_cli_case({"v", {"check-obstruction", "data/chopped_asymmetric.json", "--facet", "hyp"}, 3, ""}, kSource);
  CHECK(r.exit_code == 3);
  const auto doc = json::parse(r.out);
  CHECK_FALSE(doc.contains("error"));
  CHECK(doc.at("result").at("satisfied") == false);
}
