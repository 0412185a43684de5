#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "abinv/cli/commands.hpp"
#include "abinv/cli/config.hpp"
#include "abinv/error.hpp"

using namespace abinv;
using namespace abinv::cli;
using nlohmann::json;

namespace {

void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ABINV_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("window and params parsing") {
  CHECK(parse_window("0..6") == Window{0, 6});
  CHECK(parse_window("-3..-1") == Window{-3, -1});
  CHECK_THROWS_AS(parse_window("4..2"), Error);
  CHECK_THROWS_AS(parse_window("4"), Error);
  const auto p = parse_params("a=2, b=3,p=1/5");
  CHECK(p.at("a") == "2");
  CHECK(p.at("p") == "1/5");
  CHECK_THROWS_AS(parse_params("a=1,a=2"), Error);
  CHECK(parse_checks("tsi,delta,tsi").size() == 2);
  CHECK_THROWS_AS(parse_checks("tsi,bogus"), Error);
}

TEST_CASE("config text") {
  const RunConfig c = parse_config_text(
      "# gasper preset\nfamily = gasper\nwindow = 0..5\nparams = a=2,b=3\np = 1/5\nq=1/7\nchecks = tsi,delta\n"
      "truncation-tail = 1e-15\n");
  CHECK(c.family == "gasper");
  CHECK(c.window == Window{0, 5});
  CHECK(c.params.at("b") == "3");
  CHECK(c.params.at("q") == "1/7");
  CHECK(c.checks.size() == 2);
  CHECK(c.truncation.tail_bound == 1e-15);
  CHECK_THROWS_AS(parse_config_text("window\n"), Error);
}

TEST_CASE("exact report serialises residuals as strings") {
  RunConfig c = preset("gasper");
  c.checks = parse_checks("tsi,delta");
  const ReportDocument doc = cmd_verify(c);
  CHECK(doc.pass);
  CHECK(doc.exit_code() == 0);
  const json back = json::parse(doc.json.dump());
  CHECK(back == doc.json);
  CHECK(back["family"] == "gasper");
  CHECK(back["params"]["p"] == "1/5");
  CHECK(back["window"] == "0..6");
  for (const auto& check : back["checks"]) {
    CHECK(check["worst_residual"].is_string());
    CHECK(check["worst_residual"] == "0");
    CHECK(check["exact_zero"] == true);
    CHECK(check.contains("elapsed_ms"));
  }
}

TEST_CASE("float report") {
  RunConfig c = preset("warnaar");
  c.params = {{"q", "0.1"}};
  c.window = Window{0, 4};
  c.tolerance = 1e-8;
  const ReportDocument doc = cmd_verify(c);
  CHECK(doc.exit_code() == 0);
  CHECK(doc.json["checks"][0]["worst_residual"].is_number());
  CHECK(doc.json["truncation"]["tail_bound"] == 1e-17);
}

TEST_CASE("deterministic in exact mode") {
  json a = cmd_verify(preset("schlosser")).json;
  json b = cmd_verify(preset("schlosser")).json;
  strip_timing(a);
  strip_timing(b);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("setup errors") {
  RunConfig c = preset("gasper");
  c.params["a"] = "0";
  ReportDocument doc = cmd_verify(c);
  CHECK(doc.exit_code() == 2);
  CHECK(doc.json["error"]["code"] == "DegenerateParams");

  c = preset("gasper");
  c.params["zz"] = "1";
  CHECK(cmd_verify(c).json["error"]["code"] == "ConfigError");

  c = preset("gasper");
  c.checks = {Check::EdsProperty};
  CHECK(cmd_verify(c).exit_code() == 2);

  c = preset("warnaar");
  c.tolerance = 0.0;
  CHECK(cmd_verify(c).exit_code() == 2);

  c.family = "nope";
  CHECK(cmd_verify(c).exit_code() == 2);
}

TEST_CASE("a failed check exits 1") {
  RunConfig c = preset("warnaar");
  c.tolerance = 1e-30;
  const ReportDocument doc = cmd_verify(c);
  CHECK_FALSE(doc.pass);
  CHECK(doc.exit_code() == 1);
}

TEST_CASE("every preset passes") {
  const ReportDocument doc = cmd_verify_all_presets(RunConfig{});
  CHECK(doc.exit_code() == 0);
  CHECK(doc.json["reports"].size() == family_names().size());
}

TEST_CASE("counterexample command") {
  const ReportDocument doc = cmd_counterexample({1, 5});
  CHECK(doc.exit_code() == 0);
  const auto& rows = doc.json["rows"];
  REQUIRE(rows.size() == 5);
  CHECK(rows[0]["t3_minus_d3"] == "77/120");
  CHECK(rows[1]["t3_minus_d3"] == "87/112");
  for (const auto& r : rows) CHECK(r["t2_minus_d2"] == "0");
  CHECK(cmd_counterexample({0, 2}).exit_code() == 2);
}

TEST_CASE("eds command") {
  const ReportDocument doc = cmd_eds(1, -1, 1, 12);
  CHECK(doc.exit_code() == 0);
  CHECK(doc.json["table"]["5"] == "2");
  CHECK(doc.json["table"]["9"] == "7");
  CHECK(doc.json["table"]["-9"] == "-7");
  CHECK(cmd_eds(1, -1, 1, 4).exit_code() == 0);
  const ReportDocument bad = cmd_eds(0, 1, 1, 8);
  CHECK(bad.exit_code() == 2);
  CHECK(bad.json["error"]["code"] == "ZeroDivisor");
}

TEST_CASE("executable exit codes") {
  const auto out = temp_file("abinv_cli_test.json").string();
  CHECK(run_cli("verify --family gasper --params a=2,b=3,p=1/5,q=1/7 --window 0..6 --checks tsi,delta --out " +
                out) == 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(json::parse(ss.str())["pass"] == true);
  CHECK(run_cli("verify --family warnaar --params q=0.1 --window 0..4 --tolerance 1e-8") == 0);
  CHECK(run_cli("verify --family gasper --params a=0") == 2);
  CHECK(run_cli("verify --family warnaar --tolerance 1e-30") == 1);
  CHECK(run_cli("verify --bogus-flag") == 2);
  CHECK(run_cli("counterexample --k 1..5") == 0);
  CHECK(run_cli("eds --seeds 1,-1,1 -N 12") == 0);
  CHECK(run_cli("eds --seeds 0,1,1") == 2);

  const auto cfg = temp_file("abinv_cli_test.cfg").string();
  std::ofstream(cfg) << "family = schlosser\nwindow = 0..4\nchecks = delta\n";
  CHECK(run_cli("verify --config " + cfg) == 0);
  CHECK(run_cli("verify --config " + cfg + " --params zz=1") == 2);
}

}  // TEST_SUITE
