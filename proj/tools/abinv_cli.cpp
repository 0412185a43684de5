// abinv_cli: verify inversion kernels, rerun the beta-recursion counterexample, tabulate EDS.
// Exit status: 0 all checks pass, 1 some check failed, 2 bad configuration or parameters.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "abinv/cli/commands.hpp"
#include "abinv/error.hpp"

namespace {

using abinv::cli::ReportDocument;

void print_summary(const nlohmann::json& j, std::ostream& os, const std::string& indent = "") {
  if (j.contains("reports")) {
    for (const auto& r : j["reports"]) print_summary(r, os, indent + "  ");
    os << indent << "overall: " << (j["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
    return;
  }
  os << indent << j.value("command", "") << ' ' << j.value("family", "") << '\n';
  if (j.contains("error")) {
    os << indent << "  error: " << j["error"]["message"].get<std::string>() << '\n';
  }
  for (const auto& c : j["checks"]) {
    os << indent << "  " << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (c.contains("worst_residual")) os << "  worst=" << c["worst_residual"].dump();
    if (c.contains("message")) os << "  " << c["message"].get<std::string>();
    os << '\n';
  }
}

int emit(const ReportDocument& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.json.dump(2) << '\n';
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << '\n';
      return 2;
    }
    f << doc.json.dump(2) << '\n';
    print_summary(doc.json, std::cout);
  }
  return doc.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(alpha,beta)-inversion verifier"};
  app.require_subcommand(1);

  std::string out;
  std::string family, params, window, checks, config_path;
  std::optional<double> tolerance, tail;
  std::optional<int> max_terms;
  bool all_presets = false;

  auto* verify = app.add_subcommand("verify", "check identities and the inversion for a kernel family");
  verify->add_option("--family", family, "family name");
  verify->add_option("--params", params, "comma list key=value");
  verify->add_option("--window", window, "lo..hi");
  verify->add_option("--tolerance", tolerance, "float tolerance (float families)");
  verify->add_option("--truncation-tail", tail, "series tail bound");
  verify->add_option("--truncation-max", max_terms, "series term cap");
  verify->add_option("--checks", checks, "comma list of checks");
  verify->add_option("--config", config_path, "key=value config file; flags override it");
  verify->add_flag("--all-presets", all_presets, "run every family at its preset");
  verify->add_option("--out", out, "write the JSON report here");

  std::string k_range = "1..5";
  auto* counter = app.add_subcommand("counterexample", "compare the two beta recursions on the k+n seed");
  counter->add_option("--k", k_range, "lo..hi, k >= 1");
  counter->add_option("--out", out, "write the JSON report here");

  std::string seeds = "1,-1,1";
  int bound = 12;
  auto* eds = app.add_subcommand("eds", "tabulate an elliptic divisibility sequence and check it");
  eds->add_option("--seeds", seeds, "W2,W3,W4");
  eds->add_option("-N,--bound", bound, "tabulate W_{-N}..W_N");
  eds->add_option("--out", out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      abinv::cli::RunConfig config;
      if (!config_path.empty()) config = abinv::cli::load_config_file(config_path);
      if (!family.empty()) config.family = family;
      if (!params.empty()) {
        for (auto& [k, v] : abinv::cli::parse_params(params)) config.params[k] = v;
      }
      if (!window.empty()) config.window = abinv::cli::parse_window(window);
      if (tolerance) config.tolerance = tolerance;
      if (tail) config.truncation.tail_bound = *tail;
      if (max_terms) config.truncation.max_terms = *max_terms;
      if (!checks.empty()) config.checks = abinv::cli::parse_checks(checks);
      if (all_presets) return emit(abinv::cli::cmd_verify_all_presets(config), out);
      if (config.family.empty()) throw abinv::Error(abinv::ErrorCode::ConfigError, "--family is required");
      return emit(abinv::cli::cmd_verify(config), out);
    }
    if (*counter) return emit(abinv::cli::cmd_counterexample(abinv::cli::parse_window(k_range)), out);
    if (*eds) {
      std::vector<std::string> parts;
      std::string cur;
      for (char c : seeds + ",") {
        if (c == ',') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (parts.size() != 3) throw abinv::Error(abinv::ErrorCode::ConfigError, "--seeds needs W2,W3,W4");
      return emit(abinv::cli::cmd_eds(abinv::parse_rational(parts[0]), abinv::parse_rational(parts[1]),
                                      abinv::parse_rational(parts[2]), bound),
                  out);
    }
  } catch (const abinv::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
