#pragma once

// Run configuration for the verification CLI: flags, key=value config files, parsing helpers.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abinv/kernels.hpp"
#include "abinv/theta.hpp"

namespace abinv::cli {

enum class Check { Antisym, Tsi, Qsi, Cond3, Delta, ClosedForm, Counterexample, EdsProperty };

std::string_view to_string(Check check) noexcept;
Check parse_check(std::string_view name);
std::vector<Check> parse_checks(std::string_view list);

struct RunConfig {
  std::string family;
  std::map<std::string, std::string> params;  // raw text, interpreted by the family
  std::optional<Window> window;               // family default when unset
  std::optional<double> tolerance;            // float families only; default 1e-8
  TruncationPolicy truncation;
  std::vector<Check> checks;  // empty: every check the family supports
};

/// "lo..hi", both ends inclusive, lo <= hi.
Window parse_window(std::string_view text);

/// "a=2,b=3,p=1/5" -> {a:2, b:3, p:1/5}. Keys must be unique.
std::map<std::string, std::string> parse_params(std::string_view text);

/// Plain key=value lines; '#' starts a comment. Recognised keys are family, window, tolerance,
/// truncation-tail, truncation-max, checks and params (a comma list); any other key is a parameter.
RunConfig parse_config_text(std::string_view text);
RunConfig load_config_file(const std::string& path);

}  // namespace abinv::cli
