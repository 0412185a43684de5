#pragma once

// The verify / counterexample / eds commands. Each returns a JSON report and a verdict;
// exact residuals are serialised as "0" or "num/den" strings, float residuals as numbers.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "abinv/cli/config.hpp"

namespace abinv::cli {

inline constexpr std::string_view kArtifactVersion = "1.0.0";

struct ReportDocument {
  nlohmann::json json;
  bool pass = false;
  bool setup_error = false;  // configuration or parameter problem before any check ran

  /// 0 when every check passed, 1 when a check failed, 2 on a setup error.
  [[nodiscard]] int exit_code() const noexcept { return setup_error ? 2 : (pass ? 0 : 1); }
};

std::vector<std::string> family_names();

/// The shipped parameter preset, window and check list for a family.
RunConfig preset(std::string_view family);

ReportDocument cmd_verify(const RunConfig& config);

/// Every family at its preset; tolerance and truncation from `overrides` when set.
ReportDocument cmd_verify_all_presets(const RunConfig& overrides);

/// Both beta recursions on the alpha(k,n) = k+n, t_k = k seed for each k in the range,
/// compared with the published gap-3 and gap-4 differences.
ReportDocument cmd_counterexample(Window k_range);

ReportDocument cmd_eds(const Rational& w2, const Rational& w3, const Rational& w4, Index bound);

}  // namespace abinv::cli
