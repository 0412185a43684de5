#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abinv {

enum class ErrorCode {
  ZeroDivisor,
  DomainError,
  NonConvergent,
  ZeroDiagonal,
  PivotDegenerate,
  DuplicateNodes,
  MissingBeta,
  DegenerateParams,
  IndexOutOfTable,
  ZeroBeta,
  ConfigError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All failures raised by the library carry a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::PivotDegenerate: return "PivotDegenerate";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::MissingBeta: return "MissingBeta";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::IndexOutOfTable: return "IndexOutOfTable";
    case ErrorCode::ZeroBeta: return "ZeroBeta";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace abinv
