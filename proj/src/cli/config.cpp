#include "abinv/cli/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "abinv/error.hpp"

namespace abinv::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

Index parse_index(std::string_view s, std::string_view context) {
  s = trim(s);
  long v = 0;
  const char* first = s.data();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ConfigError, "bad integer '" + std::string(s) + "' in " + std::string(context));
  }
  return static_cast<Index>(v);
}

double parse_real(std::string_view s, std::string_view what) {
  try {
    return parse_complex(s).real();
  } catch (const Error&) {
    throw Error(ErrorCode::ConfigError, std::string(what) + ": not a number '" + std::string(s) + "'");
  }
}

}  // namespace

std::string_view to_string(Check check) noexcept {
  switch (check) {
    case Check::Antisym: return "antisym";
    case Check::Tsi: return "tsi";
    case Check::Qsi: return "qsi";
    case Check::Cond3: return "cond3";
    case Check::Delta: return "delta";
    case Check::ClosedForm: return "closed-form";
    case Check::Counterexample: return "counterexample";
    case Check::EdsProperty: return "eds-property";
  }
  return "unknown";
}

Check parse_check(std::string_view name) {
  for (Check c : {Check::Antisym, Check::Tsi, Check::Qsi, Check::Cond3, Check::Delta, Check::ClosedForm,
                  Check::Counterexample, Check::EdsProperty}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::ConfigError, "unknown check '" + std::string(name) + "'");
}

std::vector<Check> parse_checks(std::string_view list) {
  std::vector<Check> checks;
  for (auto part : split(list, ',')) {
    if (part.empty()) continue;
    Check c = parse_check(part);
    bool seen = false;
    for (Check d : checks) seen = seen || d == c;
    if (!seen) checks.push_back(c);
  }
  if (checks.empty()) throw Error(ErrorCode::ConfigError, "empty check list");
  return checks;
}

Window parse_window(std::string_view text) {
  const std::string_view s = trim(text);
  // Search for ".." after the first character so "-3..2" splits correctly.
  const auto pos = s.find("..", s.empty() ? 0 : 1);
  if (pos == std::string_view::npos) {
    throw Error(ErrorCode::ConfigError, "window must look like lo..hi, got '" + std::string(s) + "'");
  }
  Window w{parse_index(s.substr(0, pos), "window"), parse_index(s.substr(pos + 2), "window")};
  if (w.empty()) throw Error(ErrorCode::ConfigError, "empty window '" + std::string(s) + "'");
  return w;
}

std::map<std::string, std::string> parse_params(std::string_view text) {
  std::map<std::string, std::string> params;
  for (auto part : split(text, ',')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, "parameter '" + std::string(part) + "' is not key=value");
    }
    std::string key(trim(part.substr(0, eq)));
    std::string value(trim(part.substr(eq + 1)));
    if (key.empty() || value.empty()) throw Error(ErrorCode::ConfigError, "malformed parameter '" + std::string(part) + "'");
    if (!params.emplace(key, value).second) throw Error(ErrorCode::ConfigError, "duplicate parameter '" + key + "'");
  }
  return params;
}

RunConfig parse_config_text(std::string_view text) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, "config line " + std::to_string(line_no) + " is not key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "family") {
      config.family = std::string(value);
    } else if (key == "window") {
      config.window = parse_window(value);
    } else if (key == "tolerance") {
      config.tolerance = parse_real(value, "tolerance");
    } else if (key == "truncation-tail") {
      config.truncation.tail_bound = parse_real(value, "truncation-tail");
    } else if (key == "truncation-max") {
      config.truncation.max_terms = parse_index(value, "truncation-max");
    } else if (key == "checks") {
      config.checks = parse_checks(value);
    } else if (key == "params") {
      for (auto& [k, v] : parse_params(value)) config.params[k] = v;
    } else {
      if (key.empty() || value.empty()) {
        throw Error(ErrorCode::ConfigError, "config line " + std::to_string(line_no) + " is malformed");
      }
      config.params[key] = std::string(value);
    }
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace abinv::cli
