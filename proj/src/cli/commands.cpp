#include "abinv/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <set>

#include "abinv/eds.hpp"
#include "abinv/error.hpp"
#include "abinv/families.hpp"
#include "abinv/identities.hpp"
#include "abinv/recursions.hpp"

namespace abinv::cli {

using nlohmann::json;

namespace {

constexpr double kDefaultTolerance = 1e-8;

struct FamilyEntry {
  std::string name;
  bool exact;
  std::vector<std::pair<std::string, std::string>> defaults;  // ordered parameter list with preset values
  Window window;
  std::vector<Check> checks;
};

const std::vector<FamilyEntry>& registry() {
  using C = Check;
  static const std::vector<FamilyEntry> entries = {
      {"binomial", true, {}, {0, 8}, {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta, C::ClosedForm}},
      {"gasper", true, {{"a", "2"}, {"b", "3"}, {"p", "1/5"}, {"q", "1/7"}}, {0, 6},
       {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta, C::ClosedForm}},
      {"schlosser", true, {{"a", "1/2"}, {"b", "2"}, {"c", "7"}, {"q", "1/3"}}, {0, 6},
       {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta, C::ClosedForm}},
      {"corollary36", true,
       {{"x0", "2"}, {"x1", "1/3"}, {"y0", "3"}, {"y1", "1/2"}, {"t0", "1"}, {"t1", "1/4"}}, {-2, 5},
       {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta}},
      {"corollary37", true,
       {{"a0", "0"}, {"a1", "1"}, {"b0", "1"}, {"b1", "0"}, {"x0", "1"}, {"x1", "0"}, {"y0", "0"}, {"y1", "1"}},
       {1, 6}, {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta}},
      {"eds", true, {{"W2", "1"}, {"W3", "-1"}, {"W4", "1"}}, {1, 6},
       {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta, C::ClosedForm, C::EdsProperty}},
      {"example38", true, {}, {1, 5}, {C::Counterexample}},
      {"warnaar", false, {{"q", "0.1"}, {"b0", "2"}, {"b1", "0.1"}, {"x0", "0.3"}, {"x1", "0.05"}}, {0, 4},
       {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta}},
      {"new-elliptic", false, {{"x", "0.3"}, {"y", "0.7"}, {"q", "0.4"}, {"p", "0.1"}, {"t", "1"}}, {0, 3},
       {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta, C::ClosedForm}},
      {"partial-theta", false, {{"q", "0.1"}, {"a0", "1"}, {"a1", "0.1"}, {"b0", "0.2"}, {"b1", "0.05"}}, {0, 3},
       {C::Antisym, C::Tsi, C::Qsi, C::Cond3, C::Delta}},
  };
  return entries;
}

const FamilyEntry& find_family(std::string_view name) {
  for (const auto& spec : registry()) {
    if (spec.name == name) return spec;
  }
  throw Error(ErrorCode::ConfigError, "unknown family '" + std::string(name) + "'");
}

/// Parameter lookup against the family's declared keys, falling back to the preset.
class ParamReader {
 public:
  ParamReader(const FamilyEntry& spec, const std::map<std::string, std::string>& given) : spec_(spec) {
    for (const auto& [k, v] : given) {
      bool known = false;
      for (const auto& [dk, dv] : spec.defaults) known = known || dk == k;
      if (!known) throw Error(ErrorCode::ConfigError, spec.name + ": unknown parameter '" + k + "'");
    }
    for (const auto& [dk, dv] : spec.defaults) {
      auto it = given.find(dk);
      values_[dk] = it == given.end() ? dv : it->second;
    }
  }

  Rational rational(const std::string& key) {
    Rational r = parse_rational(values_.at(key));
    echo_[key] = r.get_str();
    return r;
  }

  Complex real(const std::string& key) {
    Complex c = parse_complex(values_.at(key));
    echo_[key] = c.real();
    return c;
  }

  [[nodiscard]] json echo() const { return echo_; }

 private:
  const FamilyEntry& spec_;
  std::map<std::string, std::string> values_;
  json echo_ = json::object();
};

template <FieldScalar S>
IndexFn<S> affine(S base, S step) {
  return [base, step](Index i) { return S(base + step * ScalarTraits<S>::from_int(i)); };
}

template <FieldScalar S>
struct Instance {
  Kernel<S> kernel;
  PairFn<S> closed_f;  // empty when the family has no separate closed form
  PairFn<S> closed_g;
};

template <FieldScalar S>
json residual_json(const ResidualSummary<S>& s) {
  if constexpr (ScalarTraits<S>::exact) {
    return ScalarTraits<S>::to_string(s.worst_value);
  } else {
    return s.worst;
  }
}

template <FieldScalar S>
ResidualSummary<S> combine(ResidualSummary<S> a, const ResidualSummary<S>& b) {
  a.evaluated += b.evaluated;
  a.failures += b.failures;
  if (b.worst > a.worst) {
    a.worst = b.worst;
    a.worst_value = b.worst_value;
  }
  return a;
}

class Stopwatch {
 public:
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <FieldScalar S>
json check_json(std::string_view name, const ResidualSummary<S>& s, double elapsed) {
  json j;
  j["name"] = name;
  j["pass"] = s.pass();
  j["evaluated"] = s.evaluated;
  j["failures"] = s.failures;
  j["worst_residual"] = residual_json(s);
  j["exact_zero"] = s.worst == 0.0 && (ScalarTraits<S>::exact ? is_zero(s.worst_value) : true);
  j["elapsed_ms"] = elapsed;
  return j;
}

json failed_check_json(std::string_view name, const Error& e, double elapsed) {
  json j;
  j["name"] = name;
  j["pass"] = false;
  j["error"] = to_string(e.code());
  j["message"] = e.what();
  j["elapsed_ms"] = elapsed;
  return j;
}

template <FieldScalar S>
ResidualSummary<S> closed_form_summary(const Instance<S>& inst, Window window, double tol) {
  auto summary = make_summary<S>(tol);
  for (Index n = window.lo; n <= window.hi; ++n) {
    for (Index k = window.lo; k <= n; ++k) {
      const S f = f_entry(inst.kernel, n, k);
      const S g = g_entry(inst.kernel, n, k);
      S df = inst.closed_f(n, k) - f;
      S dg = inst.closed_g(n, k) - g;
      if constexpr (!ScalarTraits<S>::exact) {
        // Relative to the entry size; float entries span many magnitudes.
        df = df / std::max(1.0, magnitude(f));
        dg = dg / std::max(1.0, magnitude(g));
      }
      summary.add(df);
      summary.add(dg);
    }
  }
  return summary;
}

template <FieldScalar S>
json run_check(Check check, const Instance<S>& inst, Window window, double tol, const EdsSequence* eds) {
  Stopwatch clock;
  const Window identity_window = window.widened(1);
  try {
    switch (check) {
      case Check::Antisym:
        return check_json(to_string(check), sweep_antisymmetry(inst.kernel, identity_window, tol), clock.elapsed_ms());
      case Check::Tsi:
        return check_json(to_string(check), sweep_tsi(inst.kernel, identity_window, tol), clock.elapsed_ms());
      case Check::Qsi:
        return check_json(to_string(check), sweep_qsi(inst.kernel, identity_window, tol), clock.elapsed_ms());
      case Check::Cond3:
        return check_json(to_string(check), sweep_cond3(inst.kernel, identity_window, tol), clock.elapsed_ms());
      case Check::Delta: {
        auto pair = TriangularPair<S>::from_kernel(inst.kernel, window);
        auto report = verify_inversion(pair, tol);
        return check_json(to_string(check), combine(report.forward, report.transposed), clock.elapsed_ms());
      }
      case Check::ClosedForm:
        return check_json(to_string(check), closed_form_summary(inst, window, tol), clock.elapsed_ms());
      case Check::EdsProperty: {
        if constexpr (ScalarTraits<S>::exact) {
          auto summary = make_summary<S>(tol);
          const Index r = eds->bound() / 2;
          for_each_tuple<3>({-r, r}, [&](const auto& t) { summary.add(eds_property_residual(*eds, t[0], t[1], t[2])); });
          return check_json(to_string(check), summary, clock.elapsed_ms());
        }
        break;
      }
      case Check::Counterexample:
        break;
    }
  } catch (const Error& e) {
    return failed_check_json(to_string(check), e, clock.elapsed_ms());
  }
  throw Error(ErrorCode::ConfigError, "check '" + std::string(to_string(check)) + "' does not apply");
}

json counterexample_check(Window k_range, json* rows_out) {
  Stopwatch clock;
  ResidualSummary<Rational> summary;
  json rows = json::array();
  try {
    for (Index k = k_range.lo; k <= k_range.hi; ++k) {
      const CounterexampleRow row = counterexample_38(k);
      const Rational p3 = published_gap3_difference(k);
      const Rational p4 = published_gap4_difference(k);
      summary.add(row.gap2);
      summary.add(Rational(row.gap3 - p3));
      summary.add(Rational(row.gap4 - p4));
      rows.push_back({{"k", k},
                      {"t2_minus_d2", row.gap2.get_str()},
                      {"t3_minus_d3", row.gap3.get_str()},
                      {"t4_minus_d4", row.gap4.get_str()},
                      {"published_t3_minus_d3", p3.get_str()},
                      {"published_t4_minus_d4", p4.get_str()},
                      {"gap2_zero", sgn(row.gap2) == 0},
                      {"gap3_matches", row.gap3 == p3},
                      {"gap4_matches", row.gap4 == p4}});
    }
  } catch (const Error& e) {
    return failed_check_json("counterexample", e, clock.elapsed_ms());
  }
  if (rows_out) *rows_out = rows;
  return check_json("counterexample", summary, clock.elapsed_ms());
}

std::vector<Check> resolve_checks(const FamilyEntry& spec, const std::vector<Check>& requested) {
  if (requested.empty()) return spec.checks;
  for (Check c : requested) {
    if (std::find(spec.checks.begin(), spec.checks.end(), c) == spec.checks.end()) {
      throw Error(ErrorCode::ConfigError,
                  "check '" + std::string(to_string(c)) + "' is not available for family " + spec.name);
    }
  }
  return requested;
}

template <FieldScalar S>
void run_instance(const Instance<S>& inst, const std::vector<Check>& checks, Window window, double tol,
                  const EdsSequence* eds, ReportDocument& doc) {
  bool all = true;
  for (Check c : checks) {
    json j = run_check(c, inst, window, tol, eds);
    all = all && j["pass"].get<bool>();
    doc.json["checks"].push_back(std::move(j));
  }
  doc.pass = all;
}

Instance<Rational> build_exact(const FamilyEntry& spec, ParamReader& params, Window window,
                               std::optional<EdsSequence>& eds) {
  Instance<Rational> inst;
  const std::string& f = spec.name;
  if (f == "binomial") {
    inst.kernel = binomial_kernel<Rational>();
    auto factorial = [](Index m) {
      mpz_class v;
      mpz_fac_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
      return Rational(v);
    };
    inst.closed_f = [factorial](Index n, Index k) { return Rational(1 / factorial(n - k)); };
    inst.closed_g = [factorial](Index n, Index k) {
      return Rational(((n - k) % 2 == 0 ? 1 : -1) / factorial(n - k));
    };
  } else if (f == "gasper") {
    GasperParams g{params.rational("a"), params.rational("b"), params.rational("p"), params.rational("q")};
    inst.kernel = gasper_kernel(g, window);
    inst.closed_f = [g](Index n, Index k) { return gasper_closed_f(g, n, k); };
    inst.closed_g = [g](Index n, Index k) { return gasper_closed_g(g, n, k); };
  } else if (f == "schlosser") {
    SchlosserParams s{params.rational("a"), params.rational("b"), params.rational("c"), params.rational("q")};
    inst.kernel = schlosser_kernel(s, window);
    inst.closed_f = [s](Index n, Index k) { return schlosser_closed_f(s, n, k); };
    inst.closed_g = [s](Index n, Index k) { return schlosser_closed_g(s, n, k); };
  } else if (f == "corollary36") {
    FactorSequences<Rational> seq{affine(params.rational("x0"), params.rational("x1")),
                                  affine(params.rational("y0"), params.rational("y1")),
                                  affine(params.rational("t0"), params.rational("t1"))};
    inst.kernel = corollary36_kernel(seq);
    for (Index i = window.lo - 1; i <= window.hi + 1; ++i) {
      if (sgn(seq.x(i)) == 0 || sgn(seq.y(i)) == 0) {
        throw Error(ErrorCode::DegenerateParams, "corollary36: x_i or y_i vanishes at i=" + std::to_string(i));
      }
    }
    validate_family_window(inst.kernel, window);
  } else if (f == "corollary37") {
    inst.kernel = corollary37_kernel(affine(params.rational("a0"), params.rational("a1")),
                                     affine(params.rational("b0"), params.rational("b1")),
                                     affine(params.rational("x0"), params.rational("x1")),
                                     affine(params.rational("y0"), params.rational("y1")));
    validate_family_window(inst.kernel, window);
  } else if (f == "eds") {
    const Index reach = std::max(std::abs(window.lo), std::abs(window.hi)) + 1;
    eds = EdsSequence::generate(params.rational("W2"), params.rational("W3"), params.rational("W4"), 2 * reach);
    inst.kernel = eds_kernel(*eds, window);
    const EdsSequence& w = *eds;
    inst.closed_f = [&w](Index n, Index k) { return eds_closed_f(w, n, k); };
    inst.closed_g = [&w](Index n, Index k) { return eds_closed_g(w, n, k); };
  } else {
    throw Error(ErrorCode::ConfigError, "no exact builder for family " + f);
  }
  return inst;
}

Instance<Complex> build_float(const FamilyEntry& spec, ParamReader& params, Window window,
                              const TruncationPolicy& policy) {
  Instance<Complex> inst;
  const std::string& f = spec.name;
  if (f == "warnaar") {
    const Complex q = params.real("q");
    WarnaarParams w{q, affine(params.real("b0"), params.real("b1")), affine(params.real("x0"), params.real("x1")),
                    policy};
    inst.kernel = warnaar_kernel(w, window);
  } else if (f == "new-elliptic") {
    NewEllipticParams e{params.real("x"), params.real("y"), params.real("q"), params.real("p"), {}, policy};
    const Complex t = params.real("t");
    e.t = [t](Index) { return t; };
    inst.kernel = new_elliptic_kernel(e, window);
    inst.closed_f = [e](Index n, Index k) { return new_elliptic_closed_f(e, n, k); };
    inst.closed_g = [e](Index n, Index k) { return new_elliptic_closed_g(e, n, k); };
  } else if (f == "partial-theta") {
    PartialThetaParams pt{params.real("q"), affine(params.real("a0"), params.real("a1")),
                          affine(params.real("b0"), params.real("b1")), policy};
    inst.kernel = partial_theta_kernel(pt, window);
  } else {
    throw Error(ErrorCode::ConfigError, "no float builder for family " + f);
  }
  return inst;
}

json truncation_json(const TruncationPolicy& policy) {
  return {{"tail_bound", policy.tail_bound}, {"max_terms", policy.max_terms}};
}

ReportDocument error_document(ReportDocument doc, const Error& e) {
  doc.json["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
  doc.json["pass"] = false;
  doc.pass = false;
  doc.setup_error = true;
  return doc;
}

}  // namespace

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (const auto& spec : registry()) names.push_back(spec.name);
  return names;
}

RunConfig preset(std::string_view family) {
  const FamilyEntry& spec = find_family(family);
  RunConfig config;
  config.family = spec.name;
  for (const auto& [k, v] : spec.defaults) config.params[k] = v;
  config.window = spec.window;
  config.checks = spec.checks;
  if (!spec.exact) config.tolerance = kDefaultTolerance;
  return config;
}

ReportDocument cmd_verify(const RunConfig& config) {
  ReportDocument doc;
  doc.json["artifact_version"] = kArtifactVersion;
  doc.json["command"] = "verify";
  doc.json["family"] = config.family;
  doc.json["checks"] = json::array();
  try {
    const FamilyEntry& spec = find_family(config.family);
    const Window window = config.window.value_or(spec.window);
    const std::vector<Check> checks = resolve_checks(spec, config.checks);
    config.truncation.validate();
    ParamReader params(spec, config.params);
    doc.json["domain"] = spec.exact ? ScalarTraits<Rational>::domain_name : ScalarTraits<Complex>::domain_name;
    doc.json["window"] = window.to_string();
    doc.json["identity_window"] = window.widened(1).to_string();

    if (spec.name == "example38") {
      doc.json["params"] = json::object();
      doc.json["tolerance"] = nullptr;
      json rows;
      json j = counterexample_check(window, &rows);
      doc.pass = j["pass"].get<bool>();
      doc.json["checks"].push_back(std::move(j));
      doc.json["rows"] = rows;
    } else if (spec.exact) {
      std::optional<EdsSequence> eds;
      Instance<Rational> inst = build_exact(spec, params, window, eds);
      doc.json["params"] = params.echo();
      doc.json["tolerance"] = nullptr;
      run_instance(inst, checks, window, 0.0, eds ? &*eds : nullptr, doc);
    } else {
      const double tol = config.tolerance.value_or(kDefaultTolerance);
      if (!(tol > 0.0)) throw Error(ErrorCode::ConfigError, "tolerance must be positive for float families");
      Instance<Complex> inst = build_float(spec, params, window, config.truncation);
      doc.json["params"] = params.echo();
      doc.json["tolerance"] = tol;
      doc.json["truncation"] = truncation_json(config.truncation);
      run_instance(inst, checks, window, tol, nullptr, doc);
    }
  } catch (const Error& e) {
    return error_document(std::move(doc), e);
  }
  doc.json["pass"] = doc.pass;
  return doc;
}

ReportDocument cmd_verify_all_presets(const RunConfig& overrides) {
  ReportDocument doc;
  doc.json["artifact_version"] = kArtifactVersion;
  doc.json["command"] = "verify-all-presets";
  doc.json["reports"] = json::array();
  bool all = true;
  bool setup_error = false;
  for (const auto& name : family_names()) {
    RunConfig config = preset(name);
    if (overrides.tolerance && config.tolerance) config.tolerance = overrides.tolerance;
    config.truncation = overrides.truncation;
    ReportDocument one = cmd_verify(config);
    all = all && one.pass;
    setup_error = setup_error || one.setup_error;
    doc.json["reports"].push_back(std::move(one.json));
  }
  doc.pass = all;
  doc.setup_error = setup_error;
  doc.json["pass"] = all;
  return doc;
}

ReportDocument cmd_counterexample(Window k_range) {
  ReportDocument doc;
  doc.json["artifact_version"] = kArtifactVersion;
  doc.json["command"] = "counterexample";
  doc.json["k_range"] = k_range.to_string();
  doc.json["checks"] = json::array();
  if (k_range.empty() || k_range.lo < 1) {
    return error_document(std::move(doc), Error(ErrorCode::ConfigError, "k range must be nonempty with k >= 1"));
  }
  json rows;
  json j = counterexample_check(k_range, &rows);
  doc.pass = j["pass"].get<bool>();
  doc.json["checks"].push_back(std::move(j));
  doc.json["rows"] = rows;
  doc.json["pass"] = doc.pass;
  return doc;
}

ReportDocument cmd_eds(const Rational& w2, const Rational& w3, const Rational& w4, Index bound) {
  ReportDocument doc;
  doc.json["artifact_version"] = kArtifactVersion;
  doc.json["command"] = "eds";
  doc.json["seeds"] = {w2.get_str(), w3.get_str(), w4.get_str()};
  doc.json["bound"] = bound;
  doc.json["checks"] = json::array();
  try {
    const EdsSequence w = EdsSequence::generate(w2, w3, w4, bound);
    json table = json::object();
    for (Index n = -bound; n <= bound; ++n) table[std::to_string(n)] = w(n).get_str();
    doc.json["table"] = table;

    bool all = true;
    auto push = [&](json j) {
      all = all && j["pass"].get<bool>();
      doc.json["checks"].push_back(std::move(j));
    };

    {
      Stopwatch clock;
      ResidualSummary<Rational> summary;
      for (Index n = -(bound - 2); n <= bound - 2; ++n) summary.add(w.recurrence_residual(n));
      push(check_json("recurrence", summary, clock.elapsed_ms()));
    }
    {
      Stopwatch clock;
      ResidualSummary<Rational> summary;
      const Index r = bound / 2;
      for_each_tuple<3>({-r, r}, [&](const auto& t) { summary.add(eds_property_residual(w, t[0], t[1], t[2])); });
      push(check_json("eds-property", summary, clock.elapsed_ms()));
    }
    const Window window = eds_default_window(w);
    doc.json["window"] = window.to_string();
    if (!window.empty()) {
      Instance<Rational> inst;
      Stopwatch clock;
      try {
        inst.kernel = eds_kernel(w, window);
      } catch (const Error& e) {
        push(failed_check_json("delta", e, clock.elapsed_ms()));
        doc.pass = false;
        doc.json["pass"] = false;
        return doc;
      }
      inst.closed_f = [&w](Index n, Index k) { return eds_closed_f(w, n, k); };
      inst.closed_g = [&w](Index n, Index k) { return eds_closed_g(w, n, k); };
      push(run_check(Check::Delta, inst, window, 0.0, &w));
      push(run_check(Check::ClosedForm, inst, window, 0.0, &w));
    }
    doc.pass = all;
  } catch (const Error& e) {
    return error_document(std::move(doc), e);
  }
  doc.json["pass"] = doc.pass;
  return doc;
}

}  // namespace abinv::cli
