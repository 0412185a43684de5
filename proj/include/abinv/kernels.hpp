#pragma once

// (alpha, beta) kernels, the triangular matrix pairs built from them, and the
// Kronecker-delta check  sum_{k<=i<=n} F(n,i) G(i,k) = delta_{n,k}.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abinv/error.hpp"
#include "abinv/scalar.hpp"

namespace abinv {

/// Closed integer interval [lo, hi]; may reach into negative indices.
struct Window {
  Index lo = 0;
  Index hi = 0;

  [[nodiscard]] bool empty() const noexcept { return hi < lo; }
  [[nodiscard]] Index size() const noexcept { return empty() ? 0 : hi - lo + 1; }
  [[nodiscard]] bool contains(Index i) const noexcept { return lo <= i && i <= hi; }
  [[nodiscard]] Window widened(Index by) const noexcept { return {lo - by, hi + by}; }
  [[nodiscard]] std::string to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

  friend bool operator==(const Window&, const Window&) = default;
};

template <FieldScalar S>
using IndexFn = std::function<S(Index)>;

template <FieldScalar S>
using PairFn = std::function<S(Index, Index)>;

template <FieldScalar S>
struct Kernel {
  std::string name;
  PairFn<S> alpha;
  PairFn<S> beta;
  bool beta_antisymmetric = true;
};

/// Sequences a, b, s, m of the general (a,b,s,m) inversion.
template <FieldScalar S>
struct Theorem13Sequences {
  IndexFn<S> a;
  IndexFn<S> b;
  IndexFn<S> s;
  IndexFn<S> m;
};

namespace detail {

inline std::string at(Index i, Index k) {
  return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

inline void require_lower(Index n, Index k, const char* what) {
  if (n < k) {
    throw Error(ErrorCode::DomainError,
                std::string(what) + " is only defined for n >= k, got " + at(n, k));
  }
}

}  // namespace detail

/// F(n,k) = prod_{i=k}^{n-1} alpha(i,k) / prod_{i=k+1}^{n} beta(i,k).
template <FieldScalar S>
S f_entry(const Kernel<S>& kernel, Index n, Index k) {
  detail::require_lower(n, k, "F(n,k)");
  S num = one<S>();
  for (Index i = k; i < n; ++i) num = num * kernel.alpha(i, k);
  S den = one<S>();
  for (Index i = k + 1; i <= n; ++i) {
    S b = kernel.beta(i, k);
    if (is_zero(b)) throw Error(ErrorCode::ZeroDivisor, "beta" + detail::at(i, k) + " = 0 in F" + detail::at(n, k));
    den = den * b;
  }
  return num / den;
}

/// G(n,k) = alpha(k,k)/alpha(n,n) * prod_{i=k+1}^{n} alpha(i,n) / prod_{i=k}^{n-1} beta(i,n).
template <FieldScalar S>
S g_entry(const Kernel<S>& kernel, Index n, Index k) {
  detail::require_lower(n, k, "G(n,k)");
  const S diag_n = kernel.alpha(n, n);
  if (is_zero(diag_n)) throw Error(ErrorCode::ZeroDiagonal, "alpha" + detail::at(n, n) + " = 0");
  if (n == k) return one<S>();
  S num = kernel.alpha(k, k);
  for (Index i = k + 1; i <= n; ++i) num = num * kernel.alpha(i, n);
  S den = diag_n;
  for (Index i = k; i < n; ++i) {
    S b = kernel.beta(i, n);
    if (is_zero(b)) throw Error(ErrorCode::ZeroDivisor, "beta" + detail::at(i, n) + " = 0 in G" + detail::at(n, k));
    den = den * b;
  }
  return num / den;
}

/// (F(n,k), G(n,k)) of the general inversion
///   F(n,k) = b_n/b_k prod_{i=k+1}^{n} m_i (s_k - s_{i-1} + a_{i-1} b_{i-1} m_{i-1}) / (s_k - s_i)
///   G(n,k) = a_k/a_n prod_{i=k}^{n-1} m_i (s_n - s_{i+1} + a_{i+1} b_{i+1} m_{i+1}) / (s_n - s_i).
template <FieldScalar S>
std::pair<S, S> theorem13_entries(const Theorem13Sequences<S>& seq, Index n, Index k) {
  detail::require_lower(n, k, "general inversion entry");
  if (n == k) return {one<S>(), one<S>()};
  const S bk = seq.b(k);
  const S an = seq.a(n);
  if (is_zero(bk)) throw Error(ErrorCode::ZeroDivisor, "b_" + std::to_string(k) + " = 0");
  if (is_zero(an)) throw Error(ErrorCode::ZeroDivisor, "a_" + std::to_string(n) + " = 0");
  auto c = [&](Index i) { return S(seq.a(i) * seq.b(i) * seq.m(i)); };

  const S sk = seq.s(k);
  S f = seq.b(n) / bk;
  for (Index i = k + 1; i <= n; ++i) {
    const S d = sk - seq.s(i);
    if (is_zero(d)) throw Error(ErrorCode::ZeroDivisor, "s_" + std::to_string(k) + " = s_" + std::to_string(i));
    f = f * seq.m(i) * (sk - seq.s(i - 1) + c(i - 1)) / d;
  }

  const S sn = seq.s(n);
  S g = seq.a(k) / an;
  for (Index i = k; i < n; ++i) {
    const S d = sn - seq.s(i);
    if (is_zero(d)) throw Error(ErrorCode::ZeroDivisor, "s_" + std::to_string(n) + " = s_" + std::to_string(i));
    g = g * seq.m(i) * (sn - seq.s(i + 1) + c(i + 1)) / d;
  }
  return {f, g};
}

/// Lower-triangular F and G tabulated over a window. Construction validates the
/// nondegeneracy preconditions for that window and evaluates every entry once.
template <FieldScalar S>
class TriangularPair {
 public:
  using EntryFn = std::function<S(Index, Index)>;

  TriangularPair(std::string label, Window window, const EntryFn& f, const EntryFn& g)
      : label_(std::move(label)), window_(window) {
    if (window.empty()) throw Error(ErrorCode::DomainError, "empty window " + window.to_string());
    const auto w = static_cast<std::size_t>(window.size());
    f_.reserve(w * (w + 1) / 2);
    g_.reserve(w * (w + 1) / 2);
    for (Index n = window.lo; n <= window.hi; ++n) {
      for (Index k = window.lo; k <= n; ++k) {
        f_.push_back(f(n, k));
        g_.push_back(g(n, k));
      }
    }
  }

  static TriangularPair from_kernel(const Kernel<S>& kernel, Window window) {
    validate_kernel(kernel, window);
    return TriangularPair(
        kernel.name, window, [&](Index n, Index k) { return f_entry(kernel, n, k); },
        [&](Index n, Index k) { return g_entry(kernel, n, k); });
  }

  static TriangularPair from_theorem13(const Theorem13Sequences<S>& seq, Window window,
                                       std::string label = "general-inversion") {
    for (Index n = window.lo; n <= window.hi; ++n) {
      if (is_zero(seq.a(n))) throw Error(ErrorCode::ZeroDivisor, "a_" + std::to_string(n) + " = 0");
      if (is_zero(seq.b(n))) throw Error(ErrorCode::ZeroDivisor, "b_" + std::to_string(n) + " = 0");
      for (Index i = window.lo; i < n; ++i) {
        if (is_zero(S(seq.s(n) - seq.s(i)))) {
          throw Error(ErrorCode::ZeroDivisor, "s_" + std::to_string(i) + " = s_" + std::to_string(n));
        }
      }
    }
    return TriangularPair(
        std::move(label), window, [&](Index n, Index k) { return theorem13_entries(seq, n, k).first; },
        [&](Index n, Index k) { return theorem13_entries(seq, n, k).second; });
  }

  /// alpha(n,n) != 0 and beta(i,k) != 0 for i != k, everywhere on the window.
  static void validate_kernel(const Kernel<S>& kernel, Window window) {
    for (Index n = window.lo; n <= window.hi; ++n) {
      if (is_zero(kernel.alpha(n, n))) {
        throw Error(ErrorCode::ZeroDiagonal, kernel.name + ": alpha" + detail::at(n, n) + " = 0 on window " +
                                                 window.to_string());
      }
      for (Index k = window.lo; k <= window.hi; ++k) {
        if (k != n && is_zero(kernel.beta(n, k))) {
          throw Error(ErrorCode::ZeroBeta, kernel.name + ": beta" + detail::at(n, k) + " = 0 on window " +
                                               window.to_string());
        }
      }
    }
  }

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] Window window() const noexcept { return window_; }

  [[nodiscard]] const S& f(Index n, Index k) const { return f_[offset(n, k)]; }
  [[nodiscard]] const S& g(Index n, Index k) const { return g_[offset(n, k)]; }

 private:
  [[nodiscard]] std::size_t offset(Index n, Index k) const {
    if (!window_.contains(n) || !window_.contains(k) || n < k) {
      throw Error(ErrorCode::IndexOutOfTable, "entry " + detail::at(n, k) + " outside lower triangle of " +
                                                  window_.to_string());
    }
    const auto r = static_cast<std::size_t>(n - window_.lo);
    return r * (r + 1) / 2 + static_cast<std::size_t>(k - window_.lo);
  }

  std::string label_;
  Window window_;
  std::vector<S> f_;
  std::vector<S> g_;
};

/// Largest-magnitude residual over a sweep, with the pass verdict.
template <FieldScalar S>
struct ResidualSummary {
  std::size_t evaluated = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  S worst_value = zero<S>();
  std::optional<double> tolerance;  // empty: exact comparison against zero

  [[nodiscard]] bool pass() const noexcept { return failures == 0; }

  void add(const S& residual) {
    ++evaluated;
    const double m = magnitude(residual);
    const bool ok = tolerance ? m <= *tolerance : is_zero(residual);
    if (!ok) ++failures;
    if (evaluated == 1 || m > worst) {
      worst = m;
      worst_value = residual;
    }
  }
};

template <FieldScalar S>
ResidualSummary<S> make_summary(double tolerance) {
  ResidualSummary<S> summary;
  if constexpr (!ScalarTraits<S>::exact) {
    if (!(tolerance > 0.0)) throw Error(ErrorCode::DomainError, "float checks need a tolerance > 0");
    summary.tolerance = tolerance;
  }
  return summary;
}

template <FieldScalar S>
struct VerificationReport {
  using Table = std::map<std::pair<Index, Index>, S>;

  Window window;
  Table residuals;             // sum_i F(n,i) G(i,k) - delta_{n,k}
  Table transposed_residuals;  // sum_i G(n,i) F(i,k) - delta_{n,k}
  ResidualSummary<S> forward;
  ResidualSummary<S> transposed;

  [[nodiscard]] bool pass() const noexcept { return forward.pass() && transposed.pass(); }
  [[nodiscard]] double worst() const noexcept { return std::max(forward.worst, transposed.worst); }
  [[nodiscard]] bool exact() const noexcept { return !forward.tolerance.has_value(); }
};

/// Both compositions F*G and G*F against the identity on every lo <= k <= n <= hi.
/// Exact scalars are compared exactly; float scalars need tolerance > 0.
template <FieldScalar S>
VerificationReport<S> verify_inversion(const TriangularPair<S>& pair, double tolerance = 0.0) {
  VerificationReport<S> report;
  report.window = pair.window();
  report.forward = make_summary<S>(tolerance);
  report.transposed = make_summary<S>(tolerance);
  const Window w = pair.window();
  for (Index n = w.lo; n <= w.hi; ++n) {
    for (Index k = w.lo; k <= n; ++k) {
      S fg = zero<S>();
      S gf = zero<S>();
      for (Index i = k; i <= n; ++i) {
        fg = fg + pair.f(n, i) * pair.g(i, k);
        gf = gf + pair.g(n, i) * pair.f(i, k);
      }
      if (n == k) {
        fg = fg - one<S>();
        gf = gf - one<S>();
      }
      report.forward.add(fg);
      report.transposed.add(gf);
      report.residuals.emplace(std::pair{n, k}, std::move(fg));
      report.transposed_residuals.emplace(std::pair{n, k}, std::move(gf));
    }
  }
  return report;
}

/// Substitution s_n = alpha(p,n)/beta(p,n), m_n = alpha(n,p)/beta(n,p),
/// a_n = -alpha(n,n)/alpha(n,p), b_n = alpha(p,p)/alpha(n,p) for a fixed pivot p.
/// Evaluating a sequence at an index where its denominator vanishes raises PivotDegenerate.
template <FieldScalar S>
Theorem13Sequences<S> kernel_to_theorem13(const Kernel<S>& kernel, Index pivot) {
  auto checked = [](const S& num, const S& den, const char* what, Index n) {
    if (is_zero(den)) {
      throw Error(ErrorCode::PivotDegenerate, std::string(what) + " has a zero denominator at n=" + std::to_string(n));
    }
    return S(num / den);
  };
  Theorem13Sequences<S> seq;
  seq.s = [kernel, pivot, checked](Index n) { return checked(kernel.alpha(pivot, n), kernel.beta(pivot, n), "s_n", n); };
  seq.m = [kernel, pivot, checked](Index n) { return checked(kernel.alpha(n, pivot), kernel.beta(n, pivot), "m_n", n); };
  seq.a = [kernel, pivot, checked](Index n) {
    return checked(S(-kernel.alpha(n, n)), kernel.alpha(n, pivot), "a_n", n);
  };
  seq.b = [kernel, pivot, checked](Index n) { return checked(kernel.alpha(pivot, pivot), kernel.alpha(n, pivot), "b_n", n); };
  return seq;
}

/// Same substitution with the pivot defaulting to lo - 3, checked eagerly on the window
/// (one index beyond each end is touched by the entry formulas).
template <FieldScalar S>
Theorem13Sequences<S> kernel_to_theorem13(const Kernel<S>& kernel, Window window, std::optional<Index> pivot = {}) {
  const Index p = pivot.value_or(window.lo - 3);
  const Window touched = window.widened(1);
  if (touched.contains(p)) {
    throw Error(ErrorCode::PivotDegenerate, "pivot " + std::to_string(p) + " lies inside " + touched.to_string());
  }
  auto seq = kernel_to_theorem13(kernel, p);
  for (Index n = touched.lo; n <= touched.hi; ++n) {
    (void)seq.s(n);
    (void)seq.m(n);
    (void)seq.a(n);
    (void)seq.b(n);
    if (is_zero(seq.a(n)) || is_zero(seq.b(n))) {
      throw Error(ErrorCode::PivotDegenerate, "a_n or b_n vanishes at n=" + std::to_string(n));
    }
  }
  return seq;
}

}  // namespace abinv
