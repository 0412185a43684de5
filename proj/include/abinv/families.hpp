#pragma once

// Concrete (alpha, beta) kernels. Gasper, Schlosser and the two generic corollary
// constructions live over exact rationals (or any field); the theta families
// (Warnaar, the elliptic S_{k,n} family, the partial-theta family) over complex doubles.
//
// Constructors that take a window validate it up front: a vanishing off-diagonal beta
// or diagonal alpha on the window is a DegenerateParams error.

#include <optional>

#include "abinv/kernels.hpp"
#include "abinv/products.hpp"
#include "abinv/theta.hpp"

namespace abinv {

template <FieldScalar S>
struct FactorSequences {
  IndexFn<S> x;
  IndexFn<S> y;
  IndexFn<S> t;
};

/// Throws DegenerateParams if alpha(n,n) or some beta(i,k), i != k, vanishes on the window.
/// Float kernels treat |v| <= near_zero as vanishing.
template <FieldScalar S>
void validate_family_window(const Kernel<S>& kernel, Window window, double near_zero = 1e-14) {
  auto vanishes = [&](const S& v) {
    if constexpr (ScalarTraits<S>::exact) {
      return is_zero(v);
    } else {
      return magnitude(v) <= near_zero;
    }
  };
  for (Index n = window.lo; n <= window.hi; ++n) {
    if (vanishes(kernel.alpha(n, n))) {
      throw Error(ErrorCode::DegenerateParams,
                  kernel.name + ": alpha" + detail::at(n, n) + " vanishes on window " + window.to_string());
    }
    for (Index k = window.lo; k <= window.hi; ++k) {
      if (k != n && vanishes(kernel.beta(n, k))) {
        throw Error(ErrorCode::DegenerateParams,
                    kernel.name + ": beta" + detail::at(n, k) + " vanishes on window " + window.to_string());
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Gasper: alpha(i,k) = (1 - a p^k q^i)(1 - b p^{-k} q^i),
//         beta(i,k)  = (p^i - p^k)(1 - b p^{-k-i} / a).

struct GasperParams {
  Rational a;
  Rational b;
  Rational p;
  Rational q;
};

Kernel<Rational> gasper_kernel(const GasperParams& params, std::optional<Window> window = {});
Rational gasper_closed_f(const GasperParams& params, Index n, Index k);
Rational gasper_closed_g(const GasperParams& params, Index n, Index k);

// ---------------------------------------------------------------------------
// Schlosser: alpha(i,k) = (q^k - q^i/b)(c - (a + b q^k)(a + q^i)),
//            beta(i,k)  = (q^k - q^i)(c - (a + b q^k)(a + b q^i)).

struct SchlosserParams {
  Rational a;
  Rational b;
  Rational c;
  Rational q;
};

Kernel<Rational> schlosser_kernel(const SchlosserParams& params, std::optional<Window> window = {});
Rational schlosser_lambda(const SchlosserParams& params, Index n, Index k);
Rational schlosser_closed_f(const SchlosserParams& params, Index n, Index k);
Rational schlosser_closed_g(const SchlosserParams& params, Index n, Index k);

// ---------------------------------------------------------------------------
// Warnaar: alpha(i,k) = b_k theta(x_i b_k; q) theta(x_i / b_k; q),
//          beta(i,k)  = b_k theta(b_i b_k; q) theta(b_i / b_k; q).

struct WarnaarParams {
  Complex q;
  IndexFn<Complex> b;
  IndexFn<Complex> x;
  TruncationPolicy policy;
};

Kernel<Complex> warnaar_kernel(const WarnaarParams& params, std::optional<Window> window = {});

// ---------------------------------------------------------------------------
// Elliptic family: alpha(i,k) = (x;q,p)_k / (y;q,p)_i, beta(i,k) = (x;q,p)_i (x;q,p)_k S(i,k),
// with S(k,n) = sum_{i=k+1}^{n} t_i / ((x;q,p)_{i-1} (x;q,p)_i) under the bilateral sum convention.

struct NewEllipticParams {
  Complex x;
  Complex y;
  Complex q;
  Complex p;
  IndexFn<Complex> t;
  TruncationPolicy policy;
};

/// Built from the generic x/y/t construction with x_i = theta(x q^{i-1}; p), y_i = theta(y q^{i-1}; p).
Kernel<Complex> new_elliptic_kernel(const NewEllipticParams& params, std::optional<Window> window = {});
Complex new_elliptic_s(const NewEllipticParams& params, Index k, Index n);
/// F(n,k) = prod_{i=k+1}^{n} 1 / ((x;q,p)_i (y;q,p)_{i-1} S(i,k)).
Complex new_elliptic_closed_f(const NewEllipticParams& params, Index n, Index k);
/// G(n,k) = prod_{i=k}^{n-1} 1 / ((x;q,p)_{i+1} (y;q,p)_i S(i,n)).
Complex new_elliptic_closed_g(const NewEllipticParams& params, Index n, Index k);

// ---------------------------------------------------------------------------
// Partial theta: alpha(i,k) = a_i + Theta(q; b_k), beta(i,k) = (b_i - b_k) L(b_i, b_k),
// L evaluated by its series route.

struct PartialThetaParams {
  Complex q;
  IndexFn<Complex> a;
  IndexFn<Complex> b;
  TruncationPolicy policy;
};

Kernel<Complex> partial_theta_kernel(const PartialThetaParams& params, std::optional<Window> window = {});

// ---------------------------------------------------------------------------
// Generic TSI solutions.

/// alpha(k,n) = prod_{i=1}^{n} x_i / prod_{i=1}^{k} y_i (bilateral products),
/// beta(k,n) = sum_{i=k+1}^{n} t_i prod_{j=i+1}^{n} x_j / prod_{j=k+1}^{i-1} x_j for k < n,
/// extended by beta(n,k) = -beta(k,n).
template <FieldScalar S>
Kernel<S> corollary36_kernel(FactorSequences<S> seq, std::string name = "corollary36") {
  Kernel<S> kernel;
  kernel.name = std::move(name);
  kernel.alpha = [seq](Index k, Index n) {
    return S(prod_range<S>(seq.x, 1, n) / prod_range<S>(seq.y, 1, k));
  };
  kernel.beta = [seq](Index k, Index n) {
    if (k == n) return zero<S>();
    const Index lo = std::min(k, n);
    const Index hi = std::max(k, n);
    S sum = zero<S>();
    for (Index i = lo + 1; i <= hi; ++i) {
      S num = one<S>();
      for (Index j = i + 1; j <= hi; ++j) num = num * seq.x(j);
      S den = one<S>();
      for (Index j = lo + 1; j <= i - 1; ++j) den = den * seq.x(j);
      if (is_zero(den)) throw Error(ErrorCode::ZeroDivisor, "x_j = 0 inside beta" + detail::at(k, n));
      sum = sum + seq.t(i) * num / den;
    }
    return k < n ? sum : S(-sum);
  };
  kernel.beta_antisymmetric = true;
  return kernel;
}

/// alpha(k,n) = x_k a_n + y_k b_n, beta(k,n) = a_n b_k - a_k b_n.
template <FieldScalar S>
Kernel<S> corollary37_kernel(IndexFn<S> a, IndexFn<S> b, IndexFn<S> x, IndexFn<S> y,
                             std::string name = "corollary37") {
  Kernel<S> kernel;
  kernel.name = std::move(name);
  kernel.alpha = [a, b, x, y](Index k, Index n) { return S(x(k) * a(n) + y(k) * b(n)); };
  kernel.beta = [a, b](Index k, Index n) { return S(a(n) * b(k) - a(k) * b(n)); };
  kernel.beta_antisymmetric = true;
  return kernel;
}

/// alpha == 1, beta(i,k) = i - k.
template <FieldScalar S>
Kernel<S> binomial_kernel() {
  Kernel<S> kernel;
  kernel.name = "binomial";
  kernel.alpha = [](Index, Index) { return one<S>(); };
  kernel.beta = [](Index i, Index k) { return ScalarTraits<S>::from_int(static_cast<long>(i) - k); };
  kernel.beta_antisymmetric = true;
  return kernel;
}

}  // namespace abinv
