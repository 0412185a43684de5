#include "abinv/families.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace abinv {

namespace {

long binom2(long m) { return m * (m - 1) / 2; }

Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Complex cpow(Complex base, Index e) { return ipow<Complex>(base, e); }

}  // namespace

// --- Gasper -----------------------------------------------------------------

Kernel<Rational> gasper_kernel(const GasperParams& params, std::optional<Window> window) {
  if (sgn(params.a) == 0) throw Error(ErrorCode::DegenerateParams, "gasper: a must be nonzero");
  if (sgn(params.p) == 0 || params.p == 1) throw Error(ErrorCode::DegenerateParams, "gasper: p must avoid 0 and 1");
  if (sgn(params.q) == 0) throw Error(ErrorCode::DegenerateParams, "gasper: q must be nonzero");
  Kernel<Rational> kernel;
  kernel.name = "gasper";
  kernel.alpha = [params](Index i, Index k) {
    const Rational qi = ipow(params.q, i);
    return Rational((1 - params.a * ipow(params.p, k) * qi) * (1 - params.b * ipow(params.p, -k) * qi));
  };
  kernel.beta = [params](Index i, Index k) {
    return Rational((ipow(params.p, i) - ipow(params.p, k)) *
                    (1 - params.b * ipow(params.p, -static_cast<long>(k) - i) / params.a));
  };
  if (window) validate_family_window(kernel, *window);
  return kernel;
}

Rational gasper_closed_f(const GasperParams& g, Index n, Index k) {
  const Index len = n - k;
  const Rational pk = ipow(g.p, k);
  const Rational qk = ipow(g.q, k);
  const Rational num = q_pochhammer(Rational(g.a * pk * qk), g.q, len) *
                       q_pochhammer(Rational(g.b * qk / pk), g.q, len);
  const Rational den = q_pochhammer(g.p, g.p, len) *
                       q_pochhammer(Rational(g.b * ipow(g.p, -static_cast<long>(n) - k) / g.a), g.p, len);
  return sign_pow(len) * ipow(g.p, -static_cast<long>(len) * k) * num / den;
}

Rational gasper_closed_g(const GasperParams& g, Index n, Index k) {
  const Index len = n - k;
  const Rational pk = ipow(g.p, k);
  const Rational pn = ipow(g.p, n);
  const Rational qk = ipow(g.q, k);
  const Rational num = (1 - g.a * pk * qk) * (1 - g.b * qk / pk) * q_pochhammer(Rational(g.a * pn * qk), g.q, len) *
                       q_pochhammer(Rational(g.b * qk / pn), g.q, len);
  const Rational den = (1 - g.a * pn * qk) * (1 - g.b * qk / pn) * q_pochhammer(g.p, g.p, len) *
                       q_pochhammer(Rational(g.b * ipow(g.p, 1 - 2 * static_cast<long>(n)) / g.a), g.p, len);
  return ipow(g.p, -binom2(n) + binom2(k)) * num / den;
}

// --- Schlosser --------------------------------------------------------------

Kernel<Rational> schlosser_kernel(const SchlosserParams& params, std::optional<Window> window) {
  if (sgn(params.b) == 0) throw Error(ErrorCode::DegenerateParams, "schlosser: b must be nonzero");
  if (sgn(params.q) == 0 || params.q == 1) throw Error(ErrorCode::DegenerateParams, "schlosser: q must avoid 0 and 1");
  Kernel<Rational> kernel;
  kernel.name = "schlosser";
  kernel.alpha = [s = params](Index i, Index k) {
    const Rational qi = ipow(s.q, i);
    const Rational qk = ipow(s.q, k);
    return Rational((qk - qi / s.b) * (s.c - (s.a + s.b * qk) * (s.a + qi)));
  };
  kernel.beta = [s = params](Index i, Index k) {
    const Rational qi = ipow(s.q, i);
    const Rational qk = ipow(s.q, k);
    return Rational((qk - qi) * (s.c - (s.a + s.b * qk) * (s.a + s.b * qi)));
  };
  if (window) validate_family_window(kernel, *window);
  return kernel;
}

Rational schlosser_lambda(const SchlosserParams& s, Index n, Index k) {
  const Index len = n - k;
  const Rational qk = ipow(s.q, k);
  const Rational qn = ipow(s.q, n);
  return sign_pow(len) * ipow(s.q, binom2(len)) * (s.c - (s.a + s.b * qk) * (s.a + qk)) /
         (s.c - (s.a + s.b * qn) * (s.a + qn));
}

Rational schlosser_closed_f(const SchlosserParams& s, Index n, Index k) {
  const Index len = n - k;
  const Rational qk = ipow(s.q, k);
  const Rational u = s.a + s.b * qk;
  const Rational denom = s.c - s.a * u;
  const Rational num = q_pochhammer(Rational(1 / s.b), s.q, len) * q_pochhammer(Rational(u * qk / denom), s.q, len);
  const Rational den =
      q_pochhammer(s.q, s.q, len) * q_pochhammer(Rational(u * s.b * qk * s.q / denom), s.q, len);
  return num / den;
}

Rational schlosser_closed_g(const SchlosserParams& s, Index n, Index k) {
  const Index len = n - k;
  const Rational qk = ipow(s.q, k);
  const Rational v = s.a + s.b * ipow(s.q, n);
  const Rational denom = s.c - s.a * v;
  const Rational num = q_pochhammer(Rational(ipow(s.q, k - n + 1) / s.b), s.q, len) *
                       q_pochhammer(Rational(v * qk * s.q / denom), s.q, len);
  const Rational den = q_pochhammer(s.q, s.q, len) * q_pochhammer(Rational(v * s.b * qk / denom), s.q, len);
  return schlosser_lambda(s, n, k) * num / den;
}

// --- Warnaar ----------------------------------------------------------------

Kernel<Complex> warnaar_kernel(const WarnaarParams& params, std::optional<Window> window) {
  params.policy.validate();
  if (!(std::abs(params.q) < 1.0) || params.q == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::DomainError, "warnaar: nome must satisfy 0 < |q| < 1");
  }
  Kernel<Complex> kernel;
  kernel.name = "warnaar";
  kernel.alpha = [w = params](Index i, Index k) {
    const Complex bk = w.b(k);
    const Complex xi = w.x(i);
    return bk * theta(xi * bk, w.q, w.policy) * theta(xi / bk, w.q, w.policy);
  };
  kernel.beta = [w = params](Index i, Index k) {
    const Complex bk = w.b(k);
    const Complex bi = w.b(i);
    return bk * theta(bi * bk, w.q, w.policy) * theta(bi / bk, w.q, w.policy);
  };
  if (window) {
    for (Index i = window->lo; i <= window->hi; ++i) {
      if (params.b(i) == Complex(0.0, 0.0)) {
        throw Error(ErrorCode::DegenerateParams, "warnaar: b_" + std::to_string(i) + " = 0");
      }
    }
    validate_family_window(kernel, *window);
  }
  return kernel;
}

// --- Elliptic S_{k,n} family --------------------------------------------------

namespace {

Complex elliptic_factor(const NewEllipticParams& e, Complex base, Index i) {
  return theta(base * cpow(e.q, i - 1), e.p, e.policy);
}

}  // namespace

Kernel<Complex> new_elliptic_kernel(const NewEllipticParams& params, std::optional<Window> window) {
  params.policy.validate();
  if (!(std::abs(params.p) < 1.0) || params.p == Complex(0.0, 0.0)) {
    throw Error(ErrorCode::DomainError, "elliptic family: nome p must satisfy 0 < |p| < 1");
  }
  if (params.q == Complex(0.0, 0.0)) throw Error(ErrorCode::DegenerateParams, "elliptic family: q must be nonzero");
  FactorSequences<Complex> seq;
  seq.x = [e = params](Index i) { return elliptic_factor(e, e.x, i); };
  seq.y = [e = params](Index i) { return elliptic_factor(e, e.y, i); };
  seq.t = params.t;
  Kernel<Complex> kernel = corollary36_kernel(std::move(seq), "new-elliptic");
  if (window) validate_family_window(kernel, *window);
  return kernel;
}

Complex new_elliptic_s(const NewEllipticParams& e, Index k, Index n) {
  return sum_range<Complex>(
      [&](Index i) {
        return e.t(i) / (elliptic_pochhammer(e.x, e.q, e.p, i - 1, e.policy) *
                         elliptic_pochhammer(e.x, e.q, e.p, i, e.policy));
      },
      k + 1, n);
}

Complex new_elliptic_closed_f(const NewEllipticParams& e, Index n, Index k) {
  Complex result(1.0, 0.0);
  for (Index i = k + 1; i <= n; ++i) {
    result /= elliptic_pochhammer(e.x, e.q, e.p, i, e.policy) * elliptic_pochhammer(e.y, e.q, e.p, i - 1, e.policy) *
              new_elliptic_s(e, i, k);
  }
  return result;
}

Complex new_elliptic_closed_g(const NewEllipticParams& e, Index n, Index k) {
  Complex result(1.0, 0.0);
  for (Index i = k; i <= n - 1; ++i) {
    result /= elliptic_pochhammer(e.x, e.q, e.p, i + 1, e.policy) * elliptic_pochhammer(e.y, e.q, e.p, i, e.policy) *
              new_elliptic_s(e, i, n);
  }
  return result;
}

// --- Partial theta ----------------------------------------------------------

Kernel<Complex> partial_theta_kernel(const PartialThetaParams& params, std::optional<Window> window) {
  params.policy.validate();
  if (!(std::abs(params.q) < 1.0)) throw Error(ErrorCode::DomainError, "partial theta: |q| must be < 1");
  Kernel<Complex> kernel;
  kernel.name = "partial-theta";
  kernel.alpha = [pt = params](Index i, Index k) { return pt.a(i) + partial_theta(pt.q, pt.b(k), pt.policy); };
  kernel.beta = [pt = params](Index i, Index k) {
    const Complex bi = pt.b(i);
    const Complex bk = pt.b(k);
    return (bi - bk) * l_kernel_series(bi, bk, pt.q, pt.policy);
  };
  if (window) {
    for (Index i = window->lo; i <= window->hi; ++i) {
      for (Index k = window->lo; k < i; ++k) {
        if (params.b(i) == params.b(k)) {
          throw Error(ErrorCode::DegenerateParams,
                      "partial theta: b_" + std::to_string(k) + " = b_" + std::to_string(i));
        }
      }
    }
    validate_family_window(kernel, *window);
  }
  return kernel;
}

}  // namespace abinv
