#include "abinv/theta.hpp"

#include <cmath>
#include <string>

#include "abinv/error.hpp"
#include "abinv/products.hpp"

namespace abinv {

namespace {

void require_nome(Complex q, bool allow_zero) {
  const double m = std::abs(q);
  if (!(m < 1.0)) throw Error(ErrorCode::DomainError, "nome must satisfy |q| < 1, got |q|=" + format_double(m));
  if (!allow_zero && m == 0.0) throw Error(ErrorCode::DomainError, "nome must be nonzero");
}

[[noreturn]] void non_convergent(const char* what, const TruncationPolicy& policy) {
  throw Error(ErrorCode::NonConvergent, std::string(what) + " did not reach tail bound " +
                                            format_double(policy.tail_bound) + " within " +
                                            std::to_string(policy.max_terms) + " terms");
}

// prod (1 - a_j q^i) over the given bases, stopped once 2|P| sum_j |a_j q^i| / (1-|q|) <= tail.
// exp(s) - 1 <= 2s for the small s reached here bounds the relative effect of the neglected factors.
template <std::size_t N>
Complex truncated_product(const Complex (&bases)[N], Complex q, const TruncationPolicy& policy,
                          const char* what) {
  const double shrink = 1.0 - std::abs(q);
  Complex product(1.0, 0.0);
  Complex qi(1.0, 0.0);
  for (int i = 0; i < policy.max_terms; ++i) {
    double deviation = 0.0;
    for (const Complex& a : bases) deviation += std::abs(a * qi);
    if (2.0 * std::abs(product) * deviation / shrink <= policy.tail_bound) return product;
    for (const Complex& a : bases) product *= (1.0 - a * qi);
    qi *= q;
  }
  non_convergent(what, policy);
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(tail_bound >= 0.0 && tail_bound < 1.0)) {
    throw Error(ErrorCode::DomainError, "tail_bound must lie in [0,1), got " + format_double(tail_bound));
  }
  if (max_terms < 8) {
    throw Error(ErrorCode::DomainError, "max_terms must be at least 8, got " + std::to_string(max_terms));
  }
}

Complex q_pochhammer_infinite(Complex a, Complex q, const TruncationPolicy& policy) {
  policy.validate();
  require_nome(q, true);
  const Complex bases[] = {a};
  return truncated_product(bases, q, policy, "(a;q)_inf");
}

Complex theta(Complex x, Complex q, const TruncationPolicy& policy) {
  policy.validate();
  require_nome(q, false);
  if (x == Complex(0.0, 0.0)) throw Error(ErrorCode::DomainError, "theta(x;q) needs x != 0");
  const Complex bases[] = {x, q / x};
  return truncated_product(bases, q, policy, "theta(x;q)");
}

Complex theta_product(std::initializer_list<Complex> args, Complex q, const TruncationPolicy& policy) {
  Complex result(1.0, 0.0);
  for (const Complex& a : args) result *= theta(a, q, policy);
  return result;
}

Complex partial_theta(Complex q, Complex x, const TruncationPolicy& policy) {
  policy.validate();
  require_nome(q, true);
  const double qm = std::abs(q);
  const double xm = std::abs(x);
  Complex sum(0.0, 0.0);
  Complex term(1.0, 0.0);  // (-1)^n q^{n(n-1)/2} x^n
  Complex qn(1.0, 0.0);    // q^n
  double ratio = xm;       // |x q^n|, bound on |term_{m+1}/term_m| for all m >= n
  for (int n = 0; n < policy.max_terms; ++n) {
    // Once ratio <= 1/2 the remaining tail is at most 2|term|.
    if (ratio <= 0.5 && 2.0 * std::abs(term) <= policy.tail_bound) return sum;
    sum += term;
    term *= -x * qn;
    qn *= q;
    ratio *= qm;
    if (term == Complex(0.0, 0.0)) return sum;
  }
  non_convergent("Theta(q;x)", policy);
}

Rational partial_theta(const Rational& q, const Rational& x) {
  if (sgn(q) != 0) {
    throw Error(ErrorCode::DomainError,
                "Theta(q;x) has no exact-rational evaluation unless q = 0 (the series is infinite)");
  }
  return Rational(1) - x;
}

Complex elliptic_pochhammer(Complex x, Complex q, Complex p, Index n, const TruncationPolicy& policy) {
  return prod_range<Complex>(
      [&](Index k) { return theta(x * std::pow(q, static_cast<double>(k)), p, policy); }, 0, n - 1);
}

Complex l_kernel_series(Complex x, Complex y, Complex q, const TruncationPolicy& policy) {
  policy.validate();
  require_nome(q, true);
  const Complex xy = x * y;
  const Complex inf_bases[] = {q, x * q, y * q};
  const Complex prefactor = -truncated_product(inf_bases, q, policy, "(q,xq,yq;q)_inf");

  const double qm = std::abs(q);
  Complex sum(0.0, 0.0);
  Complex term(1.0, 0.0);
  Complex qn(1.0, 0.0);
  for (int n = 0; n < policy.max_terms; ++n) {
    const Complex q2n = qn * qn;
    const Complex num = q * (1.0 - xy * q2n) * (1.0 - xy * q2n * q);
    const Complex den = (1.0 - qn * q) * (1.0 - x * qn * q) * (1.0 - y * qn * q) * (1.0 - xy * qn);
    if (den == Complex(0.0, 0.0)) {
      throw Error(ErrorCode::DomainError, "L(x,y) series hits a vanishing denominator at n=" + std::to_string(n));
    }
    const double ratio = std::abs(num / den);
    // With the term ratio below (1+|q|)/2 < 1 the tail is geometric.
    const double decay = 0.5 * (1.0 + qm);
    if (ratio <= decay && std::abs(prefactor * term) / (1.0 - decay) <= policy.tail_bound) {
      return prefactor * sum;
    }
    sum += term;
    term *= num / den;
    qn *= q;
  }
  non_convergent("L(x,y) series", policy);
}

Complex l_kernel_quotient(Complex x, Complex y, Complex q, const TruncationPolicy& policy) {
  if (x == y) throw Error(ErrorCode::DomainError, "quotient route for L(x,y) needs x != y");
  return (partial_theta(q, x, policy) - partial_theta(q, y, policy)) / (x - y);
}

Complex weierstrass_addition_residual(Complex x, Complex y, Complex u, Complex v, Complex q,
                                      const TruncationPolicy& policy) {
  return theta_product({x * y, x / y, u * v, u / v}, q, policy) -
         theta_product({x * v, x / v, y * u, u / y}, q, policy) -
         (u / y) * theta_product({x * u, x / u, y * v, y / v}, q, policy);
}

}  // namespace abinv
