#pragma once

// Truncated theta-type special functions over complex doubles:
//   modified Jacobi theta  theta(x;q) = (x, q/x; q)_inf
//   partial theta          Theta(q;x) = sum_{n>=0} (-1)^n q^{n(n-1)/2} x^n
//   elliptic factorial     (x;q,p)_n  = prod_{k=0}^{n-1} theta(x q^k; p)
// plus the two evaluation routes of the partial-theta kernel L(x,y).
//
// None of these exist in the exact-rational domain (they are genuinely infinite),
// except Theta(0;x) = 1 - x whose series terminates.

#include <initializer_list>

#include "abinv/scalar.hpp"

namespace abinv {

struct TruncationPolicy {
  /// Stop once the neglected part is bounded by this magnitude.
  double tail_bound = 1e-17;
  int max_terms = 256;

  /// Throws DomainError unless 0 <= tail_bound < 1 and max_terms >= 8.
  void validate() const;
};

/// (a;q)_inf, truncated so the neglected factors change the value by at most tail_bound.
Complex q_pochhammer_infinite(Complex a, Complex q, const TruncationPolicy& policy = {});

Complex theta(Complex x, Complex q, const TruncationPolicy& policy = {});

/// theta(a_1,...,a_m; q) = theta(a_1;q) ... theta(a_m;q).
Complex theta_product(std::initializer_list<Complex> args, Complex q,
                      const TruncationPolicy& policy = {});

Complex partial_theta(Complex q, Complex x, const TruncationPolicy& policy = {});

/// The only exact case: q = 0, where just the n = 0, 1 terms survive. Any other q is a DomainError.
Rational partial_theta(const Rational& q, const Rational& x);

/// (x;q,p)_n for any integer n; negative n follows the bilateral product convention.
Complex elliptic_pochhammer(Complex x, Complex q, Complex p, Index n,
                            const TruncationPolicy& policy = {});

/// L(x,y) = -(q, xq, yq; q)_inf * sum_{n>=0} (xy;q)_{2n} q^n / (q, xq, yq, xy; q)_n.
Complex l_kernel_series(Complex x, Complex y, Complex q, const TruncationPolicy& policy = {});

/// L(x,y) = (Theta(q;x) - Theta(q;y)) / (x - y); requires x != y.
Complex l_kernel_quotient(Complex x, Complex y, Complex q, const TruncationPolicy& policy = {});

/// theta(xy,x/y,uv,u/v;q) - theta(xv,x/v,yu,u/y;q) - (u/y) theta(xu,x/u,yv,y/v;q).
Complex weierstrass_addition_residual(Complex x, Complex y, Complex u, Complex v, Complex q,
                                      const TruncationPolicy& policy = {});

}  // namespace abinv
