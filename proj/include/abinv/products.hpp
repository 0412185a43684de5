#pragma once

// Bilateral products and sums over integer ranges, and the q-shifted factorial.

#include <concepts>
#include <string>

#include "abinv/error.hpp"
#include "abinv/scalar.hpp"

namespace abinv {

/// prod_{i=k}^{n} f(i) under the bilateral convention:
///   ordinary product for n >= k, 1 for n = k-1, and 1/(f(n+1)...f(k-1)) for n <= k-2.
template <FieldScalar S, class Fn>
  requires std::invocable<Fn&, Index>
S prod_range(Fn&& f, Index k, Index n) {
  S result = one<S>();
  if (n >= k) {
    for (Index i = k; i <= n; ++i) result = result * S(f(i));
    return result;
  }
  for (Index i = n + 1; i <= k - 1; ++i) {
    S v = S(f(i));
    if (is_zero(v)) {
      throw Error(ErrorCode::ZeroDivisor,
                  "reciprocal product hits a zero factor at i=" + std::to_string(i));
    }
    result = result * v;
  }
  return one<S>() / result;
}

/// sum_{i=k}^{n} f(i) under the matching bilateral convention:
///   ordinary sum for n >= k, 0 for n = k-1, and -(f(n+1)+...+f(k-1)) for n <= k-2.
template <FieldScalar S, class Fn>
  requires std::invocable<Fn&, Index>
S sum_range(Fn&& f, Index k, Index n) {
  S result = zero<S>();
  if (n >= k) {
    for (Index i = k; i <= n; ++i) result = result + S(f(i));
    return result;
  }
  for (Index i = n + 1; i <= k - 1; ++i) result = result + S(f(i));
  return -result;
}

/// (a;q)_n for every integer n; negative n uses (a;q)_{-m} = 1 / prod_{j=1}^{m} (1 - a q^{-j}).
template <FieldScalar S>
S q_pochhammer(const S& a, const S& q, Index n) {
  if (n >= 0) {
    S result = one<S>();
    S qi = one<S>();
    for (Index i = 0; i < n; ++i) {
      result = result * (one<S>() - a * qi);
      qi = qi * q;
    }
    return result;
  }
  if (is_zero(q)) throw Error(ErrorCode::ZeroDivisor, "(a;q)_n with n < 0 needs q != 0");
  const S qinv = one<S>() / q;
  S denom = one<S>();
  S qj = qinv;
  for (Index j = 1; j <= -n; ++j) {
    S factor = one<S>() - a * qj;
    if (is_zero(factor)) {
      throw Error(ErrorCode::ZeroDivisor,
                  "(a;q)_" + std::to_string(n) + " has a vanishing factor at j=" + std::to_string(j));
    }
    denom = denom * factor;
    qj = qj * qinv;
  }
  return one<S>() / denom;
}

}  // namespace abinv
