#pragma once

// Residuals of the triple sum identity (TSI), its three-index specialisation,
// the quintuple sum identity (QSI), and exhaustive sweeps of each over a window.

#include <array>

#include "abinv/kernels.hpp"

namespace abinv {

/// alpha(n,p) beta(q,k) + alpha(n,q) beta(k,p) + alpha(n,k) beta(p,q).
template <FieldScalar S>
S tsi_residual(const Kernel<S>& kr, Index n, Index k, Index p, Index q) {
  return kr.alpha(n, p) * kr.beta(q, k) + kr.alpha(n, q) * kr.beta(k, p) + kr.alpha(n, k) * kr.beta(p, q);
}

/// alpha(p,x) beta(y,p) + alpha(p,y) beta(p,x) + alpha(p,p) beta(x,y); equals tsi_residual(p, p, x, y).
template <FieldScalar S>
S cond3_residual(const Kernel<S>& kr, Index x, Index p, Index y) {
  return kr.alpha(p, x) * kr.beta(y, p) + kr.alpha(p, y) * kr.beta(p, x) + kr.alpha(p, p) * kr.beta(x, y);
}

/// The five-term quintuple sum: two positive and three negative products.
template <FieldScalar S>
S qsi_residual(const Kernel<S>& kr, Index x, Index y, Index p, Index q) {
  const auto& a = kr.alpha;
  const auto& b = kr.beta;
  return a(x, p) * a(p, y) * b(x, p) * b(q, y)      //
         + a(x, p) * a(p, x) * b(q, y) * b(p, y)    //
         - a(x, y) * a(p, y) * b(x, p) * b(q, p)    //
         - a(x, y) * a(p, q) * b(x, p) * b(p, y)    //
         - a(x, x) * a(p, p) * b(q, y) * b(p, y);
}

/// beta(i,k) + beta(k,i).
template <FieldScalar S>
S antisymmetry_residual(const Kernel<S>& kr, Index i, Index k) {
  return kr.beta(i, k) + kr.beta(k, i);
}

/// Every index tuple in window^Arity, lexicographic order.
template <std::size_t Arity, class Visit>
void for_each_tuple(Window window, Visit&& visit) {
  if (window.empty()) return;
  std::array<Index, Arity> idx;
  idx.fill(window.lo);
  while (true) {
    visit(idx);
    std::size_t pos = Arity;
    while (pos > 0) {
      --pos;
      if (idx[pos] < window.hi) {
        ++idx[pos];
        break;
      }
      idx[pos] = window.lo;
      if (pos == 0) return;
    }
  }
}

template <FieldScalar S>
ResidualSummary<S> sweep_tsi(const Kernel<S>& kr, Window window, double tolerance = 0.0) {
  auto summary = make_summary<S>(tolerance);
  for_each_tuple<4>(window, [&](const auto& t) { summary.add(tsi_residual(kr, t[0], t[1], t[2], t[3])); });
  return summary;
}

template <FieldScalar S>
ResidualSummary<S> sweep_cond3(const Kernel<S>& kr, Window window, double tolerance = 0.0) {
  auto summary = make_summary<S>(tolerance);
  for_each_tuple<3>(window, [&](const auto& t) { summary.add(cond3_residual(kr, t[0], t[1], t[2])); });
  return summary;
}

template <FieldScalar S>
ResidualSummary<S> sweep_qsi(const Kernel<S>& kr, Window window, double tolerance = 0.0) {
  auto summary = make_summary<S>(tolerance);
  for_each_tuple<4>(window, [&](const auto& t) { summary.add(qsi_residual(kr, t[0], t[1], t[2], t[3])); });
  return summary;
}

template <FieldScalar S>
ResidualSummary<S> sweep_antisymmetry(const Kernel<S>& kr, Window window, double tolerance = 0.0) {
  auto summary = make_summary<S>(tolerance);
  for_each_tuple<2>(window, [&](const auto& t) { summary.add(antisymmetry_residual(kr, t[0], t[1])); });
  return summary;
}

}  // namespace abinv
