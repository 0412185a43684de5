#pragma once

// Divided differences [x_0, ..., x_n] H of a polynomial H, by the recursive
// definition and by the explicit sum  sum_i H(x_i) / prod_{j != i} (x_i - x_j).

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "abinv/error.hpp"
#include "abinv/scalar.hpp"

namespace abinv {

/// H(x) = c_0 + c_1 x + ... + c_d x^d.
template <FieldScalar S>
struct Coefficients {
  std::vector<S> c;
};

/// H(x) = prod_j (x + a_j); an empty list is the constant 1.
template <FieldScalar S>
struct RootShifts {
  std::vector<S> a;
};

template <FieldScalar S>
using Polynomial = std::variant<Coefficients<S>, RootShifts<S>>;

template <FieldScalar S>
S evaluate(const Polynomial<S>& h, const S& x) {
  if (const auto* shifts = std::get_if<RootShifts<S>>(&h)) {
    S v = one<S>();
    for (const S& a : shifts->a) v = v * (x + a);
    return v;
  }
  const auto& c = std::get<Coefficients<S>>(h).c;
  S v = zero<S>();
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

/// Formal degree: number of shifts, or index of the last nonzero coefficient (-1 for H = 0).
template <FieldScalar S>
long degree(const Polynomial<S>& h) {
  if (const auto* shifts = std::get_if<RootShifts<S>>(&h)) return static_cast<long>(shifts->a.size());
  const auto& c = std::get<Coefficients<S>>(h).c;
  for (std::size_t i = c.size(); i > 0; --i) {
    if (!is_zero(c[i - 1])) return static_cast<long>(i - 1);
  }
  return -1;
}

template <FieldScalar S>
struct DividedDifferenceProblem {
  std::vector<S> nodes;
  Polynomial<S> h;

  DividedDifferenceProblem(std::vector<S> nodes_, Polynomial<S> h_)
      : nodes(std::move(nodes_)), h(std::move(h_)) {
    if (nodes.empty()) throw Error(ErrorCode::DomainError, "divided difference needs at least one node");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (is_zero(S(nodes[i] - nodes[j]))) {
          throw Error(ErrorCode::DuplicateNodes,
                      "nodes " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
        }
      }
    }
  }

  [[nodiscard]] long order() const noexcept { return static_cast<long>(nodes.size()) - 1; }
};

/// [x_0..x_n]H = ([x_0..x_{n-1}]H - [x_1..x_n]H) / (x_0 - x_n), with [x_i]H = H(x_i).
template <FieldScalar S>
S divided_difference(const DividedDifferenceProblem<S>& problem) {
  const auto& x = problem.nodes;
  std::vector<S> level;
  level.reserve(x.size());
  for (const S& xi : x) level.push_back(evaluate(problem.h, xi));
  for (std::size_t span = 1; span < x.size(); ++span) {
    for (std::size_t i = 0; i + span < x.size(); ++i) {
      level[i] = (level[i] - level[i + 1]) / (x[i] - x[i + span]);
    }
    level.pop_back();
  }
  return level.front();
}

/// sum_{0<=i<=n} H(x_i) / prod_{j != i} (x_i - x_j).
template <FieldScalar S>
S divided_difference_sum(const DividedDifferenceProblem<S>& problem) {
  const auto& x = problem.nodes;
  S total = zero<S>();
  for (std::size_t i = 0; i < x.size(); ++i) {
    S den = one<S>();
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) den = den * (x[i] - x[j]);
    }
    total = total + evaluate(problem.h, x[i]) / den;
  }
  return total;
}

}  // namespace abinv
