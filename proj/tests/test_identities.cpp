#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "abinv/divided_difference.hpp"
#include "abinv/families.hpp"
#include "abinv/identities.hpp"

using namespace abinv;

namespace {

Rational Q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// prod_j (x + a_j) multiplied out into coefficients.
Coefficients<Rational> expand(const std::vector<Rational>& shifts) {
  std::vector<Rational> c{Rational(1)};
  for (const Rational& a : shifts) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += a * c[i];
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return {c};
}

std::vector<Rational> distinct_nodes(std::mt19937& rng, std::size_t count) {
  std::vector<Rational> nodes;
  while (nodes.size() < count) {
    Rational x = oracle::random_rational(rng, 12, false);
    if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
  }
  return nodes;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("binomial kernel satisfies every identity") {
  const auto kr = binomial_kernel<Rational>();
  const Window w{-2, 4};
  CHECK(sweep_tsi(kr, w).pass());
  CHECK(sweep_cond3(kr, w).pass());
  CHECK(sweep_qsi(kr, {-2, 3}).pass());
  CHECK(sweep_antisymmetry(kr, w).pass());
  CHECK(sweep_tsi(kr, w).evaluated == 7 * 7 * 7 * 7);
}

TEST_CASE("cond3 is TSI with n = p") {
  const auto kr = schlosser_kernel({Q(1, 2), 2, 7, Q(1, 3)});
  Kernel<Rational> skew = kr;
  skew.alpha = [](Index i, Index k) { return Rational(i * i + 3 * k + 1); };  // breaks TSI on purpose
  for_each_tuple<3>({-2, 3}, [&](const auto& t) {
    CHECK(cond3_residual(skew, t[0], t[1], t[2]) == tsi_residual(skew, t[1], t[1], t[0], t[2]));
  });
}

TEST_CASE("degenerate index patterns") {
  const auto kr = gasper_kernel({2, 3, Q(1, 5), Q(1, 7)});
  for (Index n = -2; n <= 3; ++n) {
    for (Index k = -2; k <= 3; ++k) {
      CHECK(tsi_residual(kr, n, k, k, k) == 0);
      CHECK(cond3_residual(kr, k, n, k) == 0);
      CHECK(qsi_residual(kr, k, k, n, n + 1) == 0);
    }
  }
}

TEST_CASE("the three identities vanish together on the exact families") {
  const Window w{-2, 3};
  auto all_three = [&](const Kernel<Rational>& kr) {
    const bool tsi = sweep_tsi(kr, w).pass();
    const bool qsi = sweep_qsi(kr, w).pass();
    const bool c3 = sweep_cond3(kr, w).pass();
    CHECK(tsi);
    CHECK(qsi == tsi);
    CHECK(c3 == tsi);
  };
  all_three(gasper_kernel({2, 3, Q(1, 5), Q(1, 7)}));
  all_three(schlosser_kernel({Q(1, 2), 2, 7, Q(1, 3)}));
  all_three(corollary36_kernel<Rational>({[](Index i) { return Rational(i * i + 2); },
                                          [](Index i) { return Q(i + 7, 3); },
                                          [](Index i) { return Q(1, i * i + 1); }}));
}

TEST_CASE("a kernel violating TSI fails all three") {
  Kernel<Rational> kr = binomial_kernel<Rational>();
  kr.alpha = [](Index i, Index k) { return Rational(i * k * k + 2); };
  const Window w{-2, 3};
  CHECK_FALSE(sweep_tsi(kr, w).pass());
  CHECK_FALSE(sweep_qsi(kr, w).pass());
  CHECK_FALSE(sweep_cond3(kr, w).pass());
}

TEST_CASE("the generic x/y/t construction ignores y in beta") {
  // any y sequence keeps TSI; beta/(X_k X_n) telescopes
  IndexFn<Rational> x = [](Index i) { return Q(2 * i + 5, 3); };
  IndexFn<Rational> t = [](Index i) { return Rational(i + 4); };
  const auto k1 = corollary36_kernel<Rational>({x, [](Index i) { return Rational(i * i + 1); }, t});
  const auto k2 = corollary36_kernel<Rational>({x, [](Index i) { return Q(1, i * i + 3); }, t});
  auto X = [&](Index j) { return prod_range<Rational>(x, 1, j); };
  for (Index a = -2; a <= 3; ++a) {
    for (Index b = -2; b <= 3; ++b) {
      CHECK(k1.beta(a, b) == k2.beta(a, b));
      for (Index c = -2; c <= 3; ++c) {
        CHECK(k1.beta(a, b) / (X(a) * X(b)) + k1.beta(b, c) / (X(b) * X(c)) == k1.beta(a, c) / (X(a) * X(c)));
      }
    }
  }
  CHECK(sweep_tsi(k2, {-2, 3}).pass());
}

TEST_CASE("divided differences, fixed instances") {
  Coefficients<Rational> square{{Rational(0), Rational(0), Rational(1)}};
  CHECK(divided_difference(DividedDifferenceProblem<Rational>({Q(3, 4)}, square)) == Q(9, 16));
  CHECK(divided_difference(DividedDifferenceProblem<Rational>({Rational(0), Rational(1)}, square)) == 1);
  CHECK(divided_difference(DividedDifferenceProblem<Rational>({0, 1, 2, 3}, square)) == 0);
  CHECK(divided_difference_sum(DividedDifferenceProblem<Rational>({Q(1, 3), Q(-2, 5)}, RootShifts<Rational>{})) == 0);
  try {
    DividedDifferenceProblem<Rational>({1, 2, 1}, square);
    FAIL("duplicate nodes accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateNodes);
  }
}

TEST_CASE("divided differences, random product-form numerators") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> order(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = order(rng);
    auto nodes = distinct_nodes(rng, n + 1);
    std::vector<Rational> shifts;
    for (int j = 0; j < n - 1; ++j) shifts.push_back(oracle::random_rational(rng, 9, false));
    DividedDifferenceProblem<Rational> product(nodes, RootShifts<Rational>{shifts});
    DividedDifferenceProblem<Rational> expanded(nodes, expand(shifts));
    CHECK(divided_difference_sum(product) == 0);
    CHECK(divided_difference(product) == divided_difference_sum(product));
    CHECK(divided_difference(expanded) == 0);
    CHECK(degree(product.h) == n - 1);

    // one more factor: degree n, so the value is the leading coefficient 1
    shifts.push_back(oracle::random_rational(rng, 9, false));
    DividedDifferenceProblem<Rational> full(nodes, RootShifts<Rational>{shifts});
    CHECK(divided_difference(full) == 1);
    CHECK(divided_difference_sum(full) == 1);
  }
}

}  // TEST_SUITE
