#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "abinv/families.hpp"
#include "abinv/kernels.hpp"

using namespace abinv;

namespace {

Rational Q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ConfigError;
}

// G must be the matrix inverse of F, computed independently by forward substitution.
void check_against_inverse(const TriangularPair<Rational>& pair) {
  const Window w = pair.window();
  const auto n = static_cast<std::size_t>(w.size());
  std::vector<std::vector<Rational>> f(n, std::vector<Rational>(n, Rational(0)));
  for (Index i = w.lo; i <= w.hi; ++i) {
    for (Index k = w.lo; k <= i; ++k) f[i - w.lo][k - w.lo] = pair.f(i, k);
  }
  const auto inv = oracle::lower_inverse(f);
  for (Index i = w.lo; i <= w.hi; ++i) {
    for (Index k = w.lo; k <= i; ++k) CHECK(inv[i - w.lo][k - w.lo] == pair.g(i, k));
  }
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("binomial entries") {
  const auto kr = binomial_kernel<Rational>();
  CHECK(f_entry(kr, 4, 4) == 1);
  CHECK(g_entry(kr, 4, 4) == 1);
  CHECK(f_entry(kr, 3, 1) == Q(1, 2));
  CHECK(g_entry(kr, 3, 1) == Q(1, 2));
  for (Index k = -3; k <= 3; ++k) CHECK(g_entry(kr, k + 1, k) == -1);
}

TEST_CASE("entry errors") {
  Kernel<Rational> kr = binomial_kernel<Rational>();
  kr.beta = [](Index i, Index k) { return Rational(i == 2 && k == 0 ? 0 : i - k); };
  CHECK(code_of([&] { f_entry(kr, 3, 0); }) == ErrorCode::ZeroDivisor);
  CHECK(code_of([&] { TriangularPair<Rational>::from_kernel(kr, {0, 3}); }) == ErrorCode::ZeroBeta);
  Kernel<Rational> diag = binomial_kernel<Rational>();
  diag.alpha = [](Index i, Index k) { return Rational(i == 2 && k == 2 ? 0 : 1); };
  CHECK(code_of([&] { g_entry(diag, 2, 0); }) == ErrorCode::ZeroDiagonal);
  CHECK(code_of([&] { TriangularPair<Rational>::from_kernel(diag, {0, 3}); }) == ErrorCode::ZeroDiagonal);
}

TEST_CASE("binomial inversion on [0,8]") {
  auto pair = TriangularPair<Rational>::from_kernel(binomial_kernel<Rational>(), {0, 8});
  auto report = verify_inversion(pair);
  CHECK(report.pass());
  CHECK(report.exact());
  CHECK(report.worst() == 0.0);
  CHECK(report.residuals.size() == 45);
  check_against_inverse(pair);
  CHECK(code_of([&] { (void)pair.f(2, 3); }) == ErrorCode::IndexOutOfTable);
}

TEST_CASE("identity pair") {
  TriangularPair<Rational> id("identity", {-2, 3}, [](Index n, Index k) { return Rational(n == k ? 1 : 0); },
                              [](Index n, Index k) { return Rational(n == k ? 1 : 0); });
  CHECK(verify_inversion(id).pass());
}

TEST_CASE("a non-inverse pair fails") {
  TriangularPair<Rational> bad("bad", {0, 3}, [](Index, Index) { return Rational(1); },
                               [](Index, Index) { return Rational(1); });
  const auto report = verify_inversion(bad);
  CHECK_FALSE(report.pass());
  CHECK(report.forward.failures > 0);
}

TEST_CASE("float verification needs a tolerance") {
  TriangularPair<Complex> id("identity", {0, 2}, [](Index n, Index k) { return Complex(n == k ? 1.0 : 0.0); },
                             [](Index n, Index k) { return Complex(n == k ? 1.0 : 0.0); });
  CHECK(code_of([&] { verify_inversion(id); }) == ErrorCode::DomainError);
  CHECK(verify_inversion(id, 1e-12).pass());
}

TEST_CASE("general inversion, hand example") {
  Theorem13Sequences<Rational> seq;
  seq.s = [](Index i) { return Rational(i); };
  seq.a = [](Index) { return Rational(1); };
  seq.b = [](Index) { return Rational(-1); };
  seq.m = [](Index) { return Rational(1); };
  for (Index k = -2; k <= 2; ++k) {
    CHECK(theorem13_entries(seq, k, k) == std::pair{Rational(1), Rational(1)});
    CHECK(theorem13_entries(seq, k + 1, k).second == -1);
    for (Index n = k; n <= k + 5; ++n) CHECK(theorem13_entries(seq, n, k).first == 1);
    for (Index n = k + 2; n <= k + 5; ++n) CHECK(theorem13_entries(seq, n, k).second == 0);
  }
  CHECK(verify_inversion(TriangularPair<Rational>::from_theorem13(seq, {0, 5})).pass());
}

TEST_CASE("general inversion, random sequences") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> mag(1, 5), sign(0, 1), step(1, 4);
  auto pm = [&] { return Rational(sign(rng) ? mag(rng) : -mag(rng)); };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> a, b, m, s;
    int acc = -10;
    for (int i = 0; i < 6; ++i) {
      a.push_back(pm());
      b.push_back(pm());
      m.push_back(pm());
      acc += step(rng);
      s.push_back(Rational(acc));
    }
    Theorem13Sequences<Rational> seq;
    seq.a = [a](Index i) { return a.at(i); };
    seq.b = [b](Index i) { return b.at(i); };
    seq.m = [m](Index i) { return m.at(i); };
    seq.s = [s](Index i) { return s.at(i); };
    auto pair = TriangularPair<Rational>::from_theorem13(seq, {0, 5});
    CHECK(verify_inversion(pair).pass());
    check_against_inverse(pair);
  }
}

TEST_CASE("general inversion rejects repeated s") {
  Theorem13Sequences<Rational> seq;
  seq.s = [](Index i) { return Rational(i == 3 ? 1 : i); };
  seq.a = seq.b = seq.m = [](Index) { return Rational(1); };
  CHECK(code_of([&] { TriangularPair<Rational>::from_theorem13(seq, {0, 4}); }) == ErrorCode::ZeroDivisor);
}

TEST_CASE("kernel to general inversion, binomial") {
  const auto kr = binomial_kernel<Rational>();
  for (Index pivot : {-5, -3}) {
    const Window w{0, 4};
    auto seq = kernel_to_theorem13(kr, w, pivot);
    for (Index n = w.lo; n <= w.hi; ++n) {
      for (Index k = w.lo; k <= n; ++k) {
        const auto [f, g] = theorem13_entries(seq, n, k);
        CHECK(f == f_entry(kr, n, k));
        CHECK(g == g_entry(kr, n, k));
      }
    }
  }
}

TEST_CASE("kernel to general inversion, Gasper, default pivot") {
  const auto kr = gasper_kernel({2, 3, Q(1, 5), Q(1, 7)});
  const Window w{0, 4};
  auto seq = kernel_to_theorem13(kr, w);  // pivot lo-3
  for (Index n = w.lo; n <= w.hi; ++n) {
    for (Index k = w.lo; k <= n; ++k) {
      const auto [f, g] = theorem13_entries(seq, n, k);
      CHECK(f == f_entry(kr, n, k));
      CHECK(g == g_entry(kr, n, k));
    }
  }
}

TEST_CASE("pivot inside the window is degenerate") {
  CHECK(code_of([] { kernel_to_theorem13(binomial_kernel<Rational>(), Window{0, 4}, Index{2}); }) ==
        ErrorCode::PivotDegenerate);
}

}  // TEST_SUITE
