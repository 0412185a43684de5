#include "abinv/eds.hpp"

#include <algorithm>
#include <string>

#include "abinv/products.hpp"

namespace abinv {

EdsSequence EdsSequence::generate(const Rational& w2, const Rational& w3, const Rational& w4, Index bound) {
  if (bound < 1) throw Error(ErrorCode::DomainError, "EDS table bound must be positive");
  if (sgn(w2) == 0) {
    throw Error(ErrorCode::ZeroDivisor, "W_2 = 0: it divides W_6 and enters every kernel denominator");
  }
  std::vector<Rational> w{Rational(0), Rational(1), w2, w3, w4};
  w.resize(std::max<std::size_t>(w.size(), static_cast<std::size_t>(bound) + 1));
  for (Index m = 5; m <= bound; ++m) {
    const Index n = m - 2;
    const Rational& divisor = w[n - 2];
    if (sgn(divisor) == 0) {
      throw Error(ErrorCode::ZeroDivisor,
                  "W_" + std::to_string(n - 2) + " = 0 while computing W_" + std::to_string(m));
    }
    w[m] = (w[n + 1] * w[n - 1] * w2 * w2 - w[1] * w3 * w[n] * w[n]) / divisor;
  }
  w.resize(static_cast<std::size_t>(bound) + 1);

  std::vector<Rational> bilateral(2 * static_cast<std::size_t>(bound) + 1);
  for (Index n = 0; n <= bound; ++n) {
    bilateral[static_cast<std::size_t>(bound + n)] = w[n];
    bilateral[static_cast<std::size_t>(bound - n)] = -w[n];
  }
  return EdsSequence(std::move(bilateral), bound);
}

const Rational& EdsSequence::at(Index n) const {
  if (!contains(n)) {
    throw Error(ErrorCode::IndexOutOfTable, "W_" + std::to_string(n) + " outside table [-" + std::to_string(bound_) +
                                                "," + std::to_string(bound_) + "]");
  }
  return values_[static_cast<std::size_t>(bound_ + n)];
}

Rational EdsSequence::recurrence_residual(Index n) const {
  const Rational& w2 = at(2);
  return at(n + 2) * at(n - 2) - (at(n + 1) * at(n - 1) * w2 * w2 - at(1) * at(3) * at(n) * at(n));
}

Rational eds_property_residual(const EdsSequence& w, Index k, Index p, Index q) {
  return w(k) * w(k) * w(p + q) * w(p - q) + w(p) * w(p) * w(q + k) * w(q - k) + w(q) * w(q) * w(k + p) * w(k - p);
}

Kernel<Rational> eds_kernel(const EdsSequence& w, std::optional<Window> window) {
  Kernel<Rational> kernel;
  kernel.name = "eds";
  kernel.alpha = [w](Index, Index k) { return Rational(w(k) * w(k)); };
  kernel.beta = [w](Index i, Index k) { return Rational(w(i + k) * w(i - k)); };
  kernel.beta_antisymmetric = true;
  if (window) {
    for (Index i = window->lo; i <= window->hi; ++i) {
      if (sgn(w(i)) == 0) throw Error(ErrorCode::ZeroBeta, "eds: W_" + std::to_string(i) + " = 0 on the window");
      for (Index k = window->lo; k <= window->hi; ++k) {
        if (i != k && sgn(kernel.beta(i, k)) == 0) {
          throw Error(ErrorCode::ZeroBeta, "eds: W_{i+k} W_{i-k} = 0 at " + detail::at(i, k));
        }
      }
    }
  }
  return kernel;
}

Rational eds_closed_f(const EdsSequence& w, Index n, Index k) {
  auto W = [&](Index i) { return w(i); };
  return ipow(Rational(w(k) * w(k)), n - k) /
         (prod_range<Rational>(W, 2 * k + 1, n + k) * prod_range<Rational>(W, 1, n - k));
}

Rational eds_closed_g(const EdsSequence& w, Index n, Index k) {
  auto W = [&](Index i) { return w(i); };
  const Rational wk2 = w(k) * w(k);
  const Rational wn2 = w(n) * w(n);
  const Rational sign = ((n - k) % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * wk2 / wn2 * ipow(wn2, n - k) * prod_range<Rational>(W, 1, n + k - 1) /
         (prod_range<Rational>(W, 1, 2 * n - 1) * prod_range<Rational>(W, 1, n - k));
}

Window eds_default_window(const EdsSequence& w) { return {1, w.bound() / 2}; }

}  // namespace abinv
