#pragma once

// Elliptic divisibility sequences: W_0 = 0, W_1 = 1, W_{-n} = -W_n and
//   W_{n+2} W_{n-2} = W_{n+1} W_{n-1} W_2^2 - W_1 W_3 W_n^2,
// tabulated exactly, with the inversion kernel alpha(i,k) = W_k^2, beta(i,k) = W_{i+k} W_{i-k}.

#include <optional>
#include <vector>

#include "abinv/kernels.hpp"

namespace abinv {

class EdsSequence {
 public:
  /// Table W_{-bound}..W_{bound} from seeds W_2, W_3, W_4. Raises ZeroDivisor naming the
  /// first index whose divisor W_{n-2} vanishes, and for W_2 = 0 outright.
  static EdsSequence generate(const Rational& w2, const Rational& w3, const Rational& w4, Index bound);

  [[nodiscard]] const Rational& at(Index n) const;
  [[nodiscard]] const Rational& operator()(Index n) const { return at(n); }
  [[nodiscard]] Index bound() const noexcept { return bound_; }
  [[nodiscard]] bool contains(Index n) const noexcept { return -bound_ <= n && n <= bound_; }

  /// W_{n+2} W_{n-2} - (W_{n+1} W_{n-1} W_2^2 - W_1 W_3 W_n^2); needs |n| + 2 <= bound.
  [[nodiscard]] Rational recurrence_residual(Index n) const;

 private:
  EdsSequence(std::vector<Rational> values, Index bound) : values_(std::move(values)), bound_(bound) {}

  std::vector<Rational> values_;  // W_{-bound}..W_{bound}
  Index bound_;
};

/// W_k^2 W_{p+q} W_{p-q} + W_p^2 W_{q+k} W_{q-k} + W_q^2 W_{k+p} W_{k-p}.
Rational eds_property_residual(const EdsSequence& w, Index k, Index p, Index q);

/// The kernel holds its own copy of the table; lookups beyond it raise IndexOutOfTable.
/// With a window, any vanishing W_{i+k} W_{i-k} (i != k) or W_k is rejected as ZeroBeta.
Kernel<Rational> eds_kernel(const EdsSequence& w, std::optional<Window> window = {});

/// F(n,k) = W_k^{2(n-k)} / (prod_{i=2k+1}^{n+k} W_i prod_{i=1}^{n-k} W_i).
Rational eds_closed_f(const EdsSequence& w, Index n, Index k);

/// G(n,k) = (-1)^{n-k} W_k^2/W_n^2 W_n^{2(n-k)} prod_{i=1}^{n+k-1} W_i / (prod_{i=1}^{2n-1} W_i prod_{i=1}^{n-k} W_i).
Rational eds_closed_g(const EdsSequence& w, Index n, Index k);

/// Largest window [1, hi] whose kernel entries stay inside the table.
Window eds_default_window(const EdsSequence& w);

}  // namespace abinv
