#pragma once

// Reconstructing beta(k,n), k < n, from alpha and the gap-one values t_k = beta(k,k+1),
// once through the triple sum identity and once through the inversion constraint
// sum_i F(n,i) G(i,k) = 0. The two disagree in general; the alpha = k+n seed shows it.
// Exact rationals only.

#include <map>
#include <utility>
#include <vector>

#include "abinv/kernels.hpp"

namespace abinv {

struct BetaSeed {
  PairFn<Rational> alpha;
  IndexFn<Rational> t;  // t_k = beta(k, k+1)
  Window window;
};

/// Known values beta(j1, j2) for j1 < j2. Lookups of absent pairs raise MissingBeta.
class BetaTable {
 public:
  void set(Index j1, Index j2, Rational value);
  [[nodiscard]] bool contains(Index j1, Index j2) const;
  [[nodiscard]] const Rational& at(Index j1, Index j2) const;
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::map<std::pair<Index, Index>, Rational>& values() const noexcept { return values_; }

 private:
  std::map<std::pair<Index, Index>, Rational> values_;
};

/// One step of the TSI recursion:
///   beta(k,n) = alpha(n-1,n)/alpha(n-1,n-1) * beta(k,n-1) + alpha(n-1,k)/alpha(n-1,n-1) * t_{n-1}.
Rational beta_step_tsi(const BetaSeed& seed, const Rational& beta_prev, Index k, Index n);

/// The unrolled TSI recursion
///   beta(k,n) = sum_{i=k+1}^{n} alpha(i-1,k)/alpha(i-1,i-1) prod_{j=i+1}^{n} alpha(j-1,j)/alpha(j-1,j-1) t_{i-1}.
Rational beta_closed_tsi(const BetaSeed& seed, Index k, Index n);

/// f(k,n;i) = (-1)^{n-i} prod_{k<=j1<j2<=n, j1,j2 != i} beta(j1,j2) prod_{j=k+1}^{n-1} alpha(j,i).
Rational f_weight(const BetaSeed& seed, const BetaTable& known, Index k, Index n, Index i);

/// g(k,n;i): as f_weight but only pairs with j2 - j1 <= n-k-1 enter the beta product.
Rational g_weight(const BetaSeed& seed, const BetaTable& known, Index k, Index n, Index i);

/// Outcome of solving the inversion constraint for beta(k,n).
struct InversionBeta {
  bool determined = false;
  Rational value;      // valid when determined
  Rational numerator;  // f(k,n;k) + f(k,n;n)
  Rational g_sum;      // sum_{i=k+1}^{n-1} g(k,n;i); zero means beta(k,n) is not determined
};

/// beta(k,n) = -(f(k,n;k) + f(k,n;n)) / sum_{i=k+1}^{n-1} g(k,n;i), needs n >= k+2 and every
/// shorter-gap beta inside [k,n] in `known`.
InversionBeta beta_from_inversion(const BetaSeed& seed, Index k, Index n, const BetaTable& known);

/// All beta(k,n), lo <= k < n <= hi, from the closed TSI recursion.
BetaTable build_tsi_table(const BetaSeed& seed);

struct InversionTable {
  BetaTable betas;
  std::vector<std::pair<Index, Index>> undetermined;  // pairs whose g-sum vanished or needed such a pair
};

/// All beta(k,n) on the seed window from the inversion constraint, bottom-up by gap.
InversionTable build_inversion_table(const BetaSeed& seed);

/// Kernel with the seed's alpha and beta from the closed TSI recursion, extended antisymmetrically.
Kernel<Rational> tsi_kernel(const BetaSeed& seed);

/// Seed alpha(k,n) = k + n, t_k = k on [k0, k0+4].
BetaSeed example38_seed(Index k0);

struct CounterexampleRow {
  Index k = 0;
  Rational gap2;  // inversion value minus TSI value at beta(k, k+2)
  Rational gap3;
  Rational gap4;
};

/// Differences between the two recursions at gaps 2, 3, 4 for the alpha = k+n, t_k = k seed; k >= 1.
CounterexampleRow counterexample_38(Index k);

/// (8k^3+32k^2+32k+5) / (8k^3+36k^2+52k+24).
Rational published_gap3_difference(Index k);

/// (2k+7) / (8(k+1)(k+2)(k+3)(2k+3)(2k+5)) * f(k)/g(k) with the printed degree-11 and degree-7 polynomials.
Rational published_gap4_difference(Index k);

}  // namespace abinv
