#include "abinv/recursions.hpp"

#include <string>

#include "abinv/error.hpp"

namespace abinv {

namespace {

std::string pair_str(Index a, Index b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Rational diagonal(const BetaSeed& seed, Index j) {
  Rational d = seed.alpha(j, j);
  if (sgn(d) == 0) throw Error(ErrorCode::ZeroDiagonal, "alpha" + pair_str(j, j) + " = 0");
  return d;
}

Rational sign(Index e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational weight(const BetaSeed& seed, const BetaTable& known, Index k, Index n, Index i, Index max_gap) {
  if (!(k <= i && i <= n)) {
    throw Error(ErrorCode::DomainError, "weight index i=" + std::to_string(i) + " outside [k,n]=" + pair_str(k, n));
  }
  Rational product = sign(n - i);
  for (Index j1 = k; j1 <= n; ++j1) {
    if (j1 == i) continue;
    for (Index j2 = j1 + 1; j2 <= n && j2 - j1 <= max_gap; ++j2) {
      if (j2 == i) continue;
      product *= known.at(j1, j2);
    }
  }
  for (Index j = k + 1; j <= n - 1; ++j) product *= seed.alpha(j, i);
  return product;
}

Rational polynomial(Index k, std::initializer_list<long> coefficients_high_to_low) {
  Rational v = 0;
  for (long c : coefficients_high_to_low) v = v * k + c;
  return v;
}

}  // namespace

void BetaTable::set(Index j1, Index j2, Rational value) {
  if (j1 >= j2) throw Error(ErrorCode::DomainError, "beta table stores j1 < j2 only, got " + pair_str(j1, j2));
  values_.insert_or_assign({j1, j2}, std::move(value));
}

bool BetaTable::contains(Index j1, Index j2) const { return values_.count({j1, j2}) != 0; }

const Rational& BetaTable::at(Index j1, Index j2) const {
  auto it = values_.find({j1, j2});
  if (it == values_.end()) throw Error(ErrorCode::MissingBeta, "beta" + pair_str(j1, j2) + " not yet determined");
  return it->second;
}

Rational beta_step_tsi(const BetaSeed& seed, const Rational& beta_prev, Index k, Index n) {
  const Rational d = diagonal(seed, n - 1);
  return Rational(seed.alpha(n - 1, n) / d) * beta_prev + Rational(seed.alpha(n - 1, k) / d) * seed.t(n - 1);
}

Rational beta_closed_tsi(const BetaSeed& seed, Index k, Index n) {
  if (n < k) throw Error(ErrorCode::DomainError, "beta_closed_tsi needs k <= n, got " + pair_str(k, n));
  Rational sum = 0;
  for (Index i = k + 1; i <= n; ++i) {
    Rational term = seed.alpha(i - 1, k) / diagonal(seed, i - 1);
    for (Index j = i + 1; j <= n; ++j) term *= seed.alpha(j - 1, j) / diagonal(seed, j - 1);
    sum += term * seed.t(i - 1);
  }
  return sum;
}

Rational f_weight(const BetaSeed& seed, const BetaTable& known, Index k, Index n, Index i) {
  return weight(seed, known, k, n, i, n - k);
}

Rational g_weight(const BetaSeed& seed, const BetaTable& known, Index k, Index n, Index i) {
  return weight(seed, known, k, n, i, n - k - 1);
}

InversionBeta beta_from_inversion(const BetaSeed& seed, Index k, Index n, const BetaTable& known) {
  if (n < k + 2) {
    throw Error(ErrorCode::DomainError, "inversion recursion starts at gap 2, got " + pair_str(k, n));
  }
  InversionBeta out;
  // f(k,n;k) and f(k,n;n) never involve beta(k,n) itself.
  out.numerator = f_weight(seed, known, k, n, k) + f_weight(seed, known, k, n, n);
  for (Index i = k + 1; i <= n - 1; ++i) out.g_sum += g_weight(seed, known, k, n, i);
  if (sgn(out.g_sum) != 0) {
    out.determined = true;
    out.value = -out.numerator / out.g_sum;
  }
  return out;
}

BetaTable build_tsi_table(const BetaSeed& seed) {
  BetaTable table;
  const Window w = seed.window;
  for (Index k = w.lo; k < w.hi; ++k) {
    // Iterate the one-step form; beta_closed_tsi is the independent unrolled route.
    Rational beta = 0;
    for (Index n = k + 1; n <= w.hi; ++n) {
      beta = beta_step_tsi(seed, beta, k, n);
      table.set(k, n, beta);
    }
  }
  return table;
}

InversionTable build_inversion_table(const BetaSeed& seed) {
  InversionTable out;
  const Window w = seed.window;
  for (Index k = w.lo; k < w.hi; ++k) out.betas.set(k, k + 1, seed.t(k));
  for (Index gap = 2; gap <= w.hi - w.lo; ++gap) {
    for (Index k = w.lo; k + gap <= w.hi; ++k) {
      try {
        InversionBeta b = beta_from_inversion(seed, k, k + gap, out.betas);
        if (b.determined) {
          out.betas.set(k, k + gap, std::move(b.value));
        } else {
          out.undetermined.emplace_back(k, k + gap);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::MissingBeta) throw;
        out.undetermined.emplace_back(k, k + gap);
      }
    }
  }
  return out;
}

Kernel<Rational> tsi_kernel(const BetaSeed& seed) {
  Kernel<Rational> kernel;
  kernel.name = "tsi-reconstruction";
  kernel.alpha = seed.alpha;
  kernel.beta = [seed](Index i, Index k) -> Rational {
    if (i == k) return Rational(0);
    if (i < k) return beta_closed_tsi(seed, i, k);
    return -beta_closed_tsi(seed, k, i);
  };
  kernel.beta_antisymmetric = true;
  return kernel;
}

BetaSeed example38_seed(Index k0) {
  BetaSeed seed;
  seed.alpha = [](Index k, Index n) { return Rational(static_cast<long>(k) + n); };
  seed.t = [](Index k) { return Rational(static_cast<long>(k)); };
  seed.window = {k0, k0 + 4};
  return seed;
}

CounterexampleRow counterexample_38(Index k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "the k+n seed needs k >= 1 (alpha(0,0) = 0)");
  const BetaSeed seed = example38_seed(k);
  const InversionTable inv = build_inversion_table(seed);
  CounterexampleRow row;
  row.k = k;
  row.gap2 = inv.betas.at(k, k + 2) - beta_closed_tsi(seed, k, k + 2);
  row.gap3 = inv.betas.at(k, k + 3) - beta_closed_tsi(seed, k, k + 3);
  row.gap4 = inv.betas.at(k, k + 4) - beta_closed_tsi(seed, k, k + 4);
  return row;
}

Rational published_gap3_difference(Index k) {
  return polynomial(k, {8, 32, 32, 5}) / polynomial(k, {8, 36, 52, 24});
}

Rational published_gap4_difference(Index k) {
  const Rational f = polynomial(k, {3072, 56320, 451904, 2085376, 6115168, 11884320, 15498308, 13457624,
                                    7592100, 2669648, 540883, 47328});
  const Rational g = polynomial(k, {48, 544, 2452, 5656, 7216, 5232, 2175, 464});
  const Rational kk = k;
  const Rational prefactor = (2 * kk + 7) / (8 * (kk + 1) * (kk + 2) * (kk + 3) * (2 * kk + 3) * (2 * kk + 5));
  return prefactor * f / g;
}

}  // namespace abinv
