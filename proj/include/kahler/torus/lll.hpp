#pragma once

// Exact integral LLL reduction (all arithmetic in Z, following the
// fraction-free formulation with subdeterminants d_i and scaled Gram-Schmidt
// coefficients lambda_ij = d_j * mu_ij).

#include "kahler/exact/integer.hpp"

#include <vector>

namespace kahler {

using IntVector = std::vector<Integer>;

struct LllResult {
  std::vector<IntVector> basis;
  /// d[0] = 1, d[i] = Gram determinant of the first i basis vectors, so
  /// |b*_i|^2 = d[i+1] / d[i].
  std::vector<Integer> d;

  /// Squared Gram-Schmidt norm of basis vector i, as an exact rational.
  Rational gs_norm_squared(std::size_t i) const { return Rational(d[i + 1], d[i]); }
};

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Reduces the rows of `basis` (which must be linearly independent) with
/// Lovasz parameter delta = delta_num / delta_den in (1/4, 1].
inline LllResult lll_reduce(std::vector<IntVector> basis, long delta_num = 99, long delta_den = 100) {
  const std::size_t n = basis.size();
  LllResult out;
  out.d.assign(n + 1, 0);
  out.d[0] = 1;
  if (n == 0) {
    out.basis = std::move(basis);
    return out;
  }
  auto& b = basis;
  auto& d = out.d;
  std::vector<std::vector<Integer>> lam(n, std::vector<Integer>(n));

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l + 1]) return;
    const Integer q = round_div(lam[k][l], d[l + 1]);
    for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
    lam[k][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t kmax = 0;
  auto swap_step = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    const Integer big = (d[k - 1] * d[k + 1] + l * l) / d[k];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam[i][k];
      lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
      lam[i][k - 1] = (big * t + l * lam[i][k]) / d[k + 1];
    }
    d[k] = big;
  };

  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw PreconditionError("lll_reduce: zero basis vector");
  std::size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        Integer u = dot(b[k], b[j]);
        for (std::size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u == 0) throw PreconditionError("lll_reduce: basis vectors are linearly dependent");
          d[k + 1] = u;
        }
      }
    }
    reduce(k, k - 1);
    const Integer lhs = delta_den * d[k + 1] * d[k - 1];
    const Integer rhs = delta_num * d[k] * d[k] - delta_den * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swap_step(k);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
  out.basis = std::move(basis);
  return out;
}

}  // namespace kahler
