#pragma once

#include "kahler/exact/int_matrix.hpp"
#include "kahler/exact/polynomial.hpp"

#include <vector>

namespace kahler {

/// Fraction-free determinant (Bareiss elimination with row pivoting).
inline Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw PreconditionError("determinant needs a square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal, last
/// column holds the negated low-order coefficients.
inline IntMatrix companion(const IntPolynomial& p) {
  if (p.degree() < 1) throw PreconditionError("companion matrix needs degree >= 1");
  if (!p.is_monic()) throw PreconditionError("companion matrix needs a monic polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p[i];
  return c;
}

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier. The divisions
/// by k are exact over the integers.
inline IntPolynomial charpoly(const IntMatrix& a) {
  if (!a.is_square()) throw PreconditionError("charpoly needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> coeffs(n + 1);
  coeffs[n] = 1;
  const IntMatrix id = IntMatrix::identity(n);
  IntMatrix m = IntMatrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + coeffs[n - k + 1] * id;
    const IntMatrix am = a * m;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(coeffs));
}

/// Resultant via the Sylvester determinant.
inline Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  if (m == 0) return boost::multiprecision::pow(f[0], static_cast<unsigned>(n));
  if (n == 0) return boost::multiprecision::pow(g[0], static_cast<unsigned>(m));
  const auto size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, size);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + j)) = f[static_cast<std::size_t>(m - j)];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + j)) = g[static_cast<std::size_t>(n - j)];
  }
  return determinant(s);
}

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
inline Integer discriminant(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw PreconditionError("discriminant needs degree >= 1");
  if (n == 1) return 1;
  Integer res = resultant(p, p.derivative());
  Integer d = res / p.leading();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace kahler
