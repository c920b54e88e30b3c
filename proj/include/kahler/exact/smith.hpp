#pragma once

#include "kahler/exact/int_matrix.hpp"
#include "kahler/exact/integer.hpp"

#include <optional>
#include <vector>

namespace kahler {

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... | dk,
/// all nonnegative, zeros last.
struct SNFDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<Integer> diag;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& a : diag) r += (a != 0);
    return r;
  }
};

namespace detail {

// Quotient minimizing |a - q b|, for any nonzero b.
inline Integer nearest_quotient(const Integer& a, const Integer& b) {
  return b > 0 ? round_div(a, b) : round_div(-a, -b);
}

// Moves the nonzero entry of least magnitude in the trailing block starting at
// (t, t) to the pivot position. Returns false when the block is zero.
inline bool bring_min_pivot(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
  std::size_t best_r = 0, best_c = 0;
  Integer best = 0;
  for (std::size_t r = t; r < d.rows(); ++r) {
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      Integer mag = abs(d(r, c));
      if (best == 0 || mag < best) {
        best = mag;
        best_r = r;
        best_c = c;
      }
    }
  }
  if (best == 0) return false;
  d.swap_rows(t, best_r);
  u.swap_rows(t, best_r);
  d.swap_cols(t, best_c);
  v.swap_cols(t, best_c);
  return true;
}

// Moves the smallest nonzero entry of row t / column t (beyond the pivot) to
// the pivot when it beats the current pivot.
inline void improve_pivot_cross(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
  Integer best = abs(d(t, t));
  std::size_t where = 0;
  bool in_col = false, found = false;
  for (std::size_t r = t + 1; r < d.rows(); ++r) {
    if (d(r, t) != 0 && (best == 0 || abs(d(r, t)) < best)) {
      best = abs(d(r, t));
      where = r;
      in_col = true;
      found = true;
    }
  }
  for (std::size_t c = t + 1; c < d.cols(); ++c) {
    if (d(t, c) != 0 && (best == 0 || abs(d(t, c)) < best)) {
      best = abs(d(t, c));
      where = c;
      in_col = false;
      found = true;
    }
  }
  if (!found) return;
  if (in_col) {
    d.swap_rows(t, where);
    u.swap_rows(t, where);
  } else {
    d.swap_cols(t, where);
    v.swap_cols(t, where);
  }
}

}  // namespace detail

/// Smith normal form with transforms. Accepts any shape, including zero matrices.
inline SNFDecomposition snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t k = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < k; ++t) {
    if (!detail::bring_min_pivot(d, u, v, t)) break;
    for (;;) {
      bool cleared = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        Integer q = detail::nearest_quotient(d(r, t), d(t, t));
        d.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) cleared = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        Integer q = detail::nearest_quotient(d(t, c), d(t, t));
        d.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) cleared = false;
      }
      if (!cleared) {
        detail::improve_pivot_cross(d, u, v, t);
        continue;
      }
      // Row and column are clear; the pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t r = t + 1; r < d.rows() && divides; ++r) {
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
          if (d(r, c) % d(t, t) != 0) {
            d.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
      detail::improve_pivot_cross(d, u, v, t);
    }
    if (d(t, t) < 0) {
      d.negate_col(t);
      v.negate_col(t);
    }
  }

  SNFDecomposition out{std::move(u), std::move(d), std::move(v), {}};
  out.diag.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.diag.push_back(out.d(i, i));
  return out;
}

inline std::size_t rank(const IntMatrix& a) { return snf(a).rank(); }

/// Integer solution x of B x = rhs, if one exists.
inline std::optional<std::vector<Integer>> solve_integer(const IntMatrix& b, const std::vector<Integer>& rhs) {
  if (rhs.size() != b.rows()) throw PreconditionError("solve_integer: right-hand side has wrong length");
  const SNFDecomposition s = snf(b);
  const std::vector<Integer> w = s.u * rhs;
  std::vector<Integer> y(b.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Integer di = i < s.diag.size() ? s.diag[i] : Integer(0);
    if (di == 0) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    if (w[i] % di != 0) return std::nullopt;
    y[i] = w[i] / di;
  }
  return s.v * y;
}

/// Basis of the integer kernel {x : A x = 0}, as columns. Empty optional when
/// the kernel is trivial.
inline std::optional<IntMatrix> integer_kernel(const IntMatrix& a) {
  const SNFDecomposition s = snf(a);
  const std::size_t r = s.rank();
  if (r == a.cols()) return std::nullopt;
  return s.v.block(0, r, a.cols(), a.cols() - r);
}

/// True when every column of `sub` lies in the lattice spanned by the columns of `lattice`.
inline bool lattice_contains(const IntMatrix& lattice, const IntMatrix& sub) {
  for (std::size_t c = 0; c < sub.cols(); ++c) {
    if (!solve_integer(lattice, sub.column(c))) return false;
  }
  return true;
}

inline bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

/// Inverse of a unimodular matrix, by Gauss-Jordan over the rationals.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse_unimodular needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(m(r, c));
    aug[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw PreconditionError("matrix is singular");
    std::swap(aug[piv], aug[col]);
    const Rational inv = Rational(1) / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = aug[r][n + c];
      if (denominator(x) != 1) throw PreconditionError("matrix is not unimodular");
      inv(r, c) = numerator(x);
    }
  }
  return inv;
}

}  // namespace kahler
