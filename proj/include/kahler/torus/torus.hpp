#pragma once

// Complex tori C^n / Pi Z^2n carrying an endomorphism whose rational
// representation is an integer matrix M and whose analytic representation is
// diagonal, linked by Pi M = A Pi.

#include "kahler/exact/charpoly.hpp"
#include "kahler/numeric/complex.hpp"
#include "kahler/roots/find_roots.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace kahler {

/// Raised when a constructed torus misses its residual tolerance.
class TorusInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RealMatrix {
 public:
  RealMatrix(std::size_t rows, std::size_t cols, Precision prec) : rows_(rows), cols_(cols), data_(rows * cols, Real(prec)) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Real& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Real& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Real inf_norm() const {
    Real best(data_.empty() ? 53 : data_.front().precision());
    for (std::size_t r = 0; r < rows_; ++r) {
      Real row(best.precision());
      for (std::size_t c = 0; c < cols_; ++c) row += abs((*this)(r, c));
      best = max(best, row);
    }
    return best;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Real> data_;
};

struct PeriodMatrix {
  unsigned n = 0;
  ComplexMatrix entries{1, 1, 53};  // n x 2n; columns are the lattice generators
  IntPolynomial source_poly;
  std::vector<std::size_t> selection;  // indices into the root set, one per conjugate pair
};

struct TorusWithEndomorphism {
  PeriodMatrix period;
  IntMatrix rational_rep;
  std::vector<Complex> analytic_rep;  // diagonal of A
  RealMatrix complex_structure{1, 1, 53};
  /// 2n x n; column k spans the +i eigenspace of J paired with row k of Pi.
  ComplexMatrix holomorphic_frame{1, 1, 53};
  Precision precision_bits = 0;
  Real holomorphy_residual;
  Real j_square_residual;
  Real j_commute_residual;
  Real condition_number;

  unsigned dimension() const { return period.n; }
};

/// Relative tolerance 2^(-bits/2) used for every torus invariant.
inline Real torus_tolerance(Precision bits) { return Real::exp2(-static_cast<long>(bits / 2), bits); }

struct TorusResiduals {
  Real holomorphy;
  Real j_square;
  Real j_commute;
};

namespace detail {

inline Complex promote(const Complex& z, Precision prec) { return {Real(z.re, prec), Real(z.im, prec)}; }

// [Pi; conj(Pi)] at the given precision.
inline ComplexMatrix stacked_periods(const ComplexMatrix& pi, Precision prec) {
  const std::size_t n = pi.rows(), two_n = pi.cols();
  ComplexMatrix p(two_n, two_n, prec);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < two_n; ++c) {
      p(r, c) = promote(pi(r, c), prec);
      p(n + r, c) = promote(pi(r, c).conj(), prec);
    }
  }
  return p;
}

inline Real holomorphy_residual(const ComplexMatrix& pi, const IntMatrix& m, const std::vector<Complex>& eigen, Precision prec) {
  const std::size_t n = pi.rows(), two_n = pi.cols();
  ComplexMatrix diff(n, two_n, prec);
  ComplexMatrix promoted(n, two_n, prec);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < two_n; ++c) promoted(r, c) = promote(pi(r, c), prec);
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Complex lambda = promote(eigen[r], prec);
    for (std::size_t c = 0; c < two_n; ++c) {
      Complex acc(prec);
      for (std::size_t k = 0; k < two_n; ++k) {
        if (m(k, c) == 0) continue;
        acc += promoted(r, k) * Real(m(k, c), prec);
      }
      diff(r, c) = acc - lambda * promoted(r, c);
    }
  }
  return diff.inf_norm() / promoted.inf_norm();
}

inline std::pair<Real, Real> j_residuals(const RealMatrix& j, const IntMatrix& m, Precision prec) {
  const std::size_t d = j.rows();
  RealMatrix sq(d, d, prec), comm(d, d, prec);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Real s(prec), jm(prec), mj(prec);
      for (std::size_t k = 0; k < d; ++k) {
        s += Real(j(r, k), prec) * Real(j(k, c), prec);
        jm += Real(j(r, k), prec) * Real(m(k, c), prec);
        mj += Real(m(r, k), prec) * Real(j(k, c), prec);
      }
      if (r == c) s += Real(1L, prec);
      sq(r, c) = s;
      comm(r, c) = jm - mj;
    }
  }
  return {sq.inf_norm(), comm.inf_norm()};
}

}  // namespace detail

/// Recomputes the three invariant residuals of a torus at `check_bits`.
inline TorusResiduals torus_residuals(const TorusWithEndomorphism& t, Precision check_bits) {
  auto [sq, comm] = detail::j_residuals(t.complex_structure, t.rational_rep, check_bits);
  return {detail::holomorphy_residual(t.period.entries, t.rational_rep, t.analytic_rep, check_bits), sq, comm};
}

/// Assembles a torus from its period matrix and endomorphism data, computing the
/// complex structure J = P^-1 diag(i, -i) P with P = [Pi; conj(Pi)] and checking
/// every invariant against 2^(-bits/2).
inline TorusWithEndomorphism make_torus(ComplexMatrix pi, IntMatrix m, std::vector<Complex> eigen, IntPolynomial source,
                                        std::vector<std::size_t> selection, Precision bits) {
  const std::size_t n = pi.rows(), two_n = pi.cols();
  if (two_n != 2 * n) throw PreconditionError("period matrix must be n x 2n");
  if (m.rows() != two_n || m.cols() != two_n) throw PreconditionError("rational representation must be 2n x 2n");
  if (eigen.size() != n) throw PreconditionError("analytic representation needs n eigenvalues");
  const Precision work = bits + 64;

  const ComplexMatrix p = detail::stacked_periods(pi, work);
  const ComplexMatrix p_inv = p.inverse();

  ComplexMatrix rotated(two_n, two_n, work);  // diag(i, -i) * P
  for (std::size_t r = 0; r < two_n; ++r) {
    for (std::size_t c = 0; c < two_n; ++c) {
      const Complex& z = p(r, c);
      rotated(r, c) = r < n ? Complex(-z.im, z.re) : Complex(z.im, -z.re);
    }
  }
  const ComplexMatrix jc = p_inv * rotated;

  TorusWithEndomorphism t;
  t.precision_bits = bits;
  t.complex_structure = RealMatrix(two_n, two_n, work);
  Real imag_leak(work);
  for (std::size_t r = 0; r < two_n; ++r) {
    for (std::size_t c = 0; c < two_n; ++c) {
      t.complex_structure(r, c) = jc(r, c).re;
      imag_leak = max(imag_leak, abs(jc(r, c).im));
    }
  }
  t.holomorphic_frame = ComplexMatrix(two_n, n, work);
  for (std::size_t k = 0; k < n; ++k) {
    Real scale(work);
    for (std::size_t r = 0; r < two_n; ++r) scale = max(scale, p_inv(r, k).modulus());
    for (std::size_t r = 0; r < two_n; ++r) t.holomorphic_frame(r, k) = p_inv(r, k) * (Real(1L, work) / scale);
  }
  t.condition_number = p.inf_norm() * p_inv.inf_norm();

  t.period.n = static_cast<unsigned>(n);
  t.period.entries = std::move(pi);
  t.period.source_poly = std::move(source);
  t.period.selection = std::move(selection);
  t.rational_rep = std::move(m);
  t.analytic_rep = std::move(eigen);

  TorusResiduals res = torus_residuals(t, work);
  t.holomorphy_residual = res.holomorphy;
  t.j_square_residual = res.j_square;
  t.j_commute_residual = res.j_commute;

  const Real tol = torus_tolerance(bits);
  if (t.holomorphy_residual > tol) throw TorusInvariantError("endomorphism is not holomorphic within tolerance");
  if (t.j_square_residual > tol) throw TorusInvariantError("J^2 + I exceeds tolerance");
  if (t.j_commute_residual > tol) throw TorusInvariantError("J M - M J exceeds tolerance");
  if (imag_leak > tol) throw TorusInvariantError("complex structure is not real within tolerance");
  return t;
}

/// Torus with endomorphism from a polynomial without real roots: M is the
/// companion matrix, Pi has rows (1, l, ..., l^(2n-1)) for one selected root l
/// per conjugate pair. Default selection: the root with positive imaginary part.
inline TorusWithEndomorphism build_torus(const IntPolynomial& p, Precision bits = 256,
                                         std::optional<std::vector<std::size_t>> selection = std::nullopt) {
  if (!p.is_monic() || p.degree() < 2 || p.degree() % 2 != 0) {
    throw PreconditionError("build_torus needs a monic polynomial of even degree >= 2");
  }
  if (count_real_roots(p) != 0) throw PreconditionError("build_torus needs a polynomial without real roots");
  const auto two_n = static_cast<std::size_t>(p.degree());
  const std::size_t n = two_n / 2;
  const RootSet roots = find_roots(p, bits + 64);
  if (roots.pairing.size() != n) throw RootFindingError("degenerate conjugate pairing");

  std::vector<std::size_t> chosen;
  if (selection) {
    if (selection->size() != n) throw PreconditionError("selection needs one root per conjugate pair");
    std::vector<bool> covered(n, false);
    for (std::size_t idx : *selection) {
      bool ok = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (roots.pairing[k].first == idx || roots.pairing[k].second == idx) {
          if (covered[k]) throw PreconditionError("selection uses a conjugate pair twice");
          covered[k] = true;
          ok = true;
        }
      }
      if (!ok) throw PreconditionError("selection index out of range");
    }
    chosen = *selection;
  } else {
    for (const auto& pr : roots.pairing) chosen.push_back(pr.first);
  }

  const Precision work = bits + 64;
  ComplexMatrix pi(n, two_n, work);
  std::vector<Complex> eigen;
  for (std::size_t r = 0; r < n; ++r) {
    const Complex lambda = detail::promote(roots.roots[chosen[r]], work);
    Complex power(1, 0, work);
    for (std::size_t c = 0; c < two_n; ++c) {
      pi(r, c) = power;
      power = power * lambda;
    }
    eigen.push_back(lambda);
  }
  return make_torus(std::move(pi), companion(p), std::move(eigen), p, std::move(chosen), bits);
}

/// (C / (Z + iZ))^2 with the endomorphism "multiplication by i"; its
/// Neron-Severi group has rank 4. Used as a positive control.
inline TorusWithEndomorphism gaussian_square_torus(Precision bits = 256) {
  const Precision work = bits + 64;
  ComplexMatrix pi(2, 4, work);
  pi(0, 0) = Complex(1, 0, work);
  pi(0, 1) = Complex(0, 1, work);
  pi(1, 2) = Complex(1, 0, work);
  pi(1, 3) = Complex(0, 1, work);
  IntMatrix m{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  std::vector<Complex> eigen{Complex(0, 1, work), Complex(0, 1, work)};
  IntPolynomial source = IntPolynomial{1, 0, 1}.pow(2);
  return make_torus(std::move(pi), std::move(m), std::move(eigen), std::move(source), {}, bits);
}

}  // namespace kahler
