#pragma once

// Search for integral antisymmetric forms whose (2,0) part vanishes, i.e.
// integral classes of type (1,1) on the lattice of a torus. A reduced basis of
// the lattice {(x, round(S * C x))} exposes short integer solutions of the
// numerical constraints C x = 0; when none verify, the smallest Gram-Schmidt
// norm bounds the height up to which no solution can exist.

#include "kahler/exact/json_io.hpp"
#include "kahler/torus/lll.hpp"
#include "kahler/torus/torus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace kahler {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NsSearchReport {
  Integer height_bound;
  std::vector<IntMatrix> forms_found;
  Real constraint_residual_max;
  /// Height below which the reduced basis rules out any form; set when no form verified.
  Integer certified_height;
  Integer height_covered;
  Precision precision_bits = 0;
  unsigned constraint_rows = 0;

  bool found() const { return !forms_found.empty(); }
  const char* verdict() const { return found() ? "forms-found" : "no-form-found"; }
};

/// Coordinates (a, b), a < b, of the unknowns E_ab in lexicographic order.
inline std::vector<std::pair<std::size_t, std::size_t>> antisymmetric_coordinates(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) out.emplace_back(a, b);
  }
  return out;
}

inline IntMatrix antisymmetric_from_coordinates(std::size_t dim, const IntVector& x) {
  IntMatrix e = IntMatrix::zero(dim, dim);
  const auto coords = antisymmetric_coordinates(dim);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    e(coords[k].first, coords[k].second) = x[k];
    e(coords[k].second, coords[k].first) = -x[k];
  }
  return e;
}

inline Integer form_height(const IntMatrix& e) {
  Integer h = 0;
  for (const auto& v : e.entries()) h = std::max<Integer>(h, abs(v));
  return h;
}

/// max over selected eigenvector pairs i < j of |v_i^T E v_j|, relative to max(1, height(E)).
inline Real two_zero_residual(const TorusWithEndomorphism& t, const IntMatrix& e) {
  const ComplexMatrix& v = t.holomorphic_frame;
  const Precision prec = v.precision_hint();
  const std::size_t dim = v.rows(), n = v.cols();
  Real worst(prec);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Complex acc(prec);
      for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
          if (e(a, b) == 0) continue;
          acc += v(a, i) * v(b, j) * Real(e(a, b), prec);
        }
      }
      worst = max(worst, acc.modulus());
    }
  }
  const Integer h = form_height(e);
  return h > 1 ? worst / Real(h, prec) : worst;
}

namespace detail {

// Rows: real and imaginary parts of v_i^T E_ab v_j for each pair i < j;
// columns: the unknowns E_ab.
inline std::vector<std::vector<Real>> ns_constraints(const TorusWithEndomorphism& t) {
  const ComplexMatrix& v = t.holomorphic_frame;
  const std::size_t dim = v.rows(), n = v.cols();
  const auto coords = antisymmetric_coordinates(dim);
  std::vector<std::vector<Real>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Real> re, im;
      for (auto [a, b] : coords) {
        const Complex c = v(a, i) * v(b, j) - v(b, i) * v(a, j);
        re.push_back(c.re);
        im.push_back(c.im);
      }
      rows.push_back(std::move(re));
      rows.push_back(std::move(im));
    }
  }
  return rows;
}

}  // namespace detail

/// Integral (1,1)-form search up to `height_bound`, with constraint scaling
/// 2^(precision_bits/4) and acceptance tolerance 2^(-precision_bits/2).
inline NsSearchReport ns_integral_search(const TorusWithEndomorphism& t, const Integer& height_bound, Precision precision_bits) {
  if (height_bound < 1) throw PreconditionError("height bound must be positive");
  if (precision_bits > t.precision_bits) throw PreconditionError("search precision exceeds the torus precision");
  if (t.condition_number.log2_abs() > static_cast<double>(precision_bits) / 4) {
    throw PrecisionError("precision insufficient: period system condition number 2^" +
                         std::to_string(static_cast<long>(t.condition_number.log2_abs())));
  }
  const std::size_t dim = t.rational_rep.rows();
  const auto coords = antisymmetric_coordinates(dim);
  const std::size_t m = coords.size();
  const auto constraints = detail::ns_constraints(t);
  const std::size_t r = constraints.size();
  const long scale_exp = static_cast<long>(precision_bits / 4);
  const Precision prec = t.holomorphic_frame.precision_hint();

  std::vector<IntVector> basis;
  for (std::size_t k = 0; k < m; ++k) {
    IntVector row(m + r, 0);
    row[k] = 1;
    for (std::size_t c = 0; c < r; ++c) row[m + c] = ldexp(constraints[c][k], scale_exp).round();
    basis.push_back(std::move(row));
  }
  const LllResult reduced = lll_reduce(std::move(basis));

  NsSearchReport report;
  report.height_bound = height_bound;
  report.precision_bits = precision_bits;
  report.constraint_rows = static_cast<unsigned>(r);
  report.constraint_residual_max = Real(prec);
  const Real tol = torus_tolerance(precision_bits);
  for (const auto& b : reduced.basis) {
    IntMatrix e = antisymmetric_from_coordinates(dim, IntVector(b.begin(), b.begin() + static_cast<long>(m)));
    if (form_height(e) > height_bound) continue;
    const Real res = two_zero_residual(t, e);
    if (res <= tol) {
      report.constraint_residual_max = max(report.constraint_residual_max, res);
      report.forms_found.push_back(std::move(e));
    }
  }

  if (!report.found()) {
    // A true form x of height H maps to a lattice vector of norm at most
    // H * sqrt(m + r * (m * (1/2 + S * tol))^2); every nonzero lattice vector
    // is at least as long as the shortest Gram-Schmidt vector.
    Rational min_gs = reduced.gs_norm_squared(0);
    for (std::size_t i = 1; i < reduced.basis.size(); ++i) min_gs = std::min(min_gs, reduced.gs_norm_squared(i));
    const Real s_tol = Real::exp2(scale_exp - static_cast<long>(precision_bits / 2), prec);
    const Real per_row = (Real(0.5, prec) + s_tol) * static_cast<long>(m);
    const Real growth = sqrt(Real(static_cast<long>(m), prec) + per_row * per_row * static_cast<long>(r));
    const Real h = sqrt(Real(min_gs, prec)) / growth;
    Integer certified = h.round();
    while (certified > 0 && Real(certified, prec) > h) --certified;
    report.certified_height = certified;
    report.height_covered = std::min(certified, height_bound);
  } else {
    report.height_covered = 0;
  }
  return report;
}

inline Json to_json(const NsSearchReport& r) {
  Json forms = Json::array();
  for (const auto& e : r.forms_found) forms.push_back(to_json(e));
  return Json{{"heightBound", to_string(r.height_bound)},
              {"verdict", r.verdict()},
              {"formsFound", std::move(forms)},
              {"constraintResidualMax", r.constraint_residual_max.to_string(6)},
              {"certifiedHeight", to_string(r.certified_height)},
              {"heightCovered", to_string(r.height_covered)},
              {"precisionBits", r.precision_bits},
              {"constraintRows", r.constraint_rows},
              {"note", "numerical evidence; the Galois certificate is the proof of non-projectivity"}};
}

}  // namespace kahler
