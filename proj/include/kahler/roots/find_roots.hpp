#pragma once

#include "kahler/exact/polynomial.hpp"
#include "kahler/numeric/complex.hpp"
#include "kahler/roots/sturm.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kahler {

/// Thrown when conjugate pairing is ambiguous (a match is farther than half the
/// minimal root separation) or the root finder failed to converge.
class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootSet {
  std::vector<Complex> roots;
  Real residual_bound;
  /// (positive-imaginary root, its conjugate); filled only when p has no real
  /// roots and even degree.
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  Precision precision_bits = 0;
};

/// Horner evaluation of an integer polynomial at a complex point.
inline Complex evaluate(const IntPolynomial& p, const Complex& z) {
  const Precision prec = z.precision();
  Complex acc(prec);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * z;
    acc.re += Real(p[static_cast<std::size_t>(i)], prec);
  }
  return acc;
}

/// p(z) and p'(z) together.
inline std::pair<Complex, Complex> evaluate_with_derivative(const IntPolynomial& p, const Complex& z) {
  const Precision prec = z.precision();
  Complex val(prec), der(prec);
  for (int i = p.degree(); i >= 0; --i) {
    der = der * z + val;
    val = val * z;
    val.re += Real(p[static_cast<std::size_t>(i)], prec);
  }
  return {val, der};
}

/// 2^(-bits/2) * (1 + max|coeff|): the residual contract for find_roots.
inline Real residual_contract(const IntPolynomial& p, Precision bits) {
  Integer max_coeff = 0;
  for (const auto& c : p.coeffs()) max_coeff = std::max<Integer>(max_coeff, abs(c));
  return Real::exp2(-static_cast<long>(bits / 2), bits) * Real(Integer(1 + max_coeff), bits);
}

namespace detail {

inline Real cauchy_bound(const IntPolynomial& p, Precision prec) {
  Real lead = abs(Real(p.leading(), prec));
  Real best(prec);
  for (int i = 0; i < p.degree(); ++i) best = max(best, abs(Real(p[static_cast<std::size_t>(i)], prec)) / lead);
  return Real(1L, prec) + best;
}

// Aberth-Ehrlich simultaneous iteration, Gauss-Seidel style updates.
inline std::vector<Complex> aberth(const IntPolynomial& p, Precision prec, Precision target_bits) {
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<Complex> z;
  z.reserve(n);
  const Real radius = cauchy_bound(p, prec);
  const Real two_pi = Real::pi(prec) * 2L;
  const Real offset(0.4, prec);
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = two_pi * Real(static_cast<long>(k), prec) / static_cast<long>(n) + offset;
    Real s(prec), c(prec);
    sin_cos(angle, s, c);
    z.emplace_back(radius * c, radius * s);
  }
  if (n == 1) {
    Real root = -Real(p[0], prec) / Real(p[1], prec);
    return {Complex(root, Real(prec))};
  }

  const Real one(1L, prec);
  const Real tol = Real::exp2(-static_cast<long>(target_bits) - 8, prec);
  int settled_rounds = 0;
  for (int iter = 0; iter < 5000; ++iter) {
    Real worst(prec);
    for (std::size_t k = 0; k < n; ++k) {
      auto [val, der] = evaluate_with_derivative(p, z[k]);
      if (val.re.is_zero() && val.im.is_zero()) continue;
      Complex sum(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        sum += Complex(one, Real(prec)) / diff;
      }
      Complex correction(prec);
      if (der.re.is_zero() && der.im.is_zero()) {
        // Stationary point: nudge off it.
        correction = Complex(Real(1e-3, prec), Real(1e-3, prec));
      } else {
        Complex ratio = val / der;
        correction = ratio / (Complex(one, Real(prec)) - ratio * sum);
      }
      z[k] -= correction;
      Real scale = max(one, z[k].modulus());
      worst = max(worst, correction.modulus() / scale);
    }
    if (worst <= tol) {
      if (++settled_rounds >= 2) return z;
    } else {
      settled_rounds = 0;
    }
  }
  throw RootFindingError("Aberth iteration did not converge");
}

}  // namespace detail

/// All complex roots of a squarefree integer polynomial.
inline RootSet find_roots(const IntPolynomial& p, Precision precision_bits = 256) {
  if (p.degree() < 1) throw PreconditionError("find_roots needs degree >= 1");
  if (!is_squarefree(p)) throw PreconditionError("find_roots needs a squarefree polynomial");
  const Precision work = precision_bits + 64;
  std::vector<Complex> z = detail::aberth(p, work, precision_bits);

  RootSet out;
  out.precision_bits = precision_bits;
  const std::size_t n = z.size();
  const std::size_t real_count = count_real_roots(p);

  if (real_count == 0 && n % 2 == 0) {
    Real min_sep(work);
    bool have_sep = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Real d = (z[i] - z[j]).modulus();
        if (!have_sep || d < min_sep) {
          min_sep = d;
          have_sep = true;
        }
      }
    }
    const Real half_sep = min_sep / 2L;
    std::vector<bool> used(n, false);
    std::vector<Complex> upper;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      std::size_t best = n;
      Real best_d(work);
      for (std::size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        Real d = (z[j] - z[i].conj()).modulus();
        if (best == n || d < best_d) {
          best = j;
          best_d = d;
        }
      }
      if (best == n || best_d > half_sep) throw RootFindingError("conjugate pairing is ambiguous");
      used[best] = true;
      // Symmetrize the pair and keep the upper half-plane representative.
      Complex a = z[i].im.sign() >= 0 ? z[i] : z[best];
      Complex b = z[i].im.sign() >= 0 ? z[best] : z[i];
      upper.emplace_back((a.re + b.re) / 2L, (a.im - b.im) / 2L);
    }
    std::sort(upper.begin(), upper.end(), [](const Complex& a, const Complex& b) {
      if (!(a.re == b.re)) return a.re < b.re;
      return a.im < b.im;
    });
    for (const auto& u : upper) {
      out.pairing.emplace_back(out.roots.size(), out.roots.size() + 1);
      out.roots.push_back(u);
      out.roots.push_back(u.conj());
    }
  } else {
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
      if (!(a.re == b.re)) return a.re < b.re;
      return a.im < b.im;
    });
    out.roots = std::move(z);
  }

  Real residual(work);
  for (const auto& r : out.roots) residual = max(residual, evaluate(p, r).modulus());
  out.residual_bound = residual;
  if (residual > residual_contract(p, precision_bits)) {
    throw RootFindingError("root residual exceeds the precision contract");
  }
  return out;
}

}  // namespace kahler
