#pragma once

#include "kahler/numeric/real.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace kahler {

struct Complex {
  Real re;
  Real im;

  explicit Complex(Precision prec = 53) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r, long i, Precision prec) : re(r, prec), im(i, prec) {}

  Precision precision() const { return std::max(re.precision(), im.precision()); }

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real modulus() const { return hypot(re, im); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm keeps intermediate magnitudes bounded.
    if (abs(b.re) >= abs(b.im)) {
      Real r = b.im / b.re;
      Real den = b.re + b.im * r;
      return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    Real r = b.re / b.im;
    Real den = b.re * r + b.im;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
  }
  Complex& operator+=(const Complex& b) { return *this = *this + b; }
  Complex& operator-=(const Complex& b) { return *this = *this - b; }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }

  std::string to_string(int digits = 20) const { return "(" + re.to_string(digits) + ", " + im.to_string(digits) + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.to_string(); }
};

/// Dense complex matrix for the period-lattice linear algebra.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols, Precision prec)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(prec)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("ComplexMatrix product shape mismatch");
    const Precision prec = a.rows_ && a.cols_ ? a(0, 0).precision() : 53;
    ComplexMatrix p(a.rows_, b.cols_, prec);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Complex acc(prec);
        for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
        p(i, j) = std::move(acc);
      }
    }
    return p;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix d = a;
    for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] = a.data_[i] - b.data_[i];
    return d;
  }

  /// Max row sum of entry magnitudes.
  Real inf_norm() const {
    Real best(precision_hint());
    for (std::size_t r = 0; r < rows_; ++r) {
      Real row(precision_hint());
      for (std::size_t c = 0; c < cols_; ++c) row += (*this)(r, c).modulus();
      best = max(best, row);
    }
    return best;
  }

  /// Inverse by Gauss-Jordan elimination with partial pivoting. Throws when singular.
  ComplexMatrix inverse() const {
    if (rows_ != cols_) throw PreconditionError("inverse needs a square matrix");
    const std::size_t n = rows_;
    const Precision prec = precision_hint();
    ComplexMatrix a = *this;
    ComplexMatrix inv(n, n, prec);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = Complex(1, 0, prec);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      Real best = a(col, col).modulus();
      for (std::size_t r = col + 1; r < n; ++r) {
        Real mag = a(r, col).modulus();
        if (mag > best) {
          best = mag;
          piv = r;
        }
      }
      if (best.is_zero()) throw PreconditionError("complex matrix is singular");
      if (piv != col) {
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(piv, c), a(col, c));
          std::swap(inv(piv, c), inv(col, c));
        }
      }
      const Complex one(1, 0, prec);
      const Complex scale = one / a(col, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(col, c) = a(col, c) * scale;
        inv(col, c) = inv(col, c) * scale;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        const Complex f = a(r, col);
        if (f.re.is_zero() && f.im.is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  Precision precision_hint() const { return data_.empty() ? 53 : data_.front().precision(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

}  // namespace kahler
