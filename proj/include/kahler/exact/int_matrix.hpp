#pragma once

#include "kahler/exact/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace kahler {

/// Dense row-major matrix of arbitrary-precision integers. Always at least 1x1.
class IntMatrix {
 public:
  IntMatrix() : IntMatrix(1, 1) {}

  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw PreconditionError("IntMatrix must be at least 1x1");
  }

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw PreconditionError("IntMatrix must be at least 1x1");
    if (entries_.size() != rows * cols) throw PreconditionError("IntMatrix entry count does not match shape");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw PreconditionError("IntMatrix must be at least 1x1");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw PreconditionError("ragged IntMatrix literal");
      for (long long v : row) entries_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (e != 0) return false;
    }
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  std::vector<Integer> column(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    }
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("IntMatrix product shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    }
    return p;
  }

  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
    if (a.cols_ != v.size()) throw PreconditionError("IntMatrix-vector shape mismatch");
    std::vector<Integer> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    }
    return out;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("IntMatrix sum shape mismatch");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }

  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("IntMatrix difference shape mismatch");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
  }

  friend IntMatrix operator*(const Integer& s, IntMatrix a) {
    for (auto& e : a.entries_) e *= s;
    return a;
  }

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Stacks two matrices with the same column count vertically.
inline IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw PreconditionError("vstack column mismatch");
  IntMatrix s(top.rows() + bottom.rows(), top.cols());
  s.set_block(0, 0, top);
  s.set_block(top.rows(), 0, bottom);
  return s;
}

/// Concatenates two matrices with the same row count horizontally.
inline IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows()) throw PreconditionError("hstack row mismatch");
  IntMatrix s(left.rows(), left.cols() + right.cols());
  s.set_block(0, 0, left);
  s.set_block(0, left.cols(), right);
  return s;
}

}  // namespace kahler
