#pragma once

// Thin value-semantic wrapper over MPFR. Every value carries its own binary
// precision; binary operations round to the larger operand precision.

#include "kahler/exact/integer.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace kahler {

using Precision = mpfr_prec_t;

class Real {
 public:
  explicit Real(Precision prec = 53) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  Real(long value, Precision prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(int value, Precision prec) : Real(static_cast<long>(value), prec) {}
  Real(double value, Precision prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  Real(const Integer& value, Precision prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, value.backend().data(), MPFR_RNDN);
  }
  Real(const Rational& value, Precision prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, value.backend().data(), MPFR_RNDN);
  }
  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(const Real& other, Precision prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  Precision precision() const { return mpfr_get_prec(v_); }

  static Real pi(Precision prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  /// 2^e at the given precision.
  static Real exp2(long e, Precision prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// log2 of the magnitude; -inf style large negative value for zero.
  double log2_abs() const {
    if (mpfr_zero_p(v_)) return -1e300;
    long exp = 0;
    double mant = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
    return std::log2(std::fabs(mant)) + static_cast<double>(exp);
  }

  Integer round() const {
    Integer z;
    mpfr_get_z(z.backend().data(), v_, MPFR_RNDN);
    return z;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const {
    if (mpfr_zero_p(v_)) return "0";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  friend Real operator*(const Real& a, long k) {
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, long k) {
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  /// a * 2^e, exact.
  friend Real ldexp(const Real& a, long e) {
    Real r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) { return binary(a, b, mpfr_hypot); }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

  friend void sin_cos(const Real& x, Real& s, Real& c) {
    s = Real(x.precision());
    c = Real(x.precision());
    mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
  }

  friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.to_string(); }

 private:
  static Precision clamp(Precision p) { return std::max<Precision>(p, MPFR_PREC_MIN); }

  template <typename Op>
  static Real binary(const Real& a, const Real& b, Op op) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace kahler
