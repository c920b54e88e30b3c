#pragma once

#include "kahler/exact/int_matrix.hpp"
#include "kahler/exact/integer.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kahler {

/// Dense univariate polynomial, constant term first. The zero polynomial has no
/// coefficients and degree -1; otherwise the leading coefficient is nonzero.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i (zero beyond the degree).
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  const Coeff& leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Coeff(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  template <typename Value>
  Value evaluate(const Value& x, const Value& zero) const {
    Value acc = zero;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Value(*it);
    return acc;
  }

  Coeff operator()(const Coeff& x) const { return evaluate<Coeff>(x, Coeff(0)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
    return Polynomial(std::move(s));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] - b[i];
    return Polynomial(std::move(s));
  }

  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> p(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(p));
  }

  friend Polynomial operator*(const Coeff& s, Polynomial a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(Coeff(1));
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Euclidean division; requires exact division by the leading coefficient of
  /// the divisor (always true over a field, and for monic divisors over Z).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Coeff> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial{}, *this};
    std::vector<Coeff> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Coeff& lead = divisor.leading();
    for (int i = degree(); i >= dd; --i) {
      Coeff c = rem[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Coeff q = c / lead;
      if (q * lead != c) throw PreconditionError("inexact polynomial division");
      quot[static_cast<std::size_t>(i - dd)] = q;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Coeff c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      bool negative = c < 0;
      Coeff mag = negative ? Coeff(-c) : c;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << mag;
      if (i > 0 && mag != 1) os << '*';
      if (i >= 1) os << 'x';
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  return RatPolynomial(std::move(c));
}

/// Positive gcd of the coefficients (0 for the zero polynomial).
inline Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

/// Scales a rational polynomial by a positive rational to make it a primitive
/// integer polynomial. Sign is preserved.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, denominator(c));
  std::vector<Integer> ints;
  ints.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) ints.push_back(numerator(c) * (den / denominator(c)));
  Integer g = 0;
  for (const auto& c : ints) g = gcd(g, c);
  for (auto& c : ints) c /= g;
  return IntPolynomial(std::move(ints));
}

/// Monic gcd over the rationals.
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.leading();
  return (Rational(1) / lead) * a;
}

/// p with repeated factors removed, as a primitive integer polynomial with
/// the sign of p's leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, rp.derivative());
  IntPolynomial sqf = primitive_part(rp.divmod(g).first);
  if ((sqf.leading() < 0) != (p.leading() < 0)) sqf = -sqf;
  return sqf;
}

inline bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() <= 0) return true;
  RatPolynomial rp = to_rational(p);
  return gcd(rp, rp.derivative()).degree() == 0;
}

/// Evaluates p at a square matrix by Horner's rule.
inline IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& a) {
  if (!a.is_square()) throw PreconditionError("polynomial evaluation needs a square matrix");
  IntMatrix acc = IntMatrix::zero(a.rows(), a.cols());
  const IntMatrix id = IntMatrix::identity(a.rows());
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + p[static_cast<std::size_t>(i)] * id;
  return acc;
}

}  // namespace kahler
