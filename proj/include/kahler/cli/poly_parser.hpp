#pragma once

// Recursive-descent parser for integer polynomials in x:
//   expr   := term (('+' | '-') term)*
//   term   := ('+' | '-')* power (('*')? power)*
//   power  := atom ('^' integer)?
//   atom   := integer | 'x' | '(' expr ')'
// Juxtaposition multiplies, so "2x^3" and "3(x+1)" are accepted.

#include "kahler/exact/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kahler {

class PolynomialParseError : public std::invalid_argument {
 public:
  PolynomialParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  IntPolynomial parse() {
    IntPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  static constexpr long kMaxExponent = 100000;

  [[noreturn]] void fail(const std::string& what) const { throw PolynomialParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  // U+2212 minus sign, as three UTF-8 bytes.
  bool unicode_minus() {
    skip();
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  IntPolynomial expr() {
    IntPolynomial acc = term();
    for (;;) {
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else if (unicode_minus()) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  IntPolynomial term() {
    bool negative = false;
    for (;;) {
      if (peek() == '+') {
        ++pos_;
      } else if (peek() == '-') {
        ++pos_;
        negative = !negative;
      } else if (unicode_minus()) {
        negative = !negative;
      } else {
        break;
      }
    }
    IntPolynomial acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == 'x' || c == 'X' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return negative ? IntPolynomial{-1} * acc : acc;
  }

  IntPolynomial power() {
    IntPolynomial base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6 || std::stol(digits) > kMaxExponent) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stol(digits)));
  }

  IntPolynomial atom() {
    const char c = peek();
    if (c == 'x' || c == 'X') {
      ++pos_;
      return IntPolynomial{0, 1};
    }
    if (c == '(') {
      ++pos_;
      IntPolynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return IntPolynomial(std::vector<Integer>{Integer(std::string(s_.substr(start, pos_ - start)))});
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline IntPolynomial parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace kahler
