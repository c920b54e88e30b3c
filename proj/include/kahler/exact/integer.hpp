#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace kahler {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Thrown when an input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument on junk.
inline Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

/// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nearest integer to a/b, ties rounded toward +infinity. b must be positive.
inline Integer round_div(const Integer& a, const Integer& b) {
  return floor_div(2 * a + b, 2 * b);
}

/// Exact integer square root test.
inline bool is_perfect_square(const Integer& z) {
  if (z < 0) return false;
  Integer r = boost::multiprecision::sqrt(z);
  return r * r == z;
}

}  // namespace kahler
