#pragma once

#include "kahler/exact/polynomial.hpp"

#include <vector>

namespace kahler {

/// p0 = p, p1 = p', p(i+1) = -rem(p(i-1), p(i)), each rescaled by a positive
/// rational to a primitive integer polynomial (signs are what matter).
struct SturmChain {
  std::vector<IntPolynomial> polynomials;
};

inline SturmChain sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("Sturm chain of the zero polynomial");
  SturmChain chain;
  chain.polynomials.push_back(p);
  if (p.degree() == 0) return chain;
  chain.polynomials.push_back(primitive_part(to_rational(p.derivative())));
  for (;;) {
    const auto& prev = chain.polynomials[chain.polynomials.size() - 2];
    const auto& cur = chain.polynomials.back();
    RatPolynomial rem = to_rational(prev).divmod(to_rational(cur)).second;
    if (rem.is_zero()) break;
    chain.polynomials.push_back(primitive_part(-rem));
  }
  return chain;
}

namespace detail {

inline int sign_at_infinity(const IntPolynomial& q, bool positive) {
  int s = q.leading() > 0 ? 1 : -1;
  if (!positive && q.degree() % 2 == 1) s = -s;
  return s;
}

inline int sign_variations(const SturmChain& chain, bool positive) {
  int variations = 0, last = 0;
  for (const auto& q : chain.polynomials) {
    int s = sign_at_infinity(q, positive);
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace detail

/// Number of distinct real roots, exact.
inline std::size_t count_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("count_real_roots of the zero polynomial");
  IntPolynomial sqf = squarefree_part(p);
  if (sqf.degree() <= 0) return 0;
  SturmChain chain = sturm_chain(sqf);
  return static_cast<std::size_t>(detail::sign_variations(chain, false) - detail::sign_variations(chain, true));
}

}  // namespace kahler
