#pragma once

// Dense polynomials over the prime field F_q, q < 2^32, constant term first.

#include "kahler/exact/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace kahler {

using ModPoly = std::vector<std::uint64_t>;

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

/// All primes <= bound, ascending.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q) : q_(q) {}
  std::uint64_t modulus() const { return q_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q_ - b) % q_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % q_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % q_;
    a %= q_;
    while (e) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1u;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, q_ - 2); }

  std::uint64_t reduce(const Integer& z) const {
    Integer r = z % q_;
    if (r < 0) r += q_;
    return static_cast<std::uint64_t>(r);
  }

  static void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

  ModPoly from(const IntPolynomial& p) const {
    ModPoly f(p.coeffs().size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = reduce(p.coeffs()[i]);
    trim(f);
    return f;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q_;
    }
    trim(r);
    return r;
  }

  ModPoly derivative(const ModPoly& f) const {
    if (f.size() <= 1) return {};
    ModPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % q_);
    trim(d);
    return d;
  }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    ModPoly rem = a;
    trim(rem);
    if (degree(rem) < degree(b)) return {{}, rem};
    const std::uint64_t lead_inv = inv(b.back());
    ModPoly quot(rem.size() - b.size() + 1, 0);
    for (int i = degree(rem); i >= degree(b); --i) {
      std::uint64_t c = rem[static_cast<std::size_t>(i)];
      if (!c) continue;
      std::uint64_t qc = mul(c, lead_inv);
      const auto shift = static_cast<std::size_t>(i - degree(b));
      quot[shift] = qc;
      for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = sub(rem[shift + j], mul(qc, b[j]));
    }
    trim(rem);
    trim(quot);
    return {quot, rem};
  }

  ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

  ModPoly monic(ModPoly f) const {
    if (f.empty()) return f;
    const std::uint64_t li = inv(f.back());
    for (auto& c : f) c = mul(c, li);
    return f;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// base^e mod f.
  ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& f) const {
    ModPoly result = mod(ModPoly{1}, f);
    base = mod(base, f);
    while (e) {
      if (e & 1u) result = mod(mul(result, base), f);
      e >>= 1u;
      if (e) base = mod(mul(base, base), f);
    }
    return result;
  }

 private:
  std::uint64_t q_;
};

}  // namespace kahler
