#pragma once

// Sound irreducibility and full-symmetric-group certificates from Frobenius
// cycle types (Dedekind reduction at unramified primes).

#include "kahler/exact/charpoly.hpp"
#include "kahler/exact/json_io.hpp"
#include "kahler/galois/mod_poly.hpp"
#include "kahler/outcome.hpp"

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <optional>
#include <vector>

namespace kahler {

struct CycleType {
  std::uint64_t prime = 0;
  std::vector<unsigned> parts;  // ascending

  unsigned degree() const {
    unsigned s = 0;
    for (unsigned p : parts) s += p;
    return s;
  }
  bool is_single_cycle() const { return parts.size() == 1; }
  /// Parts are exactly {1, n-1}.
  bool is_fixed_point_plus_cycle() const { return parts.size() == 2 && parts[0] == 1 && degree() >= 3; }
  /// Exactly one even part, equal to 2, all others odd: a power of this
  /// Frobenius is a transposition.
  bool yields_transposition() const {
    unsigned evens = 0;
    bool two = false;
    for (unsigned p : parts) {
      if (p % 2 == 0) {
        ++evens;
        two = (p == 2);
      }
    }
    return evens == 1 && two;
  }
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Factor-degree pattern of monic p over F_q, or nullopt when p mod q is not
/// squarefree (q ramified).
inline std::optional<CycleType> cycle_type_mod_p(const IntPolynomial& p, std::uint64_t q) {
  if (!p.is_monic()) throw PreconditionError("cycle_type_mod_p needs a monic polynomial");
  if (q > 0xffffffffULL || !is_prime(q)) throw PreconditionError("cycle_type_mod_p needs a prime modulus below 2^32");
  const PrimeField field(q);
  ModPoly f = field.from(p);
  if (PrimeField::degree(f) <= 0) return CycleType{q, {}};
  if (PrimeField::degree(field.gcd(f, field.derivative(f))) > 0) return std::nullopt;

  CycleType ct{q, {}};
  const ModPoly x{0, 1};
  ModPoly h = field.mod(x, f);
  unsigned d = 0;
  while (PrimeField::degree(f) >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = field.powmod(h, q, f);
    ModPoly g = field.gcd(f, field.sub(h, x));
    const int dg = PrimeField::degree(g);
    if (dg > 0) {
      for (int k = 0; k < dg / static_cast<int>(d); ++k) ct.parts.push_back(d);
      f = field.divmod(f, g).first;
      h = field.mod(h, f);
    }
  }
  if (PrimeField::degree(f) > 0) ct.parts.push_back(static_cast<unsigned>(PrimeField::degree(f)));
  std::sort(ct.parts.begin(), ct.parts.end());
  return ct;
}

struct IrreducibilityCertificate {
  enum class Kind { DegreeOne, SinglePrime, DegreeSieve };
  Kind kind = Kind::DegreeOne;
  std::vector<CycleType> witnesses;
};

inline const char* to_string(IrreducibilityCertificate::Kind k) {
  switch (k) {
    case IrreducibilityCertificate::Kind::DegreeOne: return "degree-one";
    case IrreducibilityCertificate::Kind::SinglePrime: return "single-prime";
    case IrreducibilityCertificate::Kind::DegreeSieve: return "degree-sieve";
  }
  return "unknown";
}

namespace detail {

constexpr std::size_t kMaxSieveDegree = 255;
using DegreeSet = std::bitset<kMaxSieveDegree + 1>;

inline DegreeSet subset_sums(const CycleType& ct) {
  DegreeSet s;
  s.set(0);
  for (unsigned part : ct.parts) s |= (s << part);
  return s;
}

}  // namespace detail

/// Scans primes q <= prime_bound ascending. A returned certificate is a proof
/// of irreducibility over Q; inconclusive never claims reducibility.
inline Verdict<IrreducibilityCertificate> certify_irreducible(const IntPolynomial& p, std::uint64_t prime_bound) {
  if (!p.is_monic() || p.degree() < 1) throw PreconditionError("certify_irreducible needs a monic polynomial of degree >= 1");
  using Kind = IrreducibilityCertificate::Kind;
  const auto n = static_cast<unsigned>(p.degree());
  if (n == 1) return Verdict<IrreducibilityCertificate>::certified({Kind::DegreeOne, {}});
  if (n > detail::kMaxSieveDegree) throw PreconditionError("degree too large for the degree sieve");

  detail::DegreeSet achievable;
  for (unsigned k = 0; k <= n; ++k) achievable.set(k);
  detail::DegreeSet trivial;
  trivial.set(0);
  trivial.set(n);
  std::vector<CycleType> sieve_witnesses;

  for (std::uint64_t q : primes_up_to(prime_bound)) {
    auto ct = cycle_type_mod_p(p, q);
    if (!ct) continue;
    if (ct->is_single_cycle()) return Verdict<IrreducibilityCertificate>::certified({Kind::SinglePrime, {*ct}});
    detail::DegreeSet next = achievable & detail::subset_sums(*ct);
    if (next != achievable) {
      achievable = next;
      sieve_witnesses.push_back(*ct);
      if (achievable == trivial) {
        return Verdict<IrreducibilityCertificate>::certified({Kind::DegreeSieve, std::move(sieve_witnesses)});
      }
    }
  }
  return Verdict<IrreducibilityCertificate>::inconclusive("no irreducibility certificate among primes <= " + std::to_string(prime_bound));
}

/// Witnesses that Gal(p) = S_n. For n >= 4: an n-cycle (transitive), a
/// (1, n-1) pattern (doubly transitive, hence primitive) and a pattern whose
/// power is a transposition (Jordan). Degree <= 3 uses degenerate rules.
struct SnCertificate {
  unsigned n = 0;
  std::optional<CycleType> n_cycle;
  std::optional<CycleType> n_minus_1;
  std::optional<CycleType> transposition;
  std::optional<Integer> discriminant;  // degree 3 only
  IrreducibilityCertificate irreducibility;
};

inline Verdict<SnCertificate> certify_symmetric_group(const IntPolynomial& p, std::uint64_t prime_bound) {
  if (!p.is_monic() || p.degree() < 1) throw PreconditionError("certify_symmetric_group needs a monic polynomial of degree >= 1");
  using Kind = IrreducibilityCertificate::Kind;
  const auto n = static_cast<unsigned>(p.degree());
  SnCertificate cert;
  cert.n = n;

  if (n == 1) {
    cert.irreducibility = {Kind::DegreeOne, {}};
    return Verdict<SnCertificate>::certified(std::move(cert));
  }
  if (n == 3) {
    auto irr = certify_irreducible(p, prime_bound);
    if (!irr) return Verdict<SnCertificate>::inconclusive(irr.reason);
    Integer disc = discriminant(p);
    if (is_perfect_square(disc)) return Verdict<SnCertificate>::inconclusive("cubic discriminant is a square");
    cert.irreducibility = *irr;
    if (irr->kind == Kind::SinglePrime) cert.n_cycle = irr->witnesses.front();
    cert.discriminant = disc;
    return Verdict<SnCertificate>::certified(std::move(cert));
  }

  for (std::uint64_t q : primes_up_to(prime_bound)) {
    auto ct = cycle_type_mod_p(p, q);
    if (!ct) continue;
    if (!cert.n_cycle && ct->is_single_cycle()) cert.n_cycle = *ct;
    if (n >= 4 && !cert.n_minus_1 && ct->is_fixed_point_plus_cycle()) cert.n_minus_1 = *ct;
    if (!cert.transposition && ct->yields_transposition()) cert.transposition = *ct;
    const bool done = n == 2 ? cert.n_cycle.has_value()
                             : (cert.n_cycle && cert.n_minus_1 && cert.transposition);
    if (done) {
      if (n == 2) cert.transposition = cert.n_cycle;
      cert.irreducibility = {Kind::SinglePrime, {*cert.n_cycle}};
      return Verdict<SnCertificate>::certified(std::move(cert));
    }
  }
  return Verdict<SnCertificate>::inconclusive("symmetric-group witnesses incomplete among primes <= " + std::to_string(prime_bound));
}

inline Json to_json(const CycleType& ct) { return Json{{"prime", ct.prime}, {"parts", ct.parts}}; }

inline Json to_json(const IrreducibilityCertificate& c) {
  Json w = Json::array();
  for (const auto& ct : c.witnesses) w.push_back(to_json(ct));
  return Json{{"kind", to_string(c.kind)}, {"witnesses", std::move(w)}};
}

inline Json to_json(const SnCertificate& c) {
  Json w = Json::array();
  auto add = [&w](const std::optional<CycleType>& ct, const char* role) {
    if (!ct) return;
    Json j = to_json(*ct);
    j["role"] = role;
    w.push_back(std::move(j));
  };
  add(c.n_cycle, "n-cycle");
  add(c.n_minus_1, "fixed-point-plus-(n-1)-cycle");
  if (c.n != 2) add(c.transposition, "transposition-power");
  Json j{{"kind", "Sn"}, {"n", c.n}, {"witnesses", std::move(w)}};
  if (c.discriminant) j["discriminant"] = integer_to_json(*c.discriminant);
  return j;
}

}  // namespace kahler
