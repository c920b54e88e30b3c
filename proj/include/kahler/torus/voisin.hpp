#pragma once

// Certificates that a monic polynomial meets the hypotheses making its torus
// non-algebraic: irreducible, no real roots, Galois group S_2n.

#include "kahler/galois/certify.hpp"
#include "kahler/roots/sturm.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <vector>

namespace kahler {

struct VoisinCertificate {
  IntPolynomial poly;
  IrreducibilityCertificate irreducibility;
  std::size_t real_root_count = 0;
  SnCertificate galois;
  unsigned n = 0;
};

/// Independent of any eigenvalue selection: only the polynomial is inspected.
inline Verdict<VoisinCertificate> voisin_check(const IntPolynomial& p, std::uint64_t prime_budget = 500) {
  using V = Verdict<VoisinCertificate>;
  if (p.degree() < 1 || !p.is_monic()) throw PreconditionError("voisin_check needs a monic polynomial");
  if (p.degree() % 2 != 0) return V::fails("degree " + std::to_string(p.degree()) + " is odd");
  if (p.degree() < 4) return V::fails("degree " + std::to_string(p.degree()) + " gives a torus of dimension < 2");
  const std::size_t real_roots = count_real_roots(p);
  if (real_roots > 0) return V::fails(std::to_string(real_roots) + " real roots");

  auto irr = certify_irreducible(p, prime_budget);
  if (irr.status == Status::Fails) return V::fails("reducible: " + irr.reason);
  if (!irr) return V::inconclusive("irreducibility: " + irr.reason);
  auto sn = certify_symmetric_group(p, prime_budget);
  if (sn.status == Status::Fails) return V::fails("Galois group: " + sn.reason);
  if (!sn) return V::inconclusive("Galois group: " + sn.reason);
  return V::certified({p, *irr, 0, *sn, static_cast<unsigned>(p.degree() / 2)});
}

inline Json to_json(const VoisinCertificate& c) {
  return Json{{"poly", c.poly.to_string()},
              {"coeffs", to_json(c.poly)["coeffs"]},
              {"n", c.n},
              {"realRootCount", c.real_root_count},
              {"irreducibility", to_json(c.irreducibility)},
              {"galois", to_json(c.galois)}};
}

namespace detail {

// Uniform integer in [-bound, bound] by rejection on raw 64-bit draws, so the
// stream is identical across standard library implementations.
inline long uniform_symmetric(std::mt19937_64& rng, unsigned long bound) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<long>(draw % range) - static_cast<long>(bound);
}

}  // namespace detail

/// The candidate examined at `try_index`: monic of degree 2n, lower coefficients
/// uniform in [-coeff_bound, coeff_bound], from a generator seeded by (seed, try_index).
inline IntPolynomial sample_candidate(unsigned n, unsigned long coeff_bound, std::uint64_t seed, std::uint64_t try_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(try_index), static_cast<std::uint32_t>(try_index >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Integer> coeffs(2 * n + 1);
  for (unsigned i = 0; i < 2 * n; ++i) coeffs[i] = detail::uniform_symmetric(rng, coeff_bound);
  coeffs[2 * n] = 1;
  return IntPolynomial(std::move(coeffs));
}

struct SearchHit {
  std::uint64_t try_index = 0;
  VoisinCertificate certificate;
};

/// Certified hits in try-index order, each polynomial reported once at its first
/// occurrence. `jobs` worker threads share the tries; the output does not depend on it.
inline std::vector<SearchHit> search_voisin_polynomial(unsigned n, unsigned long coeff_bound, std::uint64_t seed,
                                                       std::uint64_t max_tries, std::uint64_t prime_budget = 500,
                                                       unsigned jobs = 1) {
  if (n < 2) throw PreconditionError("search_voisin_polynomial needs dimension n >= 2");
  std::vector<std::optional<VoisinCertificate>> slots(max_tries);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < max_tries; t = next++) {
      auto v = voisin_check(sample_candidate(n, coeff_bound, seed, t), prime_budget);
      if (v) slots[t] = *v;
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<SearchHit> hits;
  std::set<std::vector<Integer>> seen;
  for (std::uint64_t t = 0; t < max_tries; ++t) {
    if (!slots[t] || !seen.insert(slots[t]->poly.coeffs()).second) continue;
    hits.push_back({t, std::move(*slots[t])});
  }
  return hits;
}

}  // namespace kahler
