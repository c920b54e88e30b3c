#pragma once

// One report bundling every computable ingredient of the non-projective
// Kahler morphism built from a polynomial: the certificate that the torus is
// not an abelian variety, mu and its trivial projection to S_3, the Albanese
// transport recovering M, and the Neron-Severi search evidence.

#include "kahler/construct/albanese.hpp"
#include "kahler/construct/semidirect.hpp"
#include "kahler/torus/ns_search.hpp"
#include "kahler/torus/voisin.hpp"

#include <random>
#include <string>

namespace kahler {

struct CounterexampleOptions {
  std::uint64_t prime_budget = 500;
  Precision precision_bits = 256;
  Integer height = 10000;
  std::uint64_t seed = 1;
  int law_samples = 32;
};

struct CounterexampleReport {
  Status status = Status::Inconclusive;
  std::string failed_stage;  // empty when complete
  Json json;

  bool complete() const { return failed_stage.empty(); }
};

/// Checks mu(a + a', b + b') = mu(a, b) mu(a', b') on seeded random samples.
inline bool mu_is_homomorphism(const MuMap& mu, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const std::size_t len = mu.block_len();
  auto draw = [&] {
    Block v(len);
    for (auto& x : v) x = detail::uniform_symmetric(rng, 100);
    return v;
  };
  for (int s = 0; s < samples; ++s) {
    const Block a = draw(), b = draw(), a2 = draw(), b2 = draw();
    Block sa(len), sb(len);
    for (std::size_t k = 0; k < len; ++k) {
      sa[k] = a[k] + a2[k];
      sb[k] = b[k] + b2[k];
    }
    if (!(mu(sa, sb) == semidirect_mul(mu(a, b), mu(a2, b2)))) return false;
  }
  return true;
}

inline Json to_json(const SemidirectElement& x) {
  Json t = Json::array();
  for (const auto& b : x.translation) t.push_back(integers_to_json(b));
  return Json{{"translation", std::move(t)}, {"twist", x.twist.name()}};
}

inline CounterexampleReport assemble_counterexample(const IntPolynomial& p, const CounterexampleOptions& opt = {}) {
  CounterexampleReport rep;
  Json& j = rep.json;
  j["poly"] = p.to_string();

  const auto voisin = voisin_check(p, opt.prime_budget);
  if (!voisin) {
    rep.status = voisin.status;
    rep.failed_stage = "voisin";
    j["voisin"] = Json{{"status", to_string(voisin.status)}, {"reason", voisin.reason}};
    j["failedStage"] = rep.failed_stage;
    j["complete"] = false;
    return rep;
  }
  j["voisin"] = Json{{"status", "certified"}, {"certificate", to_json(*voisin)}};

  const TorusWithEndomorphism torus = build_torus(p, opt.precision_bits);
  j["torus"] = Json{{"n", torus.dimension()},
                    {"precisionBits", opt.precision_bits},
                    {"holomorphyResidual", torus.holomorphy_residual.to_string(6)},
                    {"jSquareResidual", torus.j_square_residual.to_string(6)},
                    {"jCommuteResidual", torus.j_commute_residual.to_string(6)},
                    {"rationalRep", to_json(torus.rational_rep)}};

  const MuMap mu = build_mu(torus.rational_rep);
  const bool law = mu_is_homomorphism(mu, opt.seed, opt.law_samples);
  Json gens = Json::array();
  for (const auto& g : mu.generator_images()) gens.push_back(to_json(g));
  j["mu"] = Json{{"domainRank", mu.domain_rank()},
                 {"translationMatrix", to_json(mu.translation_matrix())},
                 {"generatorImages", std::move(gens)},
                 {"homomorphismSamples", opt.law_samples},
                 {"homomorphism", law}};

  const bool trivial = check_projection_trivial(mu);
  j["projection_trivial"] = trivial;

  const AlbaneseTransport alb = albanese_transport(mu.m());
  j["albanese_transport"] = alb.recovered ? "recovered" : "mismatch";
  j["albanese"] = Json{{"composite", to_json(alb.composite)}, {"gammaBar1PlusGammaBar2", alb.direct_sum ? "direct" : "not direct"}};

  const NsSearchReport ns = ns_integral_search(torus, opt.height, opt.precision_bits);
  j["ns_search"] = to_json(ns);

  if (!law || !trivial || !alb.recovered || !alb.direct_sum) {
    rep.status = Status::Fails;
    rep.failed_stage = !law ? "mu" : !trivial ? "projection_trivial" : "albanese_transport";
  } else {
    rep.status = Status::Certified;
  }
  j["complete"] = rep.complete();
  if (!rep.complete()) j["failedStage"] = rep.failed_stage;
  j["declaration"] = "mu_* is Kahler by construction; not projective, by the torus certificate";
  j["assumedInputs"] = Json{{"W", "compact Kahler manifold with fundamental group S_3, existence only"},
                          {"torsion", "symbolic"}};
  return rep;
}

}  // namespace kahler
