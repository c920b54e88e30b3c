#pragma once

// Realization of an even-rank homomorphism f: Z^2r -> Z^2s as the map on H_1
// of a torus morphism X -> Y factored as projection, finite cover, embedding.
// With U f V = D = diag(a_1, ..., a_2l, 0, ...):
//   X = C^r / ((a_1 Z + a_2 iZ) + ... + (a_{2l-1} Z + a_2l iZ) + (Z + iZ)^(r-l)),
//   Y = C^s / (Z + iZ)^s,
// and generator 2t (resp. 2t+1) of a lattice is the real (resp. imaginary)
// direction of coordinate t.

#include "kahler/exact/charpoly.hpp"
#include "kahler/hom/abelian_hom.hpp"

#include <string>
#include <vector>

namespace kahler {

struct GaussianInt {
  Integer re = 0;
  Integer im = 0;
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

using GaussianVector = std::vector<GaussianInt>;

struct RealizationStep {
  enum class Kind { Projection, Cover, Embedding };
  Kind kind = Kind::Projection;
  std::size_t from_dim = 0;
  std::size_t to_dim = 0;
  /// Projection: target coordinate j reads source coordinate coordinates[j].
  /// Embedding: source coordinate j lands in target coordinate coordinates[j].
  /// Cover: identity on C^from_dim.
  std::vector<std::size_t> coordinates;
  std::vector<GaussianVector> source_lattice;
  std::vector<GaussianVector> target_lattice;
  Integer degree = 1;

  GaussianVector apply(const GaussianVector& z) const {
    GaussianVector out(to_dim);
    switch (kind) {
      case Kind::Projection:
        for (std::size_t j = 0; j < to_dim; ++j) out[j] = z[coordinates[j]];
        break;
      case Kind::Cover:
        out = z;
        break;
      case Kind::Embedding:
        for (std::size_t j = 0; j < from_dim; ++j) out[coordinates[j]] = z[j];
        break;
    }
    return out;
  }
};

inline const char* to_string(RealizationStep::Kind k) {
  switch (k) {
    case RealizationStep::Kind::Projection: return "projection";
    case RealizationStep::Kind::Cover: return "cover";
    case RealizationStep::Kind::Embedding: return "embedding";
  }
  return "unknown";
}

struct RealizationPlan {
  std::size_t r = 0, s = 0, l = 0;
  std::vector<GaussianVector> source_lattice;
  std::vector<RealizationStep> steps;
  IntMatrix induced_matrix;  // D
  IntMatrix u, v, u_inv, v_inv;  // free matrix = u_inv * D * v_inv
};

namespace detail {

inline std::vector<Integer> real_coordinates(const GaussianVector& z) {
  std::vector<Integer> x;
  for (const auto& c : z) {
    x.push_back(c.re);
    x.push_back(c.im);
  }
  return x;
}

// Generators as columns of a real (2 dim) x (count) matrix; nullopt in dimension 0.
inline std::optional<IntMatrix> lattice_matrix(const std::vector<GaussianVector>& gens, std::size_t dim) {
  if (dim == 0 || gens.empty()) return std::nullopt;
  IntMatrix m(2 * dim, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    const auto x = real_coordinates(gens[c]);
    for (std::size_t r = 0; r < x.size(); ++r) m(r, c) = x[r];
  }
  return m;
}

inline std::vector<GaussianVector> standard_lattice(std::size_t dim) {
  std::vector<GaussianVector> gens;
  for (std::size_t t = 0; t < dim; ++t) {
    GaussianVector a(dim), b(dim);
    a[t].re = 1;
    b[t].im = 1;
    gens.push_back(std::move(a));
    gens.push_back(std::move(b));
  }
  return gens;
}

// Coordinates of z in the lattice basis `gens`, or nullopt if z is not in it.
inline std::optional<std::vector<Integer>> lattice_coordinates(const std::vector<GaussianVector>& gens, std::size_t dim,
                                                               const GaussianVector& z) {
  const auto m = lattice_matrix(gens, dim);
  if (!m) return std::vector<Integer>{};
  return solve_integer(*m, real_coordinates(z));
}

// Index of `sub` in `lattice`, both full rank in C^dim.
inline Integer lattice_index(const std::vector<GaussianVector>& lattice, const std::vector<GaussianVector>& sub, std::size_t dim) {
  if (dim == 0) return 1;
  return abs(determinant(*lattice_matrix(sub, dim))) / abs(determinant(*lattice_matrix(lattice, dim)));
}

}  // namespace detail

/// Builds the three-step plan for an even-rank free homomorphism.
inline RealizationPlan realize_free_hom(const AbelianHom& f) {
  if (!f.source().is_free() || !f.target().is_free()) throw PreconditionError("realize_free_hom needs torsion-free groups");
  const RankParity parity = check_even_rank(f);
  if (!parity.even()) {
    throw ObstructionError("image rank " + std::to_string(parity.rank_im) + " is odd; no torus morphism induces f");
  }
  const IntMatrix m = *f.free_matrix();
  const SNFDecomposition snf_f = snf(m);
  if (!(snf_f.u * m * snf_f.v == snf_f.d)) throw std::logic_error("Smith decomposition failed to verify");
  const std::size_t k = snf_f.rank();
  if (k % 2 != 0) throw std::logic_error("odd count of nonzero invariants on an even-rank map");

  RealizationPlan plan;
  plan.r = f.source().free_rank / 2;
  plan.s = f.target().free_rank / 2;
  plan.l = k / 2;
  plan.induced_matrix = snf_f.d;
  plan.u = snf_f.u;
  plan.v = snf_f.v;
  plan.u_inv = inverse_unimodular(snf_f.u);
  plan.v_inv = inverse_unimodular(snf_f.v);

  const auto a = [&](std::size_t i) { return snf_f.d(i, i); };
  for (std::size_t t = 0; t < plan.r; ++t) {
    GaussianVector x(plan.r), y(plan.r);
    x[t].re = t < plan.l ? a(2 * t) : Integer(1);
    y[t].im = t < plan.l ? a(2 * t + 1) : Integer(1);
    plan.source_lattice.push_back(std::move(x));
    plan.source_lattice.push_back(std::move(y));
  }

  using Kind = RealizationStep::Kind;
  RealizationStep proj{Kind::Projection, plan.r, plan.l, {}, plan.source_lattice, {}, 1};
  for (std::size_t j = 0; j < plan.l; ++j) proj.coordinates.push_back(j);
  for (std::size_t t = 0; t < plan.l; ++t) {
    proj.target_lattice.push_back(proj.apply(plan.source_lattice[2 * t]));
    proj.target_lattice.push_back(proj.apply(plan.source_lattice[2 * t + 1]));
  }

  RealizationStep cover{Kind::Cover, plan.l, plan.l, {}, proj.target_lattice, detail::standard_lattice(plan.l), 1};
  for (std::size_t i = 0; i < k; ++i) cover.degree *= abs(a(i));

  RealizationStep embed{Kind::Embedding, plan.l, plan.s, proj.coordinates, cover.target_lattice, detail::standard_lattice(plan.s), 1};

  plan.steps = {std::move(proj), std::move(cover), std::move(embed)};
  return plan;
}

/// Pushes every source-lattice generator through the steps, checks each
/// intermediate image lies in the claimed lattice, checks the cover degree
/// against the lattice index, and compares the induced matrix with D.
inline bool verify_plan(const RealizationPlan& plan, const AbelianHom& f) {
  if (plan.steps.size() != 3) throw PreconditionError("plan must have three steps");
  const auto m = f.free_matrix();
  if (!m || !(plan.u * *m * plan.v == plan.induced_matrix)) return false;
  if (!(plan.u * plan.u_inv == IntMatrix::identity(plan.u.rows()))) return false;
  if (!(plan.v * plan.v_inv == IntMatrix::identity(plan.v.rows()))) return false;

  for (const auto& step : plan.steps) {
    if (step.kind == RealizationStep::Kind::Cover &&
        detail::lattice_index(step.target_lattice, step.source_lattice, step.from_dim) != step.degree) {
      return false;
    }
  }

  IntMatrix induced = IntMatrix::zero(2 * plan.s, 2 * plan.r);
  for (std::size_t g = 0; g < plan.source_lattice.size(); ++g) {
    GaussianVector z = plan.source_lattice[g];
    for (const auto& step : plan.steps) {
      if (!detail::lattice_coordinates(step.source_lattice, step.from_dim, z)) {
        throw PreconditionError("malformed plan: image outside the step's source lattice");
      }
      z = step.apply(z);
      if (!detail::lattice_coordinates(step.target_lattice, step.to_dim, z)) return false;
    }
    const auto coords = *detail::lattice_coordinates(plan.steps.back().target_lattice, plan.s, z);
    for (std::size_t i = 0; i < coords.size(); ++i) induced(i, g) = coords[i];
  }
  return induced == plan.induced_matrix;
}

inline Json to_json(const GaussianVector& z) {
  Json out = Json::array();
  for (const auto& c : z) out.push_back(Json{{"re", to_string(c.re)}, {"im", to_string(c.im)}});
  return out;
}

inline Json lattice_to_json(const std::vector<GaussianVector>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(to_json(g));
  return out;
}

inline Json to_json(const RealizationPlan& plan) {
  Json steps = Json::array();
  for (const auto& st : plan.steps) {
    steps.push_back(Json{{"kind", to_string(st.kind)},
                         {"from", st.from_dim},
                         {"to", st.to_dim},
                         {"degree", to_string(st.degree)},
                         {"sourceLattice", lattice_to_json(st.source_lattice)},
                         {"targetLattice", lattice_to_json(st.target_lattice)}});
  }
  return Json{{"r", plan.r},
              {"s", plan.s},
              {"l", plan.l},
              {"sourceLattice", lattice_to_json(plan.source_lattice)},
              {"steps", std::move(steps)},
              {"inducedMatrix", to_json(plan.induced_matrix)},
              {"U", to_json(plan.u)},
              {"V", to_json(plan.v)},
              {"Uinv", to_json(plan.u_inv)},
              {"Vinv", to_json(plan.v_inv)}};
}

}  // namespace kahler
