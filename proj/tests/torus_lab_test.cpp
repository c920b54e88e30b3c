#include "kahler/exact/smith.hpp"
#include "kahler/torus/lll.hpp"
#include "kahler/torus/ns_search.hpp"
#include "kahler/torus/torus.hpp"
#include "kahler/torus/voisin.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

#include <array>
#include <random>
#include <set>

namespace kahler {
namespace {

const IntPolynomial kQuartic{1, 1, 0, 0, 1};

IntMatrix rows_to_columns(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.front().size(), rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (std::size_t r = 0; r < rows[c].size(); ++r) m(r, c) = rows[c][r];
  }
  return m;
}

// Upper-triangle coordinates of an antisymmetric matrix, as one column.
IntMatrix coordinates_matrix(const std::vector<IntMatrix>& forms) {
  std::vector<IntVector> rows;
  for (const auto& e : forms) {
    IntVector x;
    for (auto [a, b] : antisymmetric_coordinates(e.rows())) x.push_back(e(a, b));
    rows.push_back(std::move(x));
  }
  return rows_to_columns(rows);
}

std::vector<IntVector> all_vectors(std::size_t len, long bound) {
  std::vector<IntVector> out{IntVector{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<IntVector> next;
    for (const auto& v : out) {
      for (long x = -bound; x <= bound; ++x) {
        IntVector w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

TEST(Lll, ReducedBasisProperties) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = testing::random_matrix(rng, 5, 5, 50);
    if (determinant(m) == 0) continue;
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < 5; ++r) {
      IntVector v;
      for (std::size_t c = 0; c < 5; ++c) v.push_back(m(r, c));
      rows.push_back(v);
    }
    const LllResult red = lll_reduce(rows);
    EXPECT_TRUE(same_lattice(rows_to_columns(rows), rows_to_columns(red.basis)));
    const auto gs = testing::gram_schmidt(red.basis);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(red.gs_norm_squared(i), gs.norms[i]);
      for (std::size_t j = 0; j < i; ++j) EXPECT_LE(abs(gs.mu[i][j]), Rational(1, 2));
      if (i > 0) {
        const Rational mu = gs.mu[i][i - 1];
        EXPECT_GE(gs.norms[i], (Rational(99, 100) - mu * mu) * gs.norms[i - 1]);
      }
    }
  }
}

TEST(Lll, FindsShortVector) {
  // Rows (1, 0, 1000a), (0, 1, 1000b): the kernel vector (b, -a, 0) is short.
  const LllResult red = lll_reduce({{1, 0, 3000}, {0, 1, 7000}});
  EXPECT_TRUE(red.basis[0] == (IntVector{7, -3, 0}) || red.basis[0] == (IntVector{-7, 3, 0}));
}

TEST(Lll, RejectsDependentBasis) {
  EXPECT_THROW(lll_reduce({{1, 2}, {2, 4}}), PreconditionError);
  EXPECT_THROW(lll_reduce({{0, 0}, {1, 0}}), PreconditionError);
}

TEST(BuildTorus, GaussianEllipticCurve) {
  auto t = build_torus(IntPolynomial{1, 0, 1}, 128);
  EXPECT_EQ(t.dimension(), 1u);
  EXPECT_EQ(t.rational_rep, (IntMatrix{{0, -1}, {1, 0}}));
  EXPECT_LT((t.period.entries(0, 1).im - Real(1L, 128)).log2_abs(), -100);
  EXPECT_LT(t.analytic_rep[0].re.log2_abs(), -100);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_LT(abs(t.complex_structure(r, c) - Real(t.rational_rep(r, c), 128)).to_double(), 1e-30) << "J = M";
    }
  }
}

TEST(BuildTorus, QuarticResidualsAtDoublePrecision) {
  auto t = build_torus(kQuartic, 256);
  EXPECT_EQ(t.dimension(), 2u);
  EXPECT_EQ(t.rational_rep, companion(kQuartic));
  const TorusResiduals wide = torus_residuals(t, 512);
  EXPECT_LT(wide.holomorphy.to_double(), 1e-30);
  EXPECT_LT(wide.j_square.to_double(), 1e-30);
  EXPECT_LT(wide.j_commute.to_double(), 1e-30);
  EXPECT_LE(wide.holomorphy, torus_tolerance(256));
  for (std::size_t k = 0; k < 2; ++k) EXPECT_GT(t.analytic_rep[k].im.sign(), 0);
  // Each selected eigenvalue is a root per the double-precision oracle.
  for (const auto& l : t.analytic_rep) {
    EXPECT_LT(std::abs(testing::horner(kQuartic, {l.re.to_double(), l.im.to_double()})), 1e-12);
  }
}

TEST(BuildTorus, ConjugateSelectionOnSecondPair) {
  auto t = build_torus(kQuartic, 256, std::vector<std::size_t>{0, 3});
  EXPECT_LT(t.analytic_rep[1].im.sign(), 0);
  const TorusResiduals wide = torus_residuals(t, 512);
  EXPECT_LT(wide.holomorphy.to_double(), 1e-30);
  EXPECT_LT(wide.j_square.to_double(), 1e-30);
  EXPECT_LT(wide.j_commute.to_double(), 1e-30);
}

TEST(BuildTorus, Errors) {
  EXPECT_THROW(build_torus(IntPolynomial{-1, 0, 0, 0, 1}), PreconditionError);
  EXPECT_THROW(build_torus(IntPolynomial{1, 1, 1, 1}), PreconditionError);
  EXPECT_THROW(build_torus(kQuartic, 256, std::vector<std::size_t>{0, 1}), PreconditionError);
  EXPECT_THROW(build_torus(kQuartic, 256, std::vector<std::size_t>{0}), PreconditionError);
  EXPECT_THROW(build_torus(kQuartic, 256, std::vector<std::size_t>{0, 9}), PreconditionError);
}

TEST(BuildTorus, GaussianSquare) {
  auto t = gaussian_square_torus(256);
  const TorusResiduals r = torus_residuals(t, 512);
  EXPECT_LT(r.holomorphy.to_double(), 1e-60);
  EXPECT_LT(r.j_square.to_double(), 1e-60);
  EXPECT_LT(r.j_commute.to_double(), 1e-60);
}

// For the Gaussian square, J = diag(R, R) exactly, and E is of type (1,1)
// iff J^T E J = E.
bool gaussian_type_11(const IntMatrix& e) {
  const IntMatrix j{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  return j.transpose() * e * j == e;
}

TEST(NsSearch, GaussianSquareRankFour) {
  auto t = gaussian_square_torus(256);
  const NsSearchReport rep = ns_integral_search(t, 2, 256);
  EXPECT_STREQ(rep.verdict(), "forms-found");
  ASSERT_GE(rep.forms_found.size(), 4u);
  for (const auto& e : rep.forms_found) {
    EXPECT_EQ(e.transpose(), Integer(-1) * e);
    EXPECT_LE(form_height(e), 2);
    EXPECT_TRUE(gaussian_type_11(e)) << e;
  }
  EXPECT_EQ(rank(coordinates_matrix(rep.forms_found)), 4u);

  // Oracle: enumerate every antisymmetric form with entries in {-2..2}.
  std::vector<IntMatrix> oracle;
  for (const auto& x : all_vectors(6, 2)) {
    IntMatrix e = antisymmetric_from_coordinates(4, x);
    if (!e.is_zero() && gaussian_type_11(e)) oracle.push_back(e);
  }
  EXPECT_EQ(rank(coordinates_matrix(oracle)), 4u);
  // The numerical test agrees with the exact one on every form of the box.
  for (const auto& x : all_vectors(6, 1)) {
    IntMatrix e = antisymmetric_from_coordinates(4, x);
    if (e.is_zero()) continue;
    EXPECT_EQ(two_zero_residual(t, e) <= torus_tolerance(256), gaussian_type_11(e)) << e;
  }
}

TEST(NsSearch, QuarticNoForm) {
  auto t = build_torus(kQuartic, 256);
  const NsSearchReport rep = ns_integral_search(t, 10000, 256);
  EXPECT_STREQ(rep.verdict(), "no-form-found");
  EXPECT_GE(rep.certified_height, 10000);
  EXPECT_EQ(rep.height_covered, 10000);

  // Oracle: double-precision holomorphic frame as the kernel of conj(Pi),
  // then every form of height <= 3 checked for E(v1, v2) = 0.
  auto roots = testing::durand_kerner(kQuartic);
  std::vector<std::complex<double>> upper;
  for (auto z : roots) {
    if (z.imag() > 0) upper.push_back(z);
  }
  ASSERT_EQ(upper.size(), 2u);
  using C = std::complex<double>;
  // Rows conj(1, l, l^2, l^3); kernel vectors with (x2, x3) = (1, 0) and (0, 1).
  std::array<std::array<C, 4>, 2> rows;
  for (int k = 0; k < 2; ++k) {
    C l = std::conj(upper[k]);
    rows[k] = {C(1), l, l * l, l * l * l};
  }
  std::array<std::array<C, 4>, 2> kernel;
  const C det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  for (int f = 0; f < 2; ++f) {
    const C b0 = -rows[0][2 + f], b1 = -rows[1][2 + f];
    kernel[f] = {(b0 * rows[1][1] - rows[0][1] * b1) / det, (rows[0][0] * b1 - b0 * rows[1][0]) / det, C(f == 0), C(f == 1)};
  }
  double smallest = 1e300;
  for (const auto& x : all_vectors(6, 3)) {
    IntMatrix e = antisymmetric_from_coordinates(4, x);
    if (e.is_zero()) continue;
    C acc = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) acc += kernel[0][a] * static_cast<double>(e(a, b)) * kernel[1][b];
    }
    smallest = std::min(smallest, std::abs(acc));
  }
  EXPECT_GT(smallest, 1e-6);
}

TEST(NsSearch, EllipticCurveHasPrincipalForm) {
  auto t = build_torus(IntPolynomial{1, 0, 1}, 128);
  const NsSearchReport rep = ns_integral_search(t, 1, 128);
  ASSERT_EQ(rep.forms_found.size(), 1u);
  EXPECT_EQ(form_height(rep.forms_found[0]), 1);
  EXPECT_EQ(abs(rep.forms_found[0](0, 1)), 1);
}

TEST(NsSearch, PrecisionDoublingKeepsVerdict) {
  for (Precision bits : {256L, 512L}) {
    auto q = build_torus(kQuartic, bits);
    EXPECT_STREQ(ns_integral_search(q, 100, bits).verdict(), "no-form-found") << bits;
    auto g = gaussian_square_torus(bits);
    EXPECT_EQ(rank(coordinates_matrix(ns_integral_search(g, 2, bits).forms_found)), 4u) << bits;
  }
}

TEST(NsSearch, RejectsBadArguments) {
  auto t = gaussian_square_torus(128);
  EXPECT_THROW(ns_integral_search(t, 0, 128), PreconditionError);
  EXPECT_THROW(ns_integral_search(t, 5, 256), PreconditionError);
}

TEST(Voisin, Quartic) {
  auto v = voisin_check(kQuartic, 500);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->n, 2u);
  EXPECT_EQ(v->real_root_count, 0u);
  EXPECT_EQ(v->galois.n, 4u);
  EXPECT_EQ(v->irreducibility.kind, IrreducibilityCertificate::Kind::SinglePrime);
}

TEST(Voisin, FailuresAndInconclusive) {
  EXPECT_EQ(voisin_check(IntPolynomial{-1, 0, 0, 0, 1}).status, Status::Fails);
  EXPECT_EQ(voisin_check(IntPolynomial{1, 0, 1}).status, Status::Fails);
  EXPECT_EQ(voisin_check(IntPolynomial{1, 1, 0, 1}).status, Status::Fails);
  EXPECT_EQ(voisin_check(IntPolynomial{1, 0, 0, 0, 1}, 1000).status, Status::Inconclusive);
  EXPECT_THROW(voisin_check(IntPolynomial{1, 1, 0, 0, 2}), PreconditionError);
}

TEST(Voisin, JsonCarriesCertificates) {
  Json j = to_json(*voisin_check(kQuartic, 500));
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["poly"], "x^4 + x + 1");
  EXPECT_EQ(j["galois"]["kind"], "Sn");
  EXPECT_EQ(j["irreducibility"]["kind"], "single-prime");
}

TEST(Search, BoundZeroIsEmpty) { EXPECT_TRUE(search_voisin_polynomial(2, 0, 7, 50).empty()); }

TEST(Search, FindsQuarticsAndEachHitIsSound) {
  auto hits = search_voisin_polynomial(2, 3, 1, 2000);
  ASSERT_FALSE(hits.empty());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto& p = hits[i].certificate.poly;
    EXPECT_EQ(p, sample_candidate(2, 3, 1, hits[i].try_index));
    if (i > 0) {
      EXPECT_LT(hits[i - 1].try_index, hits[i].try_index);
    }
    for (auto z : testing::durand_kerner(p)) EXPECT_GT(std::abs(z.imag()), 1e-9) << p.to_string();
    const auto res = testing::quartic_resolvent_cubic(p);
    EXPECT_FALSE(is_perfect_square(testing::cubic_discriminant(res))) << p.to_string();
  }
}

TEST(Search, DeterministicAndScheduleIndependent) {
  auto a = search_voisin_polynomial(2, 3, 11, 600, 500, 1);
  auto b = search_voisin_polynomial(2, 3, 11, 600, 500, 4);
  auto c = search_voisin_polynomial(2, 3, 11, 600, 500, 1);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].try_index, b[i].try_index);
    EXPECT_EQ(to_json(a[i].certificate).dump(), to_json(b[i].certificate).dump());
    EXPECT_EQ(to_json(a[i].certificate).dump(), to_json(c[i].certificate).dump());
  }
}

TEST(Search, SamplerCoversRange) {
  std::set<long> seen;
  for (std::uint64_t t = 0; t < 300; ++t) {
    IntPolynomial p = sample_candidate(2, 2, 5, t);
    EXPECT_EQ(p.degree(), 4);
    for (int i = 0; i < 4; ++i) seen.insert(static_cast<long>(p[static_cast<std::size_t>(i)]));
  }
  EXPECT_EQ(seen, (std::set<long>{-2, -1, 0, 1, 2}));
}

}  // namespace
}  // namespace kahler
