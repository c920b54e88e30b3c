// Acceptance run: one PASS/FAIL line per criterion with its runtime limit.
// Every check compares library output against an oracle computed here.

#include "kahler/cli/app.hpp"
#include "kahler/construct/albanese.hpp"
#include "kahler/construct/semidirect.hpp"
#include "kahler/exact/charpoly.hpp"
#include "kahler/galois/certify.hpp"
#include "kahler/hom/realize.hpp"
#include "kahler/roots/sturm.hpp"
#include "kahler/torus/ns_search.hpp"
#include "kahler/torus/torus.hpp"
#include "oracles.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace {

using namespace kahler;

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// ---------------------------------------------------------------------------
// 1. SNF

// All 2x2 unimodular matrices with entries in [-3, 3].
std::vector<IntMatrix> small_unimodular() {
  std::vector<IntMatrix> out;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d)
          if (a * d - b * c == 1 || a * d - b * c == -1) out.push_back(IntMatrix{{a, b}, {c, d}});
  return out;
}

Check snf_suite() {
  Check c;
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const IntMatrix a = testing::random_matrix(rng, rows, cols, 50);
    const SNFDecomposition s = snf(a);
    c.expect(s.u * a * s.v == s.d, "U A V != D");
    c.expect(abs(testing::laplace_determinant(s.u)) == 1 && abs(testing::laplace_determinant(s.v)) == 1, "U or V not unimodular");
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < cols; ++k)
        if (r != k) c.expect(s.d(r, k) == 0, "D not diagonal");
    const std::size_t m = std::min(rows, cols);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      c.expect(s.d(i, i) >= 0, "negative invariant");
      if (s.d(i, i) != 0) c.expect(s.d(i + 1, i + 1) % s.d(i, i) == 0, "divisibility chain");
      else c.expect(s.d(i + 1, i + 1) == 0, "zero before nonzero");
    }
    if (trial < 100) {
      const auto inv = testing::smith_invariants_by_minors(a);
      for (std::size_t i = 0; i < m; ++i) c.expect(s.d(i, i) == inv[i], "invariants differ from determinantal divisors");
    }
  }
  // Every diagonal form with d1 | d2, d1 >= 0, reachable by small unimodular row and column operations.
  const IntMatrix a{{4, 6}, {2, 2}};
  const auto uni = small_unimodular();
  std::set<std::pair<Integer, Integer>> reachable;
  for (const auto& u : uni) {
    const IntMatrix ua = u * a;
    for (const auto& v : uni) {
      const IntMatrix d = ua * v;
      if (d(0, 1) == 0 && d(1, 0) == 0 && d(0, 0) > 0 && d(1, 1) >= 0 && d(1, 1) % d(0, 0) == 0) {
        reachable.insert({d(0, 0), d(1, 1)});
      }
    }
  }
  c.expect(reachable == std::set<std::pair<Integer, Integer>>{{2, 2}}, "brute force does not single out diag(2,2)");
  c.expect(snf(a).d == (IntMatrix{{2, 0}, {0, 2}}), "[[4,6],[2,2]] does not give diag(2,2)");
  return c;
}

// ---------------------------------------------------------------------------
// 2. Cayley-Hamilton

Check cayley_hamilton() {
  Check c;
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const IntMatrix a = testing::random_matrix(rng, n, n, 9);
    const IntPolynomial p = charpoly(a);
    c.expect(p.degree() == static_cast<int>(n) && p.is_monic(), "charpoly not monic of degree n");
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    c.expect(p[n - 1] == -trace, "x^(n-1) coefficient is not -trace");
    if (n <= 6) c.expect(p[0] == ((n % 2 == 0) ? 1 : -1) * testing::laplace_determinant(a), "constant term is not +-det");
    IntMatrix acc = IntMatrix::zero(n, n);
    for (int k = p.degree(); k >= 0; --k) {
      acc = acc * a;
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += p[static_cast<std::size_t>(k)];
    }
    c.expect(acc.is_zero(), "p(A) != 0");
  }
  return c;
}

// ---------------------------------------------------------------------------
// 3. Sturm against an MPFR Durand-Kerner root classifier

using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<90>, boost::multiprecision::et_off>;

struct Cx {
  Float re, im;
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx operator/(const Cx& o) const {
    const Float d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Float abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

// Number of real roots, or -1 when the iteration did not settle.
int numeric_real_roots(const IntPolynomial& p) {
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<Float> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = Float(p[k].str()) / Float(p[n].str());
  Float radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, boost::multiprecision::abs(c[k]));
  radius += 1;
  std::vector<Cx> z(n);
  Cx seed{Float(0.4), Float(0.9)}, w{Float(1), Float(0)};
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = {w.re * radius, w.im * radius};
    w = w * seed;
  }
  const Float tol("1e-80");
  bool settled = false;
  for (int iter = 0; iter < 5000 && !settled; ++iter) {
    Float step = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Cx val{c[n], Float(0)};
      for (std::size_t i = n; i-- > 0;) val = val * z[k] + Cx{c[i], Float(0)};
      Cx den{Float(1), Float(0)};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den = den * (z[k] - z[j]);
      const Cx delta = val / den;
      z[k] = z[k] - delta;
      step = std::max(step, delta.abs() / (1 + z[k].abs()));
    }
    settled = step < tol;
  }
  if (!settled) return -1;
  int real = 0;
  for (const auto& r : z) real += boost::multiprecision::abs(r.im) < Float("1e-40") * (1 + r.abs());
  return real;
}

Check sturm_vs_numeric() {
  Check c;
  std::mt19937_64 rng(3);
  int done = 0;
  while (done < 500) {
    const IntPolynomial p = squarefree_part(testing::random_polynomial(rng, 1 + static_cast<int>(rng() % 10), 20));
    if (p.degree() < 1) continue;
    ++done;
    const int numeric = numeric_real_roots(p);
    c.expect(numeric >= 0, "oracle did not converge on " + p.to_string());
    c.expect(static_cast<int>(count_real_roots(p)) == numeric, "real-root count mismatch on " + p.to_string());
  }
  const IntPolynomial q{1, 1, 0, 0, 1};
  c.expect(count_real_roots(q) == 0 && numeric_real_roots(q) == 0, "x^4+x+1 has real roots");
  return c;
}

// ---------------------------------------------------------------------------
// 4, 5. Galois certificates

Check galois_quartic() {
  Check c;
  const IntPolynomial p{1, 1, 0, 0, 1};
  const auto v = certify_symmetric_group(p, 500);
  c.expect(v.ok(), "no S_4 certificate");
  if (!v.ok()) return c;
  const auto& irr = v->irreducibility.witnesses;
  c.expect(!irr.empty() && irr[0].prime == 2 && irr[0].parts == std::vector<unsigned>{4}, "irreducibility not at q=2 with parts (4)");
  c.expect(v->n_minus_1 && v->n_minus_1->prime == 3 && v->n_minus_1->parts == (std::vector<unsigned>{1, 3}), "3-cycle witness not at q=3");
  c.expect(v->transposition && v->transposition->prime <= 500 && v->transposition->yields_transposition(), "no transposition witness");
  const IntPolynomial resolvent = testing::quartic_resolvent_cubic(p);
  c.expect(resolvent == (IntPolynomial{-1, -4, 0, 1}), "resolvent is not x^3-4x-1");
  c.expect(testing::monic_cubic_irreducible(resolvent), "resolvent reducible");
  const Integer disc = testing::cubic_discriminant(resolvent);
  c.expect(disc == 229 && !is_perfect_square(disc), "resolvent discriminant is not the non-square 229");
  c.expect(discriminant(p) == 229, "quartic discriminant differs from resolvent discriminant");
  return c;
}

Check galois_negatives() {
  Check c;
  const IntPolynomial v4{1, 0, 0, 0, 1};
  const IntPolynomial reducible = IntPolynomial{1, 0, 1} * IntPolynomial{2, 0, 1};
  c.expect(!certify_symmetric_group(v4, 10000).ok(), "x^4+1 certified S_4");
  c.expect(!certify_symmetric_group(reducible, 10000).ok(), "(x^2+1)(x^2+2) certified S_4");
  c.expect(!certify_irreducible(reducible, 10000).ok(), "(x^2+1)(x^2+2) certified irreducible");
  return c;
}

// ---------------------------------------------------------------------------
// 6, 7. Torus and Neron-Severi search

Check torus_build() {
  Check c;
  const IntPolynomial p{1, 1, 0, 0, 1};
  const auto t = build_torus(p, 256);
  c.expect(t.holomorphy_residual.to_double() <= 1e-30, "holomorphy residual");
  c.expect(t.j_square_residual.to_double() <= 1e-30, "J^2 + I residual");
  c.expect(t.j_commute_residual.to_double() <= 1e-30, "JM - MJ residual");
  c.expect(t.rational_rep == companion(p), "rational representation is not the companion matrix");
  const auto again = torus_residuals(t, 512);
  c.expect(again.holomorphy.to_double() <= 1e-30 && again.j_square.to_double() <= 1e-30 && again.j_commute.to_double() <= 1e-30,
           "residuals at 512 bits");
  const auto fine = build_torus(p, 512);
  c.expect(fine.holomorphy_residual.to_double() <= 1e-60 && fine.j_square_residual.to_double() <= 1e-60 &&
               fine.j_commute_residual.to_double() <= 1e-60,
           "torus rebuilt at 512 bits");
  return c;
}

Check ns_controls() {
  Check c;
  const auto g = gaussian_square_torus(256);
  const auto rep = ns_integral_search(g, 2, 256);
  // Exhaustive oracle: antisymmetric E with entries in [-2, 2] and J^T E J = E for the integral J.
  const IntMatrix& j = g.rational_rep;
  const auto coords = antisymmetric_coordinates(4);
  std::vector<IntVector> solutions;
  IntVector x(coords.size(), -2);
  for (;;) {
    const IntMatrix e = antisymmetric_from_coordinates(4, x);
    if (!e.is_zero() && j.transpose() * e * j == e) solutions.push_back(x);
    std::size_t k = 0;
    while (k < x.size() && x[k] == 2) x[k++] = -2;
    if (k == x.size()) break;
    ++x[k];
  }
  IntMatrix oracle_rows(solutions.size(), coords.size());
  for (std::size_t r = 0; r < solutions.size(); ++r)
    for (std::size_t k = 0; k < coords.size(); ++k) oracle_rows(r, k) = solutions[r][k];
  const std::size_t oracle_rank = solutions.empty() ? 0 : rank(oracle_rows);
  c.expect(oracle_rank == 4, "oracle rank is not 4");
  c.expect(rep.forms_found.size() >= 4, "fewer than 4 forms on the Gaussian square");
  if (!rep.forms_found.empty()) {
    IntMatrix found(rep.forms_found.size(), coords.size());
    for (std::size_t r = 0; r < rep.forms_found.size(); ++r) {
      const IntMatrix& e = rep.forms_found[r];
      c.expect(form_height(e) <= 2 && j.transpose() * e * j == e, "found form is not an integral (1,1) form of height <= 2");
      for (std::size_t k = 0; k < coords.size(); ++k) found(r, k) = e(coords[k].first, coords[k].second);
    }
    c.expect(rank(found) == oracle_rank, "found forms do not span the oracle rank");
  }
  const auto q = build_torus(IntPolynomial{1, 1, 0, 0, 1}, 256);
  const auto none = ns_integral_search(q, 10000, 256);
  c.expect(!none.found(), "forms found on the x^4+x+1 torus");
  c.expect(none.height_covered >= 10000, "height 10^4 not covered");
  return c;
}

// ---------------------------------------------------------------------------
// 8, 9. Albanese transport and mu

Check albanese() {
  Check c;
  std::mt19937_64 rng(8);
  std::vector<IntMatrix> inputs;
  for (int k = 0; k < 100; ++k) inputs.push_back(testing::random_matrix(rng, 4, 4, 20));
  inputs.push_back(companion(IntPolynomial{1, 1, 0, 0, 1}));
  for (const auto& m : inputs) {
    const auto t = albanese_transport(m);
    c.expect(t.composite == m && t.recovered, "transport did not return M");
    c.expect(t.direct_sum, "Gamma_bar_1 + Gamma_bar_2 not a direct sum");
    // Oracle: Gamma_1 = {(a + b, b, b)}, Gamma_2 = {(b, a + b, b)} pushed through (x, y, z) -> (x - z, y - z).
    const IntMatrix id = IntMatrix::identity(4), zero = IntMatrix::zero(4, 4);
    const IntMatrix quotient_x = hstack(hstack(id, zero), Integer(-1) * id);
    const IntMatrix quotient_y = hstack(hstack(zero, id), Integer(-1) * id);
    const IntMatrix q = vstack(quotient_x, quotient_y);
    const IntMatrix diag3 = vstack(vstack(id, id), id);
    const IntMatrix g1 = hstack(vstack(vstack(id, zero), zero), diag3);
    const IntMatrix g2 = hstack(vstack(vstack(zero, id), zero), diag3);
    c.expect(same_lattice(q * g1, t.model.gamma_bar[0]) && same_lattice(q * g2, t.model.gamma_bar[1]), "quotient lattices differ from the oracle");
    const auto s = snf(hstack(q * g1, q * g2));
    bool unit = s.rank() == 8;
    for (std::size_t i = 0; i < s.rank(); ++i) unit = unit && s.d(i, i) == 1;
    c.expect(unit, "oracle SNF of Gamma_bar_1 + Gamma_bar_2 is not the identity");
  }
  return c;
}

// (t, s)(t', s') = (t + s.t', s s') with (s.t)_{s(i)} = t_i.
SemidirectElement oracle_mul(const SemidirectElement& x, const SemidirectElement& y) {
  SemidirectElement r;
  const auto& p = x.twist.image;
  for (std::size_t i = 0; i < 3; ++i) {
    r.translation[p[i]] = y.translation[i];
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < r.translation[i].size(); ++k) r.translation[i][k] += x.translation[i][k];
  r.twist = x.twist * y.twist;
  return r;
}

Check mu_contracts() {
  Check c;
  std::mt19937_64 rng(9);
  const MuMap mu = build_mu(companion(IntPolynomial{1, 1, 0, 0, 1}));
  std::uniform_int_distribution<long> dist(-1000, 1000);
  auto draw = [&] {
    Block v(4);
    for (auto& e : v) e = dist(rng);
    return v;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const Block a = draw(), b = draw(), a2 = draw(), b2 = draw();
    Block sa(4), sb(4);
    for (std::size_t k = 0; k < 4; ++k) {
      sa[k] = a[k] + a2[k];
      sb[k] = b[k] + b2[k];
    }
    const auto lhs = mu(sa, sb);
    c.expect(lhs == oracle_mul(mu(a, b), mu(a2, b2)), "mu is not a homomorphism");
    c.expect(lhs == semidirect_mul(mu(a, b), mu(a2, b2)), "library product disagrees with the oracle product");
    c.expect(lhs.twist.is_identity(), "twist of a sampled image is not trivial");
    const auto diag = mu(Block(4, 0), b);
    c.expect(diag.translation[0] == b && diag.translation[1] == b && diag.translation[2] == b && diag.twist.is_identity(),
             "mu(0, b) is not in the diagonal");
  }
  c.expect(check_projection_trivial(mu), "projection to S_3 not trivial");
  return c;
}

// ---------------------------------------------------------------------------
// 10. Realization

Check realization() {
  Check c;
  const AbelianHom f = AbelianHom::free(IntMatrix{{2, 0}, {0, 6}});
  const RealizationPlan plan = realize_free_hom(f);
  c.expect(verify_plan(plan, f), "plan does not verify");
  c.expect(plan.induced_matrix == (IntMatrix{{2, 0}, {0, 6}}), "induced map is not diag(2,6)");
  std::set<std::pair<long, long>> lattice;
  for (const auto& g : plan.source_lattice) {
    c.expect(g.size() == 1, "source lattice not in C^1");
    if (g.size() == 1) lattice.insert({static_cast<long>(g[0].re), static_cast<long>(g[0].im)});
  }
  c.expect(lattice == std::set<std::pair<long, long>>{{2, 0}, {0, 6}}, "source lattice is not 2Z + 6iZ");
  // Index of 2Z + 6iZ in Z[i]: residues (x mod 2, y mod 6).
  std::set<std::pair<long, long>> residues;
  for (long x = -10; x <= 10; ++x)
    for (long y = -10; y <= 10; ++y) residues.insert({((x % 2) + 2) % 2, ((y % 6) + 6) % 6});
  Integer degree = 1;
  for (const auto& s : plan.steps) degree *= s.degree;
  c.expect(degree == static_cast<long>(residues.size()) && degree == 12, "cover degree is not 12");
  std::ostringstream out, err;
  const char* argv[] = {"kahler-hom", "realize-hom", "--matrix", "[[1,0],[0,0]]"};
  c.expect(cli::run(4, argv, out, err) == 3 && err.str().find("odd rank obstruction") != std::string::npos,
           "[[1,0],[0,0]] not rejected with the odd rank obstruction");
  return c;
}

// ---------------------------------------------------------------------------
// 11, 12. End-to-end commands

std::pair<int, std::string> run_command(std::vector<const char*> args) {
  args.insert(args.begin(), "kahler-hom");
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str()};
}

Check end_to_end() {
  Check c;
  const auto a = run_command({"build-counterexample", "--poly", "x^4+x+1", "--seed", "1"});
  const auto b = run_command({"build-counterexample", "--poly", "x^4+x+1", "--seed", "1"});
  c.expect(a.first == 0, "build-counterexample exit code " + std::to_string(a.first));
  c.expect(a.second == b.second, "outputs differ between runs");
  const Json j = Json::parse(a.second);
  c.expect(j.at("complete").get<bool>(), "report incomplete");
  c.expect(j.at("voisin").at("status") == "certified", "voisin stage");
  c.expect(j.at("mu").at("homomorphism").get<bool>(), "mu stage");
  c.expect(j.at("projection_trivial").get<bool>(), "projection stage");
  c.expect(j.at("albanese_transport") == "recovered", "albanese stage");
  c.expect(j.at("ns_search").at("verdict") == "no-form-found", "ns stage");
  return c;
}

Check search() {
  Check c;
  const auto r = run_command({"search-torus", "--n", "2", "--bound", "3", "--max-tries", "10000", "--seed", "1"});
  c.expect(r.first == 0, "search-torus exit code");
  const Json j = Json::parse(r.second);
  c.expect(!j.at("hits").empty(), "no certificate found");
  for (const auto& hit : j.at("hits")) {
    const IntPolynomial p(integers_from_json(hit.at("certificate").at("coeffs")));
    c.expect(count_real_roots(p) == 0 && testing::durand_kerner(p).size() == 4, "hit has real roots");
    if (!c.ok) break;
  }
  return c;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"snf-suite", 10, snf_suite},
      {"cayley-hamilton", 10, cayley_hamilton},
      {"sturm-vs-numeric", 30, sturm_vs_numeric},
      {"galois-quartic", 5, galois_quartic},
      {"galois-negatives", 10, galois_negatives},
      {"torus-build", 5, torus_build},
      {"ns-search-controls", 60, ns_controls},
      {"albanese-transport", 5, albanese},
      {"mu-contracts", 5, mu_contracts},
      {"realize-diag-2-6", 1, realization},
      {"build-counterexample", 90, end_to_end},
      {"search-torus", 120, search},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) c.expect(false, "over the time limit");
    std::printf("%s %2zu %-22s %8.3fs (limit %gs)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, cr.name, secs, cr.limit_seconds,
                c.ok ? "" : ": ", c.detail.c_str());
    failures += !c.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
