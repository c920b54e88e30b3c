#pragma once

// H_1 lattice data of T x T x T modulo the diagonal Sigma = {(b, b, b)}. The
// fixed lattices Gamma_i of s_i and the image Gamma_4 of mu descend to the
// quotient through (x, y, z) -> (x - z, y - z), where the transport
// Gamma_1 -> Gamma_4 -> Gamma_2 -> Gamma_1 (inverse of pr_1, then pr_2, then s_3)
// recovers M.

#include "kahler/construct/semidirect.hpp"
#include "kahler/exact/smith.hpp"

#include <array>
#include <stdexcept>

namespace kahler {

struct AlbaneseModel {
  std::size_t block_len = 0;  // 2n
  IntMatrix sigma;            // 6n x 2n, columns (b, b, b)
  std::array<IntMatrix, 4> gamma;      // Gamma_1..Gamma_4 generators as columns
  IntMatrix quotient;                  // 4n x 6n
  std::array<IntMatrix, 4> gamma_bar;  // images in quotient coordinates
};

struct AlbaneseTransport {
  AlbaneseModel model;
  IntMatrix composite;
  bool recovered = false;
  bool direct_sum = false;  // Gamma_bar_1 + Gamma_bar_2 = Z^4n with trivial intersection
};

namespace detail {

inline IntMatrix fixed_lattice(const S3Element& s, std::size_t len) {
  const IntMatrix a = block_permutation(s, len) - IntMatrix::identity(3 * len);
  auto k = integer_kernel(a);
  if (!k) throw std::logic_error("a transposition fixes a nonzero sublattice");
  return *k;
}

// Columns of [[x], [y], [z]] from block generators.
inline IntMatrix stack3(const IntMatrix& x, const IntMatrix& y, const IntMatrix& z) { return vstack(vstack(x, y), z); }

}  // namespace detail

inline AlbaneseModel albanese_model(const MuMap& mu) {
  const std::size_t len = mu.block_len();
  const IntMatrix id = IntMatrix::identity(len), zero = IntMatrix::zero(len, len);
  AlbaneseModel model;
  model.block_len = len;
  model.sigma = detail::stack3(id, id, id);
  model.gamma[0] = detail::fixed_lattice(S3Element::s1(), len);
  model.gamma[1] = detail::fixed_lattice(S3Element::s2(), len);
  model.gamma[2] = detail::fixed_lattice(S3Element::s3(), len);
  model.gamma[3] = mu.translation_matrix();

  // Explicit spans: Gamma_1 = {(a + b, b, b)}, Gamma_2 = {(b, a + b, b)}.
  const IntMatrix g1 = hstack(detail::stack3(id, zero, zero), detail::stack3(id, id, id));
  const IntMatrix g2 = hstack(detail::stack3(zero, id, zero), detail::stack3(id, id, id));
  if (!same_lattice(model.gamma[0], g1) || !same_lattice(model.gamma[1], g2)) {
    throw std::logic_error("fixed lattices differ from their explicit spans");
  }
  for (const auto& s : S3Element::all()) {
    if (!(block_permutation(s, len) * model.sigma == model.sigma)) throw std::logic_error("Sigma is not S_3-fixed");
  }

  model.quotient = hstack(IntMatrix::identity(2 * len), vstack(Integer(-1) * id, Integer(-1) * id));
  if (!(model.quotient * model.sigma).is_zero()) throw std::logic_error("quotient map does not kill Sigma");
  for (std::size_t i = 0; i < 4; ++i) model.gamma_bar[i] = model.quotient * model.gamma[i];
  return model;
}

/// Composite transport matrix in the parameter a of Gamma_bar_1 = {(a, 0)}.
inline AlbaneseTransport albanese_transport(const IntMatrix& m) {
  const MuMap mu(m);
  const std::size_t len = mu.block_len();
  const IntMatrix id = IntMatrix::identity(len), zero = IntMatrix::zero(len, len);
  AlbaneseTransport out;
  out.model = albanese_model(mu);
  const auto& gb = out.model.gamma_bar;

  const IntMatrix expect1 = vstack(id, zero), expect2 = vstack(zero, id), expect4 = vstack(id, m);
  if (!same_lattice(gb[0], expect1) || !same_lattice(gb[1], expect2) || !same_lattice(gb[3], expect4)) {
    throw std::logic_error("quotient lattices differ from {(a, 0)}, {(0, a)}, {(a, Ma)}");
  }
  const SNFDecomposition sum = snf(hstack(expect1, expect2));
  out.direct_sum = sum.rank() == 2 * len;
  for (std::size_t i = 0; i < sum.rank(); ++i) out.direct_sum = out.direct_sum && sum.d(i, i) == 1;

  // s_3 on the quotient: lift (u, v) to (u, v, 0), permute, project.
  const IntMatrix lift = vstack(IntMatrix::identity(2 * len), IntMatrix::zero(len, 2 * len));
  const IntMatrix s3_bar = out.model.quotient * block_permutation(S3Element::s3(), len) * lift;
  const IntMatrix pr1 = gb[3].block(0, 0, len, gb[3].cols());

  out.composite = IntMatrix::zero(len, len);
  for (std::size_t j = 0; j < len; ++j) {
    std::vector<Integer> a(len, 0);
    a[j] = 1;
    const auto coeffs = solve_integer(pr1, a);  // inverse of pr_1 on Gamma_bar_4
    if (!coeffs) throw std::logic_error("pr_1 is not onto on Gamma_bar_4");
    std::vector<Integer> point = gb[3] * *coeffs;  // (a, M a)
    for (std::size_t k = 0; k < len; ++k) point[k] = 0;  // pr_2: (0, M a)
    if (!lattice_contains(gb[1], IntMatrix(2 * len, 1, point))) throw std::logic_error("pr_2 leaves Gamma_bar_2");
    const std::vector<Integer> back = s3_bar * point;  // (M a, 0)
    for (std::size_t k = len; k < 2 * len; ++k) {
      if (back[k] != 0) throw std::logic_error("s_3 does not carry Gamma_bar_2 into Gamma_bar_1");
    }
    for (std::size_t k = 0; k < len; ++k) out.composite(k, j) = back[k];
  }
  out.recovered = out.composite == m;
  return out;
}

}  // namespace kahler
