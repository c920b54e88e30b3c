#pragma once

// S_3 and the semidirect product (Z^2n x Z^2n x Z^2n) x| S_3, where S_3
// permutes the three blocks, together with the homomorphism
// mu(a, b) = ((a + b, M a + b, b), e) from Z^2n x Z^2n.

#include "kahler/exact/int_matrix.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kahler {

/// Permutation of {0, 1, 2}; image[i] = sigma(i). Composition (st)(x) = s(t(x)).
struct S3Element {
  std::array<std::uint8_t, 3> image{0, 1, 2};

  static S3Element identity() { return {}; }
  static S3Element s1() { return {{0, 2, 1}}; }  // (23)
  static S3Element s2() { return {{2, 1, 0}}; }  // (31)
  static S3Element s3() { return {{1, 0, 2}}; }  // (12)
  static S3Element c() { return {{1, 2, 0}}; }   // (123)
  static S3Element c2() { return {{2, 0, 1}}; }  // (132)
  static std::array<S3Element, 6> all() { return {identity(), s1(), s2(), s3(), c(), c2()}; }

  bool is_identity() const { return image == std::array<std::uint8_t, 3>{0, 1, 2}; }
  S3Element inverse() const {
    S3Element r;
    for (std::uint8_t i = 0; i < 3; ++i) r.image[image[i]] = i;
    return r;
  }
  /// Position in all(), used for multiplication tables.
  std::size_t index() const {
    const auto els = all();
    for (std::size_t i = 0; i < els.size(); ++i) {
      if (els[i] == *this) return i;
    }
    return 0;
  }
  std::string name() const {
    static const char* names[] = {"e", "s1", "s2", "s3", "c", "c2"};
    return names[index()];
  }

  friend S3Element operator*(const S3Element& a, const S3Element& b) {
    S3Element r;
    for (std::size_t i = 0; i < 3; ++i) r.image[i] = a.image[b.image[i]];
    return r;
  }
  friend bool operator==(const S3Element&, const S3Element&) = default;
};

using Block = std::vector<Integer>;

struct SemidirectElement {
  std::array<Block, 3> translation;
  S3Element twist;

  static SemidirectElement identity(std::size_t block_len) {
    return {{Block(block_len, 0), Block(block_len, 0), Block(block_len, 0)}, S3Element::identity()};
  }
  std::size_t block_len() const { return translation[0].size(); }
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// (sigma . t)_{sigma(i)} = t_i.
inline std::array<Block, 3> act(const S3Element& s, const std::array<Block, 3>& t) {
  std::array<Block, 3> r;
  for (std::size_t i = 0; i < 3; ++i) r[s.image[i]] = t[i];
  return r;
}

inline SemidirectElement semidirect_mul(const SemidirectElement& x, const SemidirectElement& y) {
  const std::size_t len = x.block_len();
  for (const auto* e : {&x, &y}) {
    for (const auto& b : e->translation) {
      if (b.size() != len) throw PreconditionError("semidirect_mul: block length mismatch");
    }
  }
  const auto moved = act(x.twist, y.translation);
  SemidirectElement r;
  for (std::size_t i = 0; i < 3; ++i) {
    r.translation[i].resize(len);
    for (std::size_t k = 0; k < len; ++k) r.translation[i][k] = x.translation[i][k] + moved[i][k];
  }
  r.twist = x.twist * y.twist;
  return r;
}

/// 6n x 6n matrix of sigma acting on Z^2n x Z^2n x Z^2n.
inline IntMatrix block_permutation(const S3Element& s, std::size_t block_len) {
  IntMatrix p = IntMatrix::zero(3 * block_len, 3 * block_len);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < block_len; ++k) p(s.image[i] * block_len + k, i * block_len + k) = 1;
  }
  return p;
}

class MuMap {
 public:
  explicit MuMap(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw PreconditionError("build_mu needs a square matrix");
  }

  const IntMatrix& m() const { return m_; }
  std::size_t block_len() const { return m_.rows(); }
  std::size_t domain_rank() const { return 2 * m_.rows(); }

  SemidirectElement operator()(const Block& a, const Block& b) const {
    if (a.size() != block_len() || b.size() != block_len()) throw PreconditionError("mu: argument length mismatch");
    SemidirectElement r;
    const Block ma = m_ * a;
    r.translation[0].resize(a.size());
    r.translation[1].resize(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      r.translation[0][k] = a[k] + b[k];
      r.translation[1][k] = ma[k] + b[k];
    }
    r.translation[2] = b;
    return r;
  }

  /// Images of the 4n standard generators (a-part first).
  std::vector<SemidirectElement> generator_images() const {
    std::vector<SemidirectElement> out;
    const std::size_t len = block_len();
    for (std::size_t j = 0; j < 2 * len; ++j) {
      Block a(len, 0), b(len, 0);
      (j < len ? a[j] : b[j - len]) = 1;
      out.push_back((*this)(a, b));
    }
    return out;
  }

  /// The 6n x 4n matrix [[I, I], [M, I], [0, I]] of the translation part.
  IntMatrix translation_matrix() const {
    const std::size_t len = block_len();
    const IntMatrix id = IntMatrix::identity(len);
    return vstack(vstack(hstack(id, id), hstack(m_, id)), hstack(IntMatrix::zero(len, len), id));
  }

 private:
  IntMatrix m_;
};

inline MuMap build_mu(IntMatrix m) { return MuMap(std::move(m)); }

/// True iff every generator image has trivial twist, so the composite with the
/// projection to S_3 is trivial.
inline bool check_projection_trivial(std::span<const SemidirectElement> generator_images) {
  for (const auto& g : generator_images) {
    if (!g.twist.is_identity()) return false;
  }
  return true;
}

inline bool check_projection_trivial(const MuMap& mu) {
  const auto gens = mu.generator_images();
  return check_projection_trivial(std::span<const SemidirectElement>(gens));
}

}  // namespace kahler
