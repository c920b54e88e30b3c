#pragma once

// Homomorphisms of finitely generated abelian groups, acting on column vectors
// of generator coordinates (free generators first, then torsion generators).

#include "kahler/exact/abelian_group.hpp"
#include "kahler/exact/int_matrix.hpp"
#include "kahler/exact/json_io.hpp"
#include "kahler/exact/smith.hpp"

#include <optional>
#include <stdexcept>

namespace kahler {

/// A hypothesis of the realization theory is violated (odd rank).
class ObstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AbelianHom {
 public:
  /// `images` is (target generators) x (source generators); column j is the
  /// image of source generator j. Torsion coordinates are reduced on entry.
  AbelianHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_.generator_count() == 0 || target_.generator_count() == 0) {
      throw PreconditionError("homomorphisms between trivial groups are not represented");
    }
    if (images_.rows() != target_.generator_count() || images_.cols() != source_.generator_count()) {
      throw PreconditionError("image matrix must be (target generators) x (source generators)");
    }
    for (std::size_t r = target_.free_rank; r < images_.rows(); ++r) {
      const Integer& mod = target_.torsion[r - target_.free_rank];
      for (std::size_t c = 0; c < images_.cols(); ++c) images_(r, c) = ((images_(r, c) % mod) + mod) % mod;
    }
    for (std::size_t c = source_.free_rank; c < images_.cols(); ++c) {
      const Integer& order = source_.torsion[c - source_.free_rank];
      for (std::size_t r = 0; r < target_.free_rank; ++r) {
        if (images_(r, c) != 0) throw PreconditionError("a torsion element cannot map to a nonzero free element");
      }
      for (std::size_t r = target_.free_rank; r < images_.rows(); ++r) {
        if ((order * images_(r, c)) % target_.torsion[r - target_.free_rank] != 0) {
          throw PreconditionError("image order does not divide the source generator order");
        }
      }
    }
  }

  /// Free homomorphism Z^cols -> Z^rows.
  static AbelianHom free(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    return AbelianHom(FgAbelianGroup::free(cols), FgAbelianGroup::free(rows), std::move(m));
  }

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& images() const { return images_; }

  std::optional<IntMatrix> free_matrix() const { return part(0, 0, target_.free_rank, source_.free_rank); }
  std::optional<IntMatrix> free_to_torsion() const {
    return part(target_.free_rank, 0, target_.torsion.size(), source_.free_rank);
  }
  std::optional<IntMatrix> torsion_to_torsion() const {
    return part(target_.free_rank, source_.free_rank, target_.torsion.size(), source_.torsion.size());
  }
  /// Always zero; kept so the vanishing is visible in reports.
  std::optional<IntMatrix> torsion_to_free() const {
    return part(0, source_.free_rank, target_.free_rank, source_.torsion.size());
  }

 private:
  std::optional<IntMatrix> part(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (nr == 0 || nc == 0) return std::nullopt;
    return images_.block(r0, c0, nr, nc);
  }

  FgAbelianGroup source_;
  FgAbelianGroup target_;
  IntMatrix images_;
};

struct RankParity {
  std::size_t rank_ker = 0;
  std::size_t rank_im = 0;
  std::size_t rank_coker = 0;
  bool even() const { return rank_im % 2 == 0; }
};

/// Ranks of kernel, image and cokernel of the free part. Both free ranks must
/// be even, and then the three parities agree.
inline RankParity check_even_rank(const AbelianHom& f) {
  if (!f.source().has_even_rank()) throw ObstructionError("source has odd rank " + std::to_string(f.source().free_rank));
  if (!f.target().has_even_rank()) throw ObstructionError("target has odd rank " + std::to_string(f.target().free_rank));
  RankParity p;
  const auto m = f.free_matrix();
  p.rank_im = m ? rank(*m) : 0;
  p.rank_ker = f.source().free_rank - p.rank_im;
  p.rank_coker = f.target().free_rank - p.rank_im;
  if (p.rank_ker % 2 != p.rank_im % 2 || p.rank_coker % 2 != p.rank_im % 2) {
    throw std::logic_error("rank parities disagree on even-rank groups");
  }
  return p;
}

inline Json to_json(const RankParity& p) {
  return Json{{"rankKer", p.rank_ker}, {"rankIm", p.rank_im}, {"rankCoker", p.rank_coker}, {"parity", p.even() ? "even" : "odd"}};
}

inline Json to_json(const AbelianHom& f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", to_json(f.images())}};
}

/// Free part and torsion parts of a homomorphism.
struct TorsionSplit {
  std::optional<AbelianHom> free_part;
  std::optional<IntMatrix> torsion_to_torsion;
  /// Nonzero when free generators map into torsion; realized through a graph
  /// subgroup rather than a torus morphism.
  std::optional<IntMatrix> free_to_torsion;
  bool torsion_to_free_zero = true;

  bool needs_graph_subgroup() const { return free_to_torsion && !free_to_torsion->is_zero(); }
};

inline TorsionSplit split_torsion(const AbelianHom& f) {
  TorsionSplit s;
  if (auto m = f.free_matrix()) s.free_part = AbelianHom::free(*m);
  s.torsion_to_torsion = f.torsion_to_torsion();
  s.free_to_torsion = f.free_to_torsion();
  if (auto z = f.torsion_to_free()) s.torsion_to_free_zero = z->is_zero();
  return s;
}

inline Json to_json(const TorsionSplit& s) {
  Json j{{"freePart", s.free_part ? to_json(s.free_part->images()) : Json(nullptr)},
         {"torsionToFree", "zero"},
         {"torsion", "symbolic"}};
  if (s.torsion_to_torsion) j["torsionToTorsion"] = to_json(*s.torsion_to_torsion);
  if (s.free_to_torsion) j["freeToTorsion"] = to_json(*s.free_to_torsion);
  j["needsGraphSubgroup"] = s.needs_graph_subgroup();
  return j;
}

}  // namespace kahler
