#pragma once

#include "kahler/exact/integer.hpp"

#include <string>
#include <vector>

namespace kahler {

/// Z^freeRank (+) Z/t1 (+) ... (+) Z/tk with t1 | t2 | ... | tk, every ti >= 2.
struct FgAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  FgAbelianGroup() = default;
  FgAbelianGroup(std::size_t rank, std::vector<Integer> invariants) : free_rank(rank), torsion(std::move(invariants)) {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (torsion[i] < 2) throw PreconditionError("torsion invariants must be >= 2");
      if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0) {
        throw PreconditionError("torsion invariants must form a divisibility chain");
      }
    }
  }

  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }

  std::size_t generator_count() const { return free_rank + torsion.size(); }
  bool is_free() const { return torsion.empty(); }
  bool has_even_rank() const { return free_rank % 2 == 0; }

  /// Order of the i-th generator (0 for free generators).
  Integer generator_order(std::size_t i) const { return i < free_rank ? Integer(0) : torsion[i - free_rank]; }

  std::string to_string() const {
    std::string s = free_rank ? "Z^" + std::to_string(free_rank) : "";
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

}  // namespace kahler
