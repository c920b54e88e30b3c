#pragma once

// Graph subgroups G(h2) = {(x, h2(x))} of A x C for a homomorphism h2 from a
// finitely generated abelian group A to a finite group C.

#include "kahler/construct/semidirect.hpp"
#include "kahler/exact/abelian_group.hpp"
#include "kahler/exact/json_io.hpp"

#include <deque>
#include <string>
#include <vector>

namespace kahler {

/// A finite group given by its multiplication table on {0, ..., order-1}.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 10000;
  /// Associativity is checked on every triple up to this order and on a fixed
  /// stride of triples above it.
  static constexpr std::size_t kFullAssociativityOrder = 128;

  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0 || n > kMaxOrder) throw PreconditionError("group order must be in [1, 10000]");
    for (const auto& row : table_) {
      if (row.size() != n) throw PreconditionError("multiplication table must be square");
      std::vector<bool> seen(n, false);
      for (std::size_t v : row) {
        if (v >= n || seen[v]) throw PreconditionError("table row is not a permutation");
        seen[v] = true;
      }
    }
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) identity_ = e;
    }
    if (identity_ == n) throw PreconditionError("table has no identity");
    const std::size_t stride = n <= kFullAssociativityOrder ? 1 : n / 61 + 1;
    for (std::size_t a = 0; a < n; a += stride) {
      for (std::size_t b = 0; b < n; b += stride) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw PreconditionError("table is not associative");
        }
      }
    }
  }

  static FiniteGroup cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t));
  }

  /// S_3 with elements ordered as S3Element::all().
  static FiniteGroup symmetric3() {
    const auto els = S3Element::all();
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) t[a][b] = (els[a] * els[b]).index();
    }
    return FiniteGroup(std::move(t));
  }

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b) {
      if (mul(a, b) == identity_) return b;
    }
    return identity_;
  }
  std::size_t power(std::size_t a, Integer k) const {
    if (k < 0) return power(inverse(a), -k);
    std::size_t r = identity_;
    for (; k > 0; --k) r = mul(r, a);
    return r;
  }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
};

struct GraphSubgroup {
  FgAbelianGroup a;
  std::size_t c_order = 0;
  std::vector<std::size_t> h2;
  std::size_t index = 0;
};

/// Validates h2 (images commute, torsion orders respected) and finds the index
/// of G(h2) in A x C by enumerating cosets from (0, e).
inline GraphSubgroup graph_subgroup(const FgAbelianGroup& a, const FiniteGroup& c, std::vector<std::size_t> h2) {
  if (h2.size() != a.generator_count()) throw PreconditionError("h2 needs one image per generator of A");
  for (std::size_t x : h2) {
    if (x >= c.order()) throw PreconditionError("h2 image out of range");
  }
  for (std::size_t i = 0; i < h2.size(); ++i) {
    for (std::size_t j = i + 1; j < h2.size(); ++j) {
      if (c.mul(h2[i], h2[j]) != c.mul(h2[j], h2[i])) {
        throw PreconditionError("h2 is not a homomorphism: images of generators " + std::to_string(i) + " and " +
                                std::to_string(j) + " do not commute");
      }
    }
    if (i >= a.free_rank) {
      std::size_t r = c.identity();
      for (Integer k = 0; k < a.generator_order(i); ++k) r = c.mul(r, h2[i]);
      if (r != c.identity()) {
        throw PreconditionError("h2 is not a homomorphism: generator " + std::to_string(i) + " has order " +
                                a.generator_order(i).str() + " but its image does not");
      }
    }
  }

  // Every coset (x, y) G meets {0} x C exactly once, at (0, y h2(x)^-1); the
  // generators of A x C act on these representatives by left multiplication.
  std::vector<std::size_t> h2_inv;
  for (std::size_t g : h2) h2_inv.push_back(c.inverse(g));
  std::vector<bool> seen(c.order(), false);
  std::deque<std::size_t> queue{c.identity()};
  seen[c.identity()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t y = queue.front();
    queue.pop_front();
    std::vector<std::size_t> next;
    for (std::size_t g : h2_inv) next.push_back(c.mul(y, g));  // (x + a_i, y) -> y h2(a_i)^-1
    for (std::size_t g = 0; g < c.order(); ++g) next.push_back(c.mul(g, y));
    for (std::size_t z : next) {
      if (!seen[z]) {
        seen[z] = true;
        ++count;
        queue.push_back(z);
      }
    }
  }
  return {a, c.order(), std::move(h2), count};
}

inline Json to_json(const GraphSubgroup& g) {
  return Json{{"A", to_json(g.a)}, {"orderC", g.c_order}, {"h2", g.h2}, {"index", g.index}};
}

}  // namespace kahler
