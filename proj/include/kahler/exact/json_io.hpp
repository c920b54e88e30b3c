#pragma once

// JSON interchange for exact values. Integers travel as decimal strings so
// they survive 64-bit overflow; plain JSON numbers are accepted on input.

#include "kahler/exact/abelian_group.hpp"
#include "kahler/exact/int_matrix.hpp"
#include "kahler/exact/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kahler {

using Json = nlohmann::json;

inline Json integer_to_json(const Integer& z) { return z.str(); }

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  throw std::invalid_argument("expected an integer (decimal string or JSON integer), got " + j.dump());
}

inline Json integers_to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(integer_to_json(z));
  return a;
}

inline std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  std::vector<Integer> v;
  for (const auto& e : j) v.push_back(integer_from_json(e));
  return v;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// Accepts either the full object form or a bare nested array [[...],...].
inline IntMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("entries") : j;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t nr = rows.size();
  const std::size_t nc = rows[0].is_array() ? rows[0].size() : 0;
  if (nc == 0) throw std::invalid_argument("matrix rows must be nonempty arrays");
  std::vector<Integer> entries;
  entries.reserve(nr * nc);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != nc) throw std::invalid_argument("matrix rows must all have the same length");
    for (const auto& e : row) entries.push_back(integer_from_json(e));
  }
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != nr) throw std::invalid_argument("matrix 'rows' disagrees with entries");
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != nc) throw std::invalid_argument("matrix 'cols' disagrees with entries");
  }
  return IntMatrix(nr, nc, std::move(entries));
}

inline Json to_json(const IntPolynomial& p) {
  Json j{{"coeffs", integers_to_json(p.coeffs())}};
  if (p.is_zero()) j["coeffs"] = Json::array({"0"});
  return j;
}

inline IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw std::invalid_argument("polynomial JSON needs a 'coeffs' array");
  return IntPolynomial(integers_from_json(j.at("coeffs")));
}

inline Json to_json(const FgAbelianGroup& g) {
  return Json{{"rank", g.free_rank}, {"torsion", integers_to_json(g.torsion)}};
}

inline FgAbelianGroup group_from_json(const Json& j) {
  std::vector<Integer> torsion;
  if (j.contains("torsion")) torsion = integers_from_json(j.at("torsion"));
  return FgAbelianGroup(j.value("rank", std::size_t{0}), std::move(torsion));
}

}  // namespace kahler
