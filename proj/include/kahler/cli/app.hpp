#pragma once

// Command-line front end. Exit codes: 0 success or certificate, 1 usage or
// input error, 2 inconclusive, 3 fails or obstruction.

#include "CLI11.hpp"
#include "kahler/cli/poly_parser.hpp"
#include "kahler/construct/counterexample.hpp"
#include "kahler/construct/graph_subgroup.hpp"
#include "kahler/hom/realize.hpp"
#include "kahler/torus/ns_search.hpp"
#include "kahler/torus/voisin.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace kahler::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInconclusive = 2, kFails = 3 };

struct RunConfig {
  std::string command;
  std::string poly;
  std::string matrix;
  std::string source;
  std::string target;
  std::string input;
  bool gaussian_square = false;
  Precision precision_bits = 256;
  std::uint64_t prime_budget = 1000;
  std::string height = "10000";
  std::uint64_t seed = 1;
  std::uint64_t max_tries = 10000;
  unsigned n = 2;
  unsigned long bound = 3;
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;
};

struct CommandResult {
  Json report;
  int exit_code = kOk;
};

inline int exit_code_for(Status s) {
  switch (s) {
    case Status::Certified: return kOk;
    case Status::Inconclusive: return kInconclusive;
    case Status::Fails: return kFails;
  }
  return kUsage;
}

/// A value that names an existing file is replaced by the file's contents.
inline std::string read_input(const std::string& value) {
  std::error_code ec;
  if (value.empty() || !std::filesystem::is_regular_file(value, ec)) return value;
  std::ifstream in(value, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + value);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Inline expression, JSON {"coeffs": [...]}, or a JSON coefficient array (constant first).
inline IntPolynomial polynomial_input(const std::string& value) {
  const std::string text = trim(read_input(value));
  if (text.empty()) throw std::invalid_argument("--poly is required");
  if (text.front() == '{') return polynomial_from_json(Json::parse(text));
  if (text.front() == '[') return IntPolynomial(integers_from_json(Json::parse(text)));
  return parse_polynomial(text);
}

inline Json json_input(const std::string& value, const char* what) {
  const std::string text = trim(read_input(value));
  if (text.empty()) throw std::invalid_argument(std::string(what) + " is required");
  return Json::parse(text);
}

inline Json snf_report(const IntMatrix& a) {
  const SNFDecomposition s = snf(a);
  Json inv = Json::array();
  for (std::size_t i = 0; i < s.rank(); ++i) inv.push_back(to_string(s.d(i, i)));
  return Json{{"input", to_json(a)}, {"D", to_json(s.d)}, {"U", to_json(s.u)}, {"V", to_json(s.v)},
              {"invariants", std::move(inv)}, {"rank", s.rank()}};
}

inline CommandResult cmd_snf(const RunConfig& cfg) {
  return {snf_report(matrix_from_json(json_input(cfg.matrix, "--matrix"))), kOk};
}

inline CommandResult cmd_certify_torus(const RunConfig& cfg) {
  const IntPolynomial p = polynomial_input(cfg.poly);
  if (!p.is_monic()) throw std::invalid_argument("polynomial must be monic");
  const auto v = voisin_check(p, cfg.prime_budget);
  Json j{{"poly", p.to_string()}, {"primeBudget", cfg.prime_budget}, {"status", to_string(v.status)}};
  if (v) {
    j["certificate"] = to_json(*v);
  } else {
    j["reason"] = v.reason;
  }
  return {j, exit_code_for(v.status)};
}

inline CommandResult cmd_search_torus(const RunConfig& cfg) {
  const auto hits = search_voisin_polynomial(cfg.n, cfg.bound, cfg.seed, cfg.max_tries, cfg.prime_budget, cfg.jobs);
  Json list = Json::array();
  for (const auto& h : hits) list.push_back(Json{{"tryIndex", h.try_index}, {"certificate", to_json(h.certificate)}});
  return {Json{{"n", cfg.n},
               {"bound", cfg.bound},
               {"seed", cfg.seed},
               {"maxTries", cfg.max_tries},
               {"primeBudget", cfg.prime_budget},
               {"count", hits.size()},
               {"hits", std::move(list)}},
          kOk};
}

namespace detail {

// Finite abelian group Z/t1 x ... x Z/tk as a table, elements in mixed radix.
inline FiniteGroup torsion_group(const std::vector<Integer>& torsion) {
  std::size_t order = 1;
  for (const auto& t : torsion) {
    order *= static_cast<std::size_t>(t);
    if (order > FiniteGroup::kMaxOrder) throw std::invalid_argument("torsion part too large for a multiplication table");
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d;
    for (const auto& t : torsion) {
      d.push_back(x % static_cast<std::size_t>(t));
      x /= static_cast<std::size_t>(t);
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    const auto da = digits(a);
    for (std::size_t b = 0; b < order; ++b) {
      const auto db = digits(b);
      std::size_t idx = 0, radix = 1;
      for (std::size_t i = 0; i < torsion.size(); ++i) {
        const auto t = static_cast<std::size_t>(torsion[i]);
        idx += ((da[i] + db[i]) % t) * radix;
        radix *= t;
      }
      table[a][b] = idx;
    }
  }
  return FiniteGroup(std::move(table));
}

}  // namespace detail

inline CommandResult cmd_realize_hom(const RunConfig& cfg) {
  // Rows of the input are images of source generators; internally maps act on columns.
  const IntMatrix rows = matrix_from_json(json_input(cfg.matrix, "--matrix"));
  const IntMatrix images = rows.transpose();
  const FgAbelianGroup source = cfg.source.empty() ? FgAbelianGroup::free(images.cols()) : group_from_json(json_input(cfg.source, "--source"));
  const FgAbelianGroup target = cfg.target.empty() ? FgAbelianGroup::free(images.rows()) : group_from_json(json_input(cfg.target, "--target"));
  const AbelianHom f(source, target, images);

  Json j{{"convention", "input rows are images of source generators"}, {"hom", to_json(f)}};
  const TorsionSplit split = split_torsion(f);
  j["torsion"] = to_json(split);

  RankParity parity;
  try {
    parity = check_even_rank(f);
  } catch (const ObstructionError& e) {
    j["status"] = "fails";
    j["obstruction"] = std::string("odd rank obstruction: ") + e.what();
    return {j, kFails};
  }
  j["ranks"] = to_json(parity);
  if (!parity.even()) {
    j["status"] = "fails";
    j["obstruction"] = "odd rank obstruction: image rank " + std::to_string(parity.rank_im) + " is odd";
    return {j, kFails};
  }
  if (split.free_part) {
    const RealizationPlan plan = realize_free_hom(*split.free_part);
    j["plan"] = to_json(plan);
    j["verified"] = verify_plan(plan, *split.free_part);
  }
  if (split.needs_graph_subgroup()) {
    const FiniteGroup c = detail::torsion_group(target.torsion);
    std::vector<std::size_t> h2;
    for (std::size_t col = 0; col < images.cols(); ++col) {
      std::size_t idx = 0, radix = 1;
      for (std::size_t i = 0; i < target.torsion.size(); ++i) {
        idx += static_cast<std::size_t>(images(target.free_rank + i, col)) * radix;
        radix *= static_cast<std::size_t>(target.torsion[i]);
      }
      h2.push_back(idx);
    }
    j["graphSubgroup"] = to_json(graph_subgroup(source, c, std::move(h2)));
  }
  const bool ok = !j.contains("verified") || j["verified"].get<bool>();
  j["status"] = ok ? "realized" : "fails";
  return {j, ok ? kOk : kFails};
}

inline CommandResult cmd_build_counterexample(const RunConfig& cfg) {
  const IntPolynomial p = polynomial_input(cfg.poly);
  if (!p.is_monic()) throw std::invalid_argument("polynomial must be monic");
  CounterexampleOptions opt;
  opt.prime_budget = cfg.prime_budget;
  opt.precision_bits = cfg.precision_bits;
  opt.height = parse_integer(cfg.height);
  opt.seed = cfg.seed;
  const auto rep = assemble_counterexample(p, opt);
  return {rep.json, exit_code_for(rep.status)};
}

inline CommandResult cmd_ns_search(const RunConfig& cfg) {
  const TorusWithEndomorphism t =
      cfg.gaussian_square ? gaussian_square_torus(cfg.precision_bits) : build_torus(polynomial_input(cfg.poly), cfg.precision_bits);
  const NsSearchReport rep = ns_integral_search(t, parse_integer(cfg.height), cfg.precision_bits);
  Json j = to_json(rep);
  j["torus"] = cfg.gaussian_square ? "gaussian-square" : t.period.source_poly.to_string();
  return {j, kOk};
}

/// Input: {"A": {"rank": r, "torsion": [...]}, "C": {"cyclic": n} | "S3" | {"table": [[...]]}, "h2": [...]}.
inline CommandResult cmd_graph_index(const RunConfig& cfg) {
  const Json in = json_input(cfg.input, "--input");
  const FgAbelianGroup a = group_from_json(in.at("A"));
  const Json& cj = in.at("C");
  const FiniteGroup c = cj.is_string() && cj.get<std::string>() == "S3" ? FiniteGroup::symmetric3()
                        : cj.contains("cyclic")                         ? FiniteGroup::cyclic(cj.at("cyclic").get<std::size_t>())
                                                                        : FiniteGroup(cj.at("table").get<std::vector<std::vector<std::size_t>>>());
  const GraphSubgroup g = graph_subgroup(a, c, in.at("h2").get<std::vector<std::size_t>>());
  return {to_json(g), kOk};
}

inline void render_text(const Json& j, std::ostream& os, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, os, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], os, prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

inline void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")
      ->envname("TORUS_PRECISION_BITS");
  sub->add_option("--prime-budget", cfg.prime_budget, "Largest prime scanned for certificates")
      ->envname("TORUS_PRIME_BUDGET");
  sub->add_option("--seed", cfg.seed, "Seed for sampled checks and searches");
  sub->add_option("--out", cfg.out, "Write the report to this path instead of stdout");
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--jobs", cfg.jobs, "Worker threads for searches")->check(CLI::Range(1, 256));
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact and certified computations for Kahler and projective homomorphisms", "kahler-hom"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("--matrix", cfg.matrix, "JSON matrix or file")->required();

  auto* certify = app.add_subcommand("certify-torus", "Certify that a polynomial gives a non-algebraic torus");
  certify->add_option("--poly", cfg.poly, "Polynomial in x, JSON, or file")->required();

  auto* search = app.add_subcommand("search-torus", "Random search for certified polynomials");
  search->add_option("--n", cfg.n, "Torus dimension")->check(CLI::Range(2, 16));
  search->add_option("--bound", cfg.bound, "Coefficient bound");
  search->add_option("--max-tries", cfg.max_tries, "Number of candidates");

  auto* realize = app.add_subcommand("realize-hom", "Realize an abelian group homomorphism by a torus morphism");
  realize->add_option("--matrix", cfg.matrix, "JSON matrix or file; row i is the image of source generator i")->required();
  realize->add_option("--source", cfg.source, "Source group JSON {\"rank\": r, \"torsion\": [...]}");
  realize->add_option("--target", cfg.target, "Target group JSON");

  auto* counter = app.add_subcommand("build-counterexample", "Assemble the full non-projective Kahler homomorphism report");
  counter->add_option("--poly", cfg.poly, "Polynomial in x, JSON, or file")->required();
  counter->add_option("--height", cfg.height, "Height bound for the Neron-Severi search");

  auto* ns = app.add_subcommand("ns-search", "Search for integral (1,1) forms on a torus");
  auto* ns_poly = ns->add_option("--poly", cfg.poly, "Polynomial in x, JSON, or file");
  auto* ns_gauss = ns->add_flag("--gaussian-square", cfg.gaussian_square, "Use (C/Z[i])^2 instead of a polynomial");
  ns_poly->excludes(ns_gauss);
  ns->add_option("--height", cfg.height, "Height bound");

  auto* graph = app.add_subcommand("graph-index", "Index of a graph subgroup G(h2) in A x C");
  graph->add_option("--input", cfg.input, "JSON description or file")->required();

  for (auto* sub : {snf_cmd, certify, search, realize, counter, ns, graph}) add_common(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CommandResult result;
  try {
    // Checked here so that values from the environment are validated too.
    if (cfg.precision_bits < 64 || cfg.precision_bits > 65536) throw std::invalid_argument("precision bits must be in [64, 65536]");
    if (cfg.prime_budget < 2 || cfg.prime_budget > (1u << 30)) throw std::invalid_argument("prime budget must be in [2, 2^30]");
    if (*snf_cmd) result = cmd_snf(cfg);
    if (*certify) result = cmd_certify_torus(cfg);
    if (*search) result = cmd_search_torus(cfg);
    if (*realize) result = cmd_realize_hom(cfg);
    if (*counter) result = cmd_build_counterexample(cfg);
    if (*ns) {
      if (!cfg.gaussian_square && cfg.poly.empty()) throw std::invalid_argument("ns-search needs --poly or --gaussian-square");
      result = cmd_ns_search(cfg);
    }
    if (*graph) result = cmd_graph_index(cfg);
  } catch (const PrecisionError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const RootFindingError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const TorusInvariantError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const ObstructionError& e) {
    err << "obstruction: " << e.what() << '\n';
    return kFails;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream body;
  if (cfg.format == "text") {
    render_text(result.report, body);
  } else {
    body << result.report.dump(2) << '\n';
  }
  if (cfg.out.empty()) {
    out << body.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!(file << body.str())) {
      err << "error: cannot write " << cfg.out << '\n';
      return kUsage;
    }
  }
  if (result.exit_code == kFails && result.report.contains("obstruction")) {
    err << result.report["obstruction"].get<std::string>() << '\n';
  }
  return result.exit_code;
}

}  // namespace kahler::cli
