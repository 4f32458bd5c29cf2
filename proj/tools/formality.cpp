// formality: command-line front end for the exact obstruction computations.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "formality/cdga/builtins.hpp"
#include "formality/cdga/massey.hpp"
#include "formality/graph/classify.hpp"
#include "formality/io/report_json.hpp"
#include "formality/lie/holonomy.hpp"
#include "formality/lie/lyndon.hpp"
#include "formality/linalg/jordan.hpp"
#include "formality/resonance/alexander.hpp"

using namespace formality;
using io::json;

namespace {

struct Options {
  bool json_out = false;
  bool cite = false;
  std::size_t max_degree = 6;
  long budget = 0;  // 0: per-module defaults

  long lie_budget() const { return budget > 0 ? budget : lie::default_lie_budget; }
  std::size_t face_budget() const { return budget > 0 ? static_cast<std::size_t>(budget) : graph::default_face_budget; }
  std::size_t minor_budget() const {
    return budget > 0 ? static_cast<std::size_t>(budget) : resonance::default_minor_budget;
  }
};

// Inline JSON if the argument looks like it, otherwise a file path.
json load_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + arg.substr(0, 40) + "': " + e.what());
  }
}

std::optional<std::pair<std::string, std::string>> split_builtin(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos || s.front() == '{' || s.front() == '[') return std::nullopt;
  return std::pair{s.substr(0, colon), s.substr(colon + 1)};
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError("bad " + what + " '" + s + "'");
  }
}

std::vector<std::size_t> parse_count_list(const std::string& s, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_count(part, what));
  return out;
}

// heisenberg | torus:n | surface:g | wedge:n, or a cdga JSON file.
cdga::FiniteCdga load_cdga(const std::string& arg) {
  if (arg == "heisenberg") return cdga::heisenberg();
  if (auto b = split_builtin(arg)) {
    const std::size_t k = parse_count(b->second, "builtin parameter");
    if (b->first == "torus") return cdga::torus(k);
    if (b->first == "surface") return cdga::surface(k);
    if (b->first == "wedge") return cdga::wedge_of_circles(k);
    throw InputError("unknown builtin cdga '" + b->first + "'");
  }
  return io::cdga_from_json(load_json(arg));
}

// free:n | torus:n | surface:g, or a cup data JSON file.
CupData load_cup(const std::string& arg) {
  if (auto b = split_builtin(arg)) {
    const std::size_t k = parse_count(b->second, "builtin parameter");
    if (b->first == "free") return CupData::zero(k);
    if (b->first == "torus") return CupData::torus(k);
    if (b->first == "surface") return CupData::surface(k);
    throw InputError("unknown builtin cup data '" + b->first + "'");
  }
  return io::cup_data_from_json(load_json(arg));
}

// K:n | P:n | C:n | E:n (edgeless) | Kmp:n1,n2,... | rp2 (barycentric RP^2
// flag graph), or a graph JSON file.
graph::SimpleGraph load_graph(const std::string& arg, std::size_t budget) {
  if (arg == "rp2") return graph::barycentric_subdivision(graph::rp2_six_vertex(), budget).one_skeleton();
  if (auto b = split_builtin(arg)) {
    if (b->first == "Kmp") return graph::SimpleGraph::complete_multipartite(parse_count_list(b->second, "part size"));
    const std::size_t n = parse_count(b->second, "vertex count");
    if (b->first == "K") return graph::SimpleGraph::complete(n);
    if (b->first == "P") return graph::SimpleGraph::path(n);
    if (b->first == "C") return graph::SimpleGraph::cycle(n);
    if (b->first == "E") return graph::SimpleGraph(n);
    throw InputError("unknown graph family '" + b->first + "'");
  }
  return io::graph_from_json(load_json(arg));
}

// rp2 | sphere:n (boundary of the n-simplex), or a complex JSON file.
graph::SimplicialComplex load_complex(const std::string& arg, std::size_t budget) {
  if (arg == "rp2") return graph::rp2_six_vertex();
  if (auto b = split_builtin(arg)) {
    if (b->first == "sphere") return graph::simplex_boundary(parse_count(b->second, "dimension"));
    throw InputError("unknown complex '" + b->first + "'");
  }
  return io::complex_from_json(load_json(arg), budget);
}

RationalVector parse_vector(const std::string& arg) {
  if (!arg.empty() && arg.front() == '[') return io::rational_vector_from_json(load_json(arg));
  RationalVector v;
  std::stringstream ss(arg);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_rational(part));
  return v;
}

// --- plain-text rendering of a JSON result

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_ok = [](const json& v) {
    if (is_scalar(v)) return true;
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (!is_scalar(x) && !(x.is_array() && std::all_of(x.begin(), x.end(), is_scalar))) return false;
    return true;
  };
  auto inline_text = [](const json& v) {
    if (is_scalar(v)) return scalar_text(v);
    std::string s = v.dump();
    return s;
  };
  if (j.is_object()) {
    if (j.contains("text") && j.size() <= 4 && is_scalar(j.at("text"))) {
      os << pad << scalar_text(j.at("text")) << "\n";
      return;
    }
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() && v.contains("text") && is_scalar(v.at("text")))
        os << pad << k << ": " << scalar_text(v.at("text")) << "\n";
      else if (inline_ok(v))
        os << pad << k << ": " << inline_text(v) << "\n";
      else if (v.empty())
        continue;
      else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (inline_ok(v)) {
        os << pad << "- " << inline_text(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

void emit(const Options& o, const json& j) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    render(std::cout, j, 0);
}

// --- module commands

json class_json(const cdga::FiniteCdga& A, const cdga::CohomologyClass& c) {
  return {{"degree", c.degree},
          {"coords", io::to_json(c.coords)},
          {"representative", A.format(A.from_local(c.representative, c.degree))}};
}

json cohomology_json(const cdga::FiniteCdga& A, const cdga::Cohomology& H) {
  json dims = json::array(), bases = json::object();
  for (int k = 0; k <= A.top_degree(); ++k) {
    dims.push_back(H.dim(k));
    json reps = json::array();
    for (std::size_t i = 0; i < H.dim(k); ++i)
      reps.push_back(A.format(A.from_local(H.basis_class(k, i).representative, k)));
    bases["H^" + std::to_string(k)] = reps;
  }
  return {{"betti", dims}, {"basis", bases}};
}

json massey_json(const cdga::FiniteCdga& A, const cdga::MasseyVerdict& m) {
  json j = {{"defined", m.defined}};
  if (!m.defined) {
    j["reason"] = m.reason;
    return j;
  }
  j["representative"] = class_json(A, m.representative);
  j["vanishes"] = m.vanishes;
  json ind = json::array();
  for (const auto& v : m.indeterminacy) ind.push_back(io::to_json(v));
  j["indeterminacy"] = ind;
  return j;
}

json holonomy_json(const CupData& c, const lie::GradedLieRanks& r) {
  json ranks = json::array(), witt = json::array();
  for (const auto& [d, phi] : r.ranks) {
    ranks.push_back(io::to_json(phi));
    witt.push_back(io::to_json(lie::witt_number(c.b1(), d)));
  }
  return {{"b1", c.b1()}, {"b2", c.b2()}, {"phi", ranks}, {"free_lie_ranks", witt}};
}

json subspace_result_json(const CupData& c, const resonance::LinearSubspace& L, std::size_t depth,
                          const Options& o) {
  auto res = resonance::subspace_in_resonance_detail(c, L, depth, o.minor_budget());
  json j = {{"subspace", io::to_json(L)}, {"depth", depth}, {"contained", res.contained}, {"minor_order", res.minor_order}};
  if (!res.contained && !res.witness_polynomial.empty())
    j["witness_minor"] = {{"rows", res.witness_rows}, {"cols", res.witness_cols}, {"polynomial", res.witness_polynomial}};
  if (res.contained) {
    auto iso = resonance::isotropicity(c, L);
    j["isotropy"] = {{"kind", resonance::to_string(iso.kind)}, {"image_dimension", iso.image_dimension}};
    if (!iso.witness.empty()) j["isotropy"]["degenerate_direction"] = io::to_json(iso.witness);
    j["coordinate_extensions"] = resonance::coordinate_extensions(c, L, depth);
  }
  return j;
}

json torus_report_json(const torus::MonodromyMatrix& h, const Options& o) {
  auto cc = torus::character_component(h);
  json factors = json::array();
  for (const auto& f : cc.factors) factors.push_back(io::to_json(f));
  auto q = torus::quasi_kahler_obstruction(h);
  auto j = torus::formality_jordan_obstruction(h);
  json out = {{"matrix", io::to_json(h.matrix())},
              {"symplectic", h.symplectic()},
              {"b1", torus::b1_mapping_torus(h)},
              {"H_1", io::to_json(torus::wang_h1(h))},
              {"char_poly", io::to_json(cc.char_poly)},
              {"factors", factors},
              {"contains_one", cc.contains_one},
              {"jordan_at_one", std::string(to_string(j.verdict))},
              {"jordan_obstruction", j.obstructed ? "obstructed" : "clear"},
              {"quasi_kahler_obstruction", q.obstructed ? "obstructed" : "not_obstructed"}};
  if (q.witness) out["witness_factor"] = io::to_json(*q.witness);
  if (!cc.contains_one) {
    json pts = json::array();
    for (const auto& p : torus::kunneth_v1_isolated(h))
      pts.push_back({{"roots_of", p.factor.poly.str()}, {"unitary", p.unitary}});
    out["isolated_points_of_V1_product"] = pts;
  }
  json conclusions = json::array();
  if (q.obstructed)
    conclusions.push_back({{"statement", "pi_1(N x U_h) is not quasi-Kahler; N x U_h admits no Kahler metric"},
                           {"citation", io::citation_json({"monodromy-unit-eigenvalues",
                                                           "if pi_1(N x U_h) is quasi-Kahler then all eigenvalues "
                                                           "of the monodromy on H_1 have norm one"},
                                                          o.cite)}});
  if (j.obstructed)
    conclusions.push_back({{"statement", "no 1-formal manifold fibers over U_h"},
                           {"citation", io::citation_json(report::rule_by_id("R10").citation, o.cite)}});
  out["conclusions"] = conclusions;
  return out;
}

json family_json(const torus::FamilyReport& r, const Options& o) {
  json concl = json::array();
  for (const auto& c : r.conclusions)
    concl.push_back({{"statement", c},
                     {"citation", io::citation_json({"non-kahler-family",
                                                     "W_{g,n} = S^1 x U_h with monodromy B_{g,n} is rationally "
                                                     "Kahler but carries no Kahler metric"},
                                                    o.cite)}});
  return {{"g", r.g},
          {"n", r.n},
          {"monodromy", io::to_json(r.monodromy)},
          {"symplectic", r.symplectic},
          {"one_is_eigenvalue", r.one_is_eigenvalue},
          {"H_1(U_h)", io::to_json(r.h1_fiber_bundle)},
          {"H_1(W)", io::to_json(r.h1)},
          {"H_1_matches_expected", r.h1_matches},
          {"char_poly", io::to_json(r.char_poly)},
          {"char_poly_matches", r.char_poly_matches},
          {"quasi_kahler_obstruction", r.obstruction.obstructed ? "obstructed" : "not_obstructed"},
          {"conclusions", concl}};
}

json classification_json(const graph::ClassificationVerdict& v, const Options& o, const std::string& statement) {
  json j = {{"quasi_kahler", v.quasi_kahler}, {"kahler", v.kahler}, {"explanation", v.explanation}};
  if (!v.partition.empty()) j["partition"] = v.partition;
  if (!v.violation.empty()) j["induced_K1_plus_K2"] = v.violation;
  j["citation"] = io::citation_json({v.theorem, statement}, o.cite);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations of formality and Kahler obstructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable JSON output");
  app.add_flag("--cite", o.cite, "Include cited statements in the output");
  app.add_option("--max-degree", o.max_degree, "Maximal degree for graded computations")->check(CLI::Range(1, 64));
  app.add_option("--budget", o.budget, "Size budget for enumerations")->check(CLI::PositiveNumber);

  json result;
  int status = 0;

  // linalg
  auto* linalg = app.add_subcommand("linalg", "Exact integer linear algebra")->require_subcommand(1);
  std::string matrix_arg, poly_arg;
  auto add_matrix = [&](CLI::App* s) { s->add_option("--matrix,-m", matrix_arg, "Matrix JSON (file or inline)")->required(); };
  auto* snf = linalg->add_subcommand("snf", "Smith normal form with transforms");
  add_matrix(snf);
  snf->callback([&] {
    auto M = io::integer_matrix_from_json(load_json(matrix_arg));
    auto s = smith_normal_form(M);
    json d = json::array();
    for (const auto& x : s.divisors) d.push_back(io::to_json(x));
    result = {{"D", io::to_json(s.D)}, {"U", io::to_json(s.U)}, {"V", io::to_json(s.V)}, {"divisors", d},
              {"cokernel", io::to_json(cokernel(M))}};
  });
  auto* coker = linalg->add_subcommand("cokernel", "Cokernel of an integer matrix");
  add_matrix(coker);
  coker->callback([&] { result = io::to_json(cokernel(io::integer_matrix_from_json(load_json(matrix_arg)))); });
  auto* rk = linalg->add_subcommand("rank", "Rank and kernel over Q");
  add_matrix(rk);
  rk->callback([&] {
    auto rkr = rank_kernel(io::rational_matrix_from_json(load_json(matrix_arg)));
    json ker = json::array();
    for (const auto& v : rkr.kernel) ker.push_back(io::to_json(v));
    result = {{"rank", rkr.rank}, {"kernel", ker}};
  });
  auto* det = linalg->add_subcommand("det", "Determinant of a square integer matrix");
  add_matrix(det);
  det->callback([&] {
    auto M = io::integer_matrix_from_json(load_json(matrix_arg));
    require(M.square(), "determinant needs a square matrix");
    result = {{"det", io::to_json(determinant(M))}};
  });
  auto* cp = linalg->add_subcommand("charpoly", "Characteristic polynomial and its factorization");
  add_matrix(cp);
  cp->callback([&] {
    auto M = io::integer_matrix_from_json(load_json(matrix_arg));
    require(M.square(), "characteristic polynomial needs a square matrix");
    auto p = char_poly(M);
    json f = json::array();
    for (const auto& x : factor_monic(p)) f.push_back(io::to_json(x));
    result = {{"char_poly", io::to_json(p)}, {"cyclotomic_product", is_cyclotomic_product(p)}, {"factors", f}};
  });
  auto* fac = linalg->add_subcommand("factor", "Factor a monic integer polynomial");
  fac->add_option("--poly,-p", poly_arg, "Coefficients, constant term first (JSON or comma list)")->required();
  fac->callback([&] {
    IntPolynomial p;
    if (!poly_arg.empty() && (poly_arg.front() == '[' || poly_arg.front() == '{'))
      p = io::polynomial_from_json(load_json(poly_arg));
    else {
      std::vector<Integer> c;
      std::stringstream ss(poly_arg);
      std::string part;
      while (std::getline(ss, part, ',')) c.push_back(parse_integer(part));
      p = IntPolynomial(std::move(c));
    }
    require(p.monic(), "polynomial must be monic");
    json f = json::array();
    for (const auto& x : factor_monic(p)) f.push_back(io::to_json(x));
    result = {{"poly", io::to_json(p)}, {"cyclotomic_product", is_cyclotomic_product(p)}, {"factors", f}};
  });
  auto* jd = linalg->add_subcommand("jordan", "Jordan structure at eigenvalue 1");
  add_matrix(jd);
  jd->callback([&] {
    auto M = io::integer_matrix_from_json(load_json(matrix_arg));
    require(M.square(), "Jordan test needs a square matrix");
    result = {{"jordan_at_one", std::string(to_string(jordan_block_at_one(M)))}};
  });

  // cdga
  auto* cd = app.add_subcommand("cdga", "Finite cdga models")->require_subcommand(1);
  std::string cdga_arg = "heisenberg";
  std::string classes_arg;
  auto add_cdga = [&](CLI::App* s) {
    s->add_option("--cdga,-c", cdga_arg, "heisenberg | torus:n | surface:g | wedge:n | cdga JSON")->capture_default_str();
  };
  auto* val = cd->add_subcommand("validate", "Check the cdga axioms");
  add_cdga(val);
  val->callback([&] {
    auto A = load_cdga(cdga_arg);
    auto v = cdga::validate(A);
    result = {{"valid", !v.has_value()}};
    if (v) {
      result["violation"] = std::string(cdga::to_string(v->kind));
      result["message"] = v->message;
      result["indices"] = v->indices;
      status = 2;
    }
  });
  auto checked_cdga = [&] {
    auto A = load_cdga(cdga_arg);
    if (auto v = cdga::validate(A)) throw InputError("invalid cdga: " + v->message);
    return A;
  };
  auto* coh = cd->add_subcommand("cohomology", "Cohomology with representative cocycles");
  add_cdga(coh);
  coh->callback([&] {
    auto A = checked_cdga();
    result = cohomology_json(A, cdga::cohomology(A));
  });
  auto* cupc = cd->add_subcommand("cup", "Cup products of H^1 basis classes");
  add_cdga(cupc);
  cupc->callback([&] {
    auto A = checked_cdga();
    auto H = cdga::cohomology(A);
    json table = json::array();
    for (std::size_t i = 0; i < H.dim(1); ++i)
      for (std::size_t j = i + 1; j < H.dim(1); ++j) {
        if (A.top_degree() < 2) break;
        auto c = cdga::cup(A, H, H.basis_class(1, i), H.basis_class(1, j));
        table.push_back({{"i", i}, {"j", j}, {"product", io::to_json(c.coords)}});
      }
    result = {{"cohomology", cohomology_json(A, H)}, {"cup_H1_H1", table}};
  });
  auto* cupdata = cd->add_subcommand("cupdata", "Extract the degree <= 2 cup data as JSON");
  add_cdga(cupdata);
  cupdata->callback([&] {
    auto A = checked_cdga();
    auto c = cdga::extract_cup_data(A);
    result = io::to_json(c);
    result["is_zero"] = c.is_zero();
  });
  auto* mas = cd->add_subcommand("massey", "Triple Massey products of H^1 basis classes");
  add_cdga(mas);
  mas->add_option("--classes", classes_arg, "i,j,k (0-based H^1 basis indices); default: all triples");
  mas->callback([&] {
    auto A = checked_cdga();
    auto H = cdga::cohomology(A);
    const std::size_t b1 = H.dim(1);
    json list = json::array();
    auto one = [&](std::size_t i, std::size_t j, std::size_t k) {
      auto m = cdga::massey_triple(A, H, H.basis_class(1, i), H.basis_class(1, j), H.basis_class(1, k));
      json e = massey_json(A, m);
      e["classes"] = {i, j, k};
      list.push_back(std::move(e));
    };
    if (!classes_arg.empty()) {
      auto idx = parse_count_list(classes_arg, "class index");
      require(idx.size() == 3, "--classes needs three indices");
      for (auto i : idx) require(i < b1, "class index " + std::to_string(i) + " out of range (b1 = " + std::to_string(b1) + ")");
      one(idx[0], idx[1], idx[2]);
    } else {
      require(b1 <= 8, "too many triples; pass --classes");
      for (std::size_t i = 0; i < b1; ++i)
        for (std::size_t j = 0; j < b1; ++j)
          for (std::size_t k = 0; k < b1; ++k) one(i, j, k);
    }
    bool nonvanishing = false;
    for (const auto& e : list) nonvanishing |= e["defined"].get<bool>() && !e["vanishes"].get<bool>();
    result = {{"products", list}, {"nonvanishing_found", nonvanishing}};
    if (nonvanishing)
      result["conclusion"] = {{"statement", "not 1-formal"},
                              {"citation", io::citation_json({"massey-obstruction",
                                                              "a nonvanishing Massey triple product of degree-one "
                                                              "classes obstructs 1-formality"},
                                                             o.cite)}};
  });

  // holonomy
  auto* hol = app.add_subcommand("holonomy", "Holonomy Lie algebra")->require_subcommand(1);
  std::string cup_arg;
  auto add_cup = [&](CLI::App* s) {
    s->add_option("--cup", cup_arg, "free:n | torus:n | surface:g | cup data JSON")->required();
  };
  auto* ranks = hol->add_subcommand("ranks", "Graded ranks phi_1..phi_D");
  add_cup(ranks);
  ranks->add_option("--max-degree", o.max_degree, "Maximal degree D");
  ranks->callback([&] {
    auto c = load_cup(cup_arg);
    result = holonomy_json(c, lie::holonomy_ranks(c, o.max_degree, o.lie_budget()));
  });

  // resonance
  auto* res = app.add_subcommand("resonance", "Resonance varieties and obstructions")->require_subcommand(1);
  std::string x_arg, sub_arg, comps_arg, cand_arg, lp_arg;
  std::size_t depth = 1, samples = 200;
  std::uint64_t seed = 1;
  auto* mem = res->add_subcommand("member", "Is x in R_d?");
  add_cup(mem);
  mem->add_option("--x", x_arg, "Point of H^1 (comma list or JSON array)")->required();
  mem->add_option("--depth,-d", depth, "Depth d")->capture_default_str();
  mem->callback([&] {
    auto c = load_cup(cup_arg);
    auto x = parse_vector(x_arg);
    require(x.size() == c.b1(), "x must have length b1 = " + std::to_string(c.b1()));
    result = {{"x", io::to_json(x)},
              {"resonance_dimension", resonance::resonance_dimension(c, x)},
              {"depth", depth},
              {"member", resonance::membership(c, x, depth)}};
  });
  auto* comp = res->add_subcommand("component", "Is a linear subspace contained in R_d?");
  add_cup(comp);
  comp->add_option("--subspace,-s", sub_arg, "Subspace JSON")->required();
  comp->add_option("--depth,-d", depth, "Depth d")->capture_default_str();
  comp->callback([&] {
    auto c = load_cup(cup_arg);
    result = subspace_result_json(c, io::subspace_from_json(load_json(sub_arg)), depth, o);
  });
  auto* pos = res->add_subcommand("position", "Isotropy and position test for resonance components");
  add_cup(pos);
  pos->add_option("--components", comps_arg, "JSON array of subspaces")->required();
  pos->callback([&] {
    auto c = load_cup(cup_arg);
    auto p = resonance::position_obstruction(c, io::subspaces_from_json(load_json(comps_arg)));
    json comps = json::array();
    for (const auto& k : p.components)
      comps.push_back({{"index", k.index},
                       {"dimension", k.dimension},
                       {"in_resonance", k.in_resonance},
                       {"isotropy", std::string(resonance::to_string(k.isotropy.kind))},
                       {"ok", k.ok},
                       {"clause", k.clause}});
    result = {{"status", std::string(resonance::to_string(p.status))}, {"components", comps}};
    if (p.offending) result["offending"] = *p.offending;
    result["citation"] = io::citation_json(report::rule_by_id("R6").citation, o.cite);
  });
  auto* sig = res->add_subcommand("sigma", "Upper bound for the BNS invariant from R_1");
  add_cup(sig);
  sig->add_option("--candidates", cand_arg, "JSON array of candidate subspaces");
  sig->add_option("--samples", samples, "Random consistency samples")->capture_default_str();
  sig->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  sig->callback([&] {
    auto c = load_cup(cup_arg);
    std::vector<resonance::LinearSubspace> cands;
    if (!cand_arg.empty()) cands = io::subspaces_from_json(load_json(cand_arg));
    auto s = resonance::sigma_upper_bound(c, cands, samples, seed);
    json pieces = json::array();
    for (const auto& L : s.pieces) pieces.push_back(io::to_json(L));
    result = {{"statement", s.statement},
              {"r1_pieces", pieces},
              {"r1_is_everything", s.r1_is_everything},
              {"samples", s.samples},
              {"samples_in_r1", s.samples_in_r1},
              {"samples_in_r1_outside_pieces", s.samples_in_r1_outside_pieces}};
  });
  auto* alex = res->add_subcommand("alexander", "Single essential variable test");
  alex->add_option("--poly,-p", lp_arg, "Laurent polynomial JSON")->required();
  alex->callback([&] {
    auto d = resonance::alexander_single_variable(io::laurent_from_json(load_json(lp_arg)));
    result = {{"single_variable", d.success}, {"shift", d.shift}};
    if (d.success) {
      result["P"] = io::to_json(d.P);
      result["direction"] = d.direction;
    } else {
      result["non_collinear_support_differences"] = {d.witness_a, d.witness_b};
    }
    result["citation"] = io::citation_json(report::rule_by_id("R7").citation, o.cite);
  });

  // graph
  auto* gr = app.add_subcommand("graph", "Graph groups and flag complexes")->require_subcommand(1);
  std::string graph_arg, complex_arg;
  auto add_graph = [&](CLI::App* s) {
    s->add_option("--graph,-g", graph_arg, "K:n | P:n | C:n | E:n | Kmp:a,b,.. | rp2 | graph JSON")->required();
  };
  auto* craag = gr->add_subcommand("classify-raag", "Kahler / quasi-Kahler right-angled Artin groups");
  add_graph(craag);
  craag->callback([&] {
    auto g = load_graph(graph_arg, o.face_budget());
    result = classification_json(graph::classify_raag(g), o,
                                 "a right-angled Artin group is quasi-Kahler iff the graph is complete multipartite, "
                                 "and Kahler iff the graph is K_n with n even");
  });
  auto* cbb = gr->add_subcommand("classify-bb", "Kahler / quasi-Kahler Bestvina-Brady groups");
  add_graph(cbb);
  cbb->callback([&] {
    auto g = load_graph(graph_arg, o.face_budget());
    auto v = graph::classify_bb(g);
    result = classification_json(v, o,
                                 "a Bestvina-Brady group of a connected graph is quasi-Kahler iff the graph is a tree "
                                 "or a complete multipartite graph with a part of size 1 or with at least three "
                                 "parts all of size >= 2; Kahler iff K_n with n odd");
    result["tree"] = v.is_tree;
  });
  auto* ak = gr->add_subcommand("artin-kernel", "1-formality of the Bestvina-Brady group");
  add_graph(ak);
  ak->callback([&] {
    auto g = load_graph(graph_arg, o.face_budget());
    auto a = graph::artin_kernel_formality(g, o.face_budget());
    result = {{"verdict", a.one_formal ? "one_formal" : "criterion_fails"},
              {"H~_0", io::to_json(a.integral_homology[0])},
              {"H~_1", io::to_json(a.integral_homology[1])},
              {"torsion_warning", a.torsion_warning},
              {"finite_presentation", a.presentation}};
    if (a.failing_degree) result["failing_degree"] = *a.failing_degree;
    result["citation"] = io::citation_json({"artin-kernel-formality",
                                            "the Artin kernel of the diagonal character is 1-formal when the flag "
                                            "complex has vanishing reduced rational homology in degrees <= 1"},
                                           o.cite);
  });
  auto* gh = gr->add_subcommand("homology", "Reduced integral homology of a simplicial complex");
  gh->add_option("--complex,-k", complex_arg, "rp2 | sphere:n | complex JSON");
  gh->add_option("--graph,-g", graph_arg, "Use the flag complex of this graph");
  gh->callback([&] {
    require(complex_arg.empty() != graph_arg.empty(), "pass exactly one of --complex or --graph");
    auto K = complex_arg.empty() ? graph::flag_complex(load_graph(graph_arg, o.face_budget()), o.face_budget())
                                 : load_complex(complex_arg, o.face_budget());
    json h = json::array();
    const std::size_t top = K.dimension() < 0 ? 0 : static_cast<std::size_t>(K.dimension());
    for (const auto& a : graph::simplicial_homology(K, top)) h.push_back(io::to_json(a));
    result = {{"complex", io::to_json(K)}, {"reduced_homology", h}};
  });
  auto* fl = gr->add_subcommand("flag", "Flag complex of a graph");
  add_graph(fl);
  fl->callback([&] {
    auto K = graph::flag_complex(load_graph(graph_arg, o.face_budget()), o.face_budget());
    result = io::to_json(K);
  });
  auto* sd = gr->add_subcommand("subdivide", "Barycentric subdivision and its 1-skeleton");
  sd->add_option("--complex,-k", complex_arg, "rp2 | sphere:n | complex JSON")->required();
  sd->callback([&] {
    auto K = graph::barycentric_subdivision(load_complex(complex_arg, o.face_budget()), o.face_budget());
    result = {{"complex", io::to_json(K)}, {"one_skeleton", io::to_json(K.one_skeleton())}, {"flag", graph::is_flag(K)}};
  });

  // torus
  auto* tor = app.add_subcommand("torus", "Mapping tori of surface diffeomorphisms")->require_subcommand(1);
  std::size_t g_val = 1, g_max = 5;
  long n_val = 2, n_max = 20;
  auto* ta = tor->add_subcommand("analyze", "Homology and obstructions from the monodromy on H_1");
  ta->add_option("--matrix,-m", matrix_arg, "Monodromy matrix JSON")->required();
  ta->callback([&] {
    result = torus_report_json(torus::MonodromyMatrix(io::integer_matrix_from_json(load_json(matrix_arg))), o);
  });
  auto* tf = tor->add_subcommand("family", "The non-Kahler family W_{g,n}");
  tf->add_option("--g", g_val, "Genus g >= 1")->required();
  tf->add_option("--n", n_val, "Parameter n > 1")->required();
  tf->callback([&] { result = family_json(torus::non_kahler_family(g_val, n_val), o); });
  auto* ts = tor->add_subcommand("sweep", "Check W_{g,n} over a parameter box");
  ts->add_option("--g-max", g_max, "Largest genus")->capture_default_str();
  ts->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  ts->callback([&] {
    require(g_max >= 1 && n_max >= 2, "need g-max >= 1 and n-max >= 2");
    json rows = json::array();
    bool all_ok = true;
    for (std::size_t g = 1; g <= g_max; ++g)
      for (long n = 2; n <= n_max; ++n) {
        auto r = torus::non_kahler_family(g, n);
        const bool ok = r.h1_matches && r.char_poly_matches && r.obstruction.obstructed;
        all_ok &= ok;
        rows.push_back({g, n, r.h1.str(), r.obstruction.obstructed ? "obstructed" : "not_obstructed", ok});
      }
    result = {{"columns", {"g", "n", "H_1(W)", "obstruction", "ok"}}, {"rows", rows}, {"all_ok", all_ok}};
  });

  // reasoning
  std::string facts_arg;
  auto* inf = app.add_subcommand("infer", "Forward-chain the cited implications over a fact set");
  inf->add_option("--facts,-f", facts_arg, "Fact set JSON, e.g. {\"b1_le_1\": true}")->required();
  inf->callback([&] {
    auto rep = report::infer(io::facts_from_json(load_json(facts_arg)));
    result = io::to_json(rep, o.cite);
    if (!rep.consistent()) status = 4;
  });
  auto* an = app.add_subcommand("analyze", "Run module computations and reason over the outcomes");
  std::string an_cdga, an_graph, an_matrix;
  bool an_bb = false;
  an->add_option("--cdga", an_cdga, "heisenberg | torus:n | surface:g | wedge:n | cdga JSON");
  an->add_option("--graph", an_graph, "Graph (see graph subcommands)");
  an->add_flag("--bb", an_bb, "Analyze the Bestvina-Brady group instead of the RAAG");
  an->add_option("--matrix", an_matrix, "Monodromy matrix JSON");
  an->add_option("--facts,-f", facts_arg, "Additional known facts");
  an->callback([&] {
    const int given = !an_cdga.empty() + !an_graph.empty() + !an_matrix.empty();
    require(given == 1, "pass exactly one of --cdga, --graph, --matrix");
    report::FactSet extra;
    if (!facts_arg.empty()) extra = io::facts_from_json(load_json(facts_arg));
    report::AnalysisReport r;
    if (!an_cdga.empty())
      r = report::analyze_cdga(load_cdga(an_cdga), an_cdga, extra);
    else if (!an_graph.empty())
      r = report::analyze_graph(load_graph(an_graph, o.face_budget()), an_bb, extra);
    else
      r = report::analyze_monodromy(io::integer_matrix_from_json(load_json(an_matrix)), extra);
    result = io::to_json(r, o.cite);
    if (!r.inference.consistent()) status = 4;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  emit(o, result);
  return status;
}
