#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "formality/cdga/cdga.hpp"
#include "formality/cup_data.hpp"
#include "formality/graph/complex.hpp"
#include "formality/linalg/polynomial.hpp"
#include "formality/linalg/smith.hpp"
#include "formality/resonance/polynomials.hpp"
#include "formality/resonance/resonance.hpp"

namespace formality::io {

using nlohmann::json;

// --- scalars: integers as JSON numbers when they fit, otherwise strings;
// non-integral rationals as "p/q".

inline json to_json(const Integer& a) {
  if (a >= std::numeric_limits<long long>::min() && a <= std::numeric_limits<long long>::max())
    return static_cast<long long>(a);
  return a.str();
}

inline json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(numerator(q));
  return to_string(q);
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

inline std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// --- vectors and matrices

inline json to_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline RationalVector rational_vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

template <class T>
json to_json(const Matrix<T>& m) {
  json e = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    e.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

/// {"rows", "cols", "entries"} or a bare array of rows.
inline RationalMatrix rational_matrix_from_json(const json& j) {
  const json& entries = j.is_array() ? j : field(j, "entries");
  if (!entries.is_array()) throw InputError("matrix entries must be an array of rows");
  std::size_t rows = entries.size();
  std::size_t cols = rows ? entries.front().size() : 0;
  if (j.is_object()) {
    rows = size_from_json(field(j, "rows"), "rows");
    cols = size_from_json(field(j, "cols"), "cols");
    if (entries.size() != rows) throw InputError("matrix has " + std::to_string(entries.size()) + " rows, expected " + std::to_string(rows));
  }
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols)
      throw InputError("matrix row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(entries[r][c]);
  }
  return m;
}

inline IntegerMatrix integer_matrix_from_json(const json& j) {
  const RationalMatrix q = rational_matrix_from_json(j);
  IntegerMatrix m(q.rows(), q.cols());
  for (std::size_t r = 0; r < q.rows(); ++r)
    for (std::size_t c = 0; c < q.cols(); ++c) {
      if (!is_integer(q(r, c))) throw InputError("expected an integer matrix, found " + to_string(q(r, c)));
      m(r, c) = numerator(q(r, c));
    }
  return m;
}

// --- polynomials and groups

inline json to_json(const IntPolynomial& p) {
  json c = json::array();
  for (long i = 0; i <= p.degree(); ++i) c.push_back(to_json(p.coeff(static_cast<std::size_t>(i))));
  return {{"coeffs", c}, {"text", p.str()}};
}

inline IntPolynomial polynomial_from_json(const json& j) {
  const json& c = j.is_array() ? j : field(j, "coeffs");
  std::vector<Integer> coeffs;
  for (const auto& x : c) coeffs.push_back(integer_from_json(x));
  return IntPolynomial(std::move(coeffs));
}

inline json to_json(const AbelianGroup& g) {
  json t = json::array();
  for (const auto& x : g.torsion) t.push_back(to_json(x));
  return {{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.str()}};
}

inline json to_json(const PolyFactor& f) {
  json j = {{"poly", to_json(f.poly)},
            {"multiplicity", f.multiplicity},
            {"cyclotomic", f.cyclotomic},
            {"certified_irreducible", f.certified_irreducible}};
  if (f.cyclotomic) j["cyclotomic_index"] = f.cyclotomic_index;
  return j;
}

// --- cup data: {"b1", "b2", "mu": {"i,j": [...]}} with 0-based i < j

inline json to_json(const CupData& c) {
  json mu = json::object();
  for (std::size_t p = 0; p < c.pairs(); ++p) {
    const auto& v = c.mu(p);
    if (is_zero_vector(v)) continue;
    auto [i, j] = c.pair_at(p);
    mu[std::to_string(i) + "," + std::to_string(j)] = to_json(v);
  }
  return {{"b1", c.b1()}, {"b2", c.b2()}, {"mu", mu}};
}

inline CupData cup_data_from_json(const json& j) {
  const std::size_t b1 = size_from_json(field(j, "b1"), "b1");
  const std::size_t b2 = size_from_json(field(j, "b2"), "b2");
  CupData c(b1, b2);
  if (!j.contains("mu")) return c;
  const json& mu = j.at("mu");
  if (!mu.is_object()) throw InputError("\"mu\" must be an object keyed by \"i,j\"");
  for (const auto& [key, val] : mu.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("bad mu key \"" + key + "\", expected \"i,j\"");
    std::size_t i = 0, k = 0;
    try {
      i = std::stoul(key.substr(0, comma));
      k = std::stoul(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw InputError("bad mu key \"" + key + "\"");
    }
    require(i < b1 && k < b1 && i != k, "mu key \"" + key + "\" out of range");
    RationalVector v = rational_vector_from_json(val);
    require(v.size() == b2, "mu value for \"" + key + "\" must have length b2");
    c.set(i, k, std::move(v));
  }
  return c;
}

// --- subspaces and Laurent polynomials

inline json to_json(const resonance::LinearSubspace& L) {
  json b = json::array();
  for (const auto& v : L.basis()) b.push_back(to_json(v));
  return {{"ambient", L.ambient()}, {"basis", b}};
}

inline resonance::LinearSubspace subspace_from_json(const json& j) {
  const std::size_t n = size_from_json(field(j, "ambient"), "ambient");
  std::vector<RationalVector> basis;
  for (const auto& v : field(j, "basis")) basis.push_back(rational_vector_from_json(v));
  return resonance::LinearSubspace(n, std::move(basis));
}

inline std::vector<resonance::LinearSubspace> subspaces_from_json(const json& j) {
  std::vector<resonance::LinearSubspace> out;
  if (j.is_array())
    for (const auto& s : j) out.push_back(subspace_from_json(s));
  else
    out.push_back(subspace_from_json(j));
  return out;
}

inline json to_json(const resonance::LaurentPoly& p) {
  json t = json::array();
  for (const auto& [e, c] : p.terms()) t.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"vars", p.vars()}, {"terms", t}};
}

inline resonance::LaurentPoly laurent_from_json(const json& j) {
  resonance::LaurentPoly p(size_from_json(field(j, "vars"), "vars"));
  for (const auto& t : field(j, "terms")) {
    const json& e = field(t, "exp");
    if (!e.is_array()) throw InputError("Laurent exponent must be an array");
    std::vector<long> exp;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw InputError("Laurent exponents must be integers");
      exp.push_back(x.get<long>());
    }
    p.add_term(exp, integer_from_json(field(t, "coeff")));
  }
  return p;
}

// --- graphs and complexes

inline json to_json(const graph::SimpleGraph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  return {{"n", g.vertices()}, {"edges", e}};
}

inline graph::SimpleGraph graph_from_json(const json& j) {
  graph::SimpleGraph g(size_from_json(field(j, "n"), "n"));
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges must be pairs [u, v]");
    g.add_edge(size_from_json(e[0], "edge endpoint"), size_from_json(e[1], "edge endpoint"));
  }
  return g;
}

inline json to_json(const graph::SimplicialComplex& K) {
  json f = json::array();
  for (const auto& face : K.facets()) f.push_back(face);
  json counts = json::array();
  for (int d = 0; d <= K.dimension(); ++d) counts.push_back(K.count(static_cast<std::size_t>(d)));
  return {{"n", K.vertices()}, {"facets", f}, {"f_vector", counts}};
}

inline graph::SimplicialComplex complex_from_json(const json& j, std::size_t budget = graph::default_face_budget) {
  const std::size_t n = size_from_json(field(j, "n"), "n");
  std::vector<graph::Face> facets;
  for (const auto& f : field(j, "facets")) {
    graph::Face face;
    for (const auto& v : f) face.push_back(size_from_json(v, "facet vertex"));
    facets.push_back(std::move(face));
  }
  return graph::SimplicialComplex::from_facets(n, facets, budget);
}

// --- cdga: {"degrees": ..., "diff": {...}, "mult": [[i, j, terms], ...]}
// degrees: [["1",0],["a",1],...], [{"name":..,"degree":..}], or {"a":1,...}.
// Basis references are names or global indices; terms are {"name": coeff}
// or [[name, coeff], ...].

inline cdga::FiniteCdga cdga_from_json(const json& j) {
  std::vector<cdga::FiniteCdga::BasisElement> basis;
  const json& deg = field(j, "degrees");
  if (deg.is_object()) {
    for (const auto& [name, d] : deg.items()) {
      if (!d.is_number_integer()) throw InputError("degree of \"" + name + "\" must be an integer");
      basis.push_back({name, d.get<int>()});
    }
  } else if (deg.is_array()) {
    for (const auto& b : deg) {
      if (b.is_array() && b.size() == 2 && b[0].is_string() && b[1].is_number_integer())
        basis.push_back({b[0].get<std::string>(), b[1].get<int>()});
      else if (b.is_object())
        basis.push_back({field(b, "name").get<std::string>(), field(b, "degree").get<int>()});
      else
        throw InputError("bad basis entry " + b.dump());
    }
  } else {
    throw InputError("\"degrees\" must be an object or an array");
  }
  std::stable_sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = i + 1; k < basis.size(); ++k)
      require(basis[i].name != basis[k].name, "duplicate basis name \"" + basis[i].name + "\"");
  cdga::FiniteCdga A(basis);

  auto index = [&](const json& r) -> std::size_t {
    if (r.is_number_integer()) {
      const auto i = size_from_json(r, "basis index");
      require(i < A.size(), "basis index " + std::to_string(i) + " out of range");
      return i;
    }
    if (r.is_string()) {
      auto i = A.index_of(r.get<std::string>());
      if (!i) throw InputError("unknown basis element \"" + r.get<std::string>() + "\"");
      return *i;
    }
    throw InputError("basis reference must be a name or an index");
  };
  auto element = [&](const json& t) {
    cdga::Element e;
    if (t.is_object()) {
      for (const auto& [name, c] : t.items()) cdga::add_to(e, index(json(name)), rational_from_json(c));
    } else if (t.is_array()) {
      for (const auto& p : t) {
        if (!p.is_array() || p.size() != 2) throw InputError("terms must be [basis, coeff] pairs");
        cdga::add_to(e, index(p[0]), rational_from_json(p[1]));
      }
    } else {
      throw InputError("element must be an object or an array of terms");
    }
    return e;
  };

  if (j.contains("diff")) {
    const json& d = j.at("diff");
    if (!d.is_object()) throw InputError("\"diff\" must map basis names to elements");
    for (const auto& [name, val] : d.items()) A.set_differential(index(json(name)), element(val));
  }
  if (j.contains("mult")) {
    for (const auto& m : j.at("mult")) {
      if (!m.is_array() || m.size() != 3) throw InputError("mult entries must be [i, j, terms]");
      A.set_product(index(m[0]), index(m[1]), element(m[2]));
    }
  }
  return A;
}

inline json to_json(const cdga::FiniteCdga& A) {
  json deg = json::array(), diff = json::object(), mult = json::array();
  auto element = [&](const cdga::Element& e) {
    json t = json::array();
    for (const auto& [i, c] : e) t.push_back({A.basis(i).name, to_json(c)});
    return t;
  };
  for (std::size_t i = 0; i < A.size(); ++i) {
    deg.push_back({A.basis(i).name, A.degree(i)});
    if (!A.differential(i).empty()) diff[A.basis(i).name] = element(A.differential(i));
  }
  for (const auto& [key, val] : A.stored_products())
    mult.push_back({A.basis(key.first).name, A.basis(key.second).name, element(val)});
  return {{"degrees", deg}, {"diff", diff}, {"mult", mult}};
}

}  // namespace formality::io
