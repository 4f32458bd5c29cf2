#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "formality/linalg/rank.hpp"

namespace formality::cdga {

/// Sparse element of a cdga: global basis index -> coefficient. No zeros stored.
using Element = std::map<std::size_t, Rational>;

inline void add_to(Element& acc, std::size_t index, const Rational& k) {
  if (k == 0) return;
  auto [it, inserted] = acc.try_emplace(index, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) acc.erase(it);
  }
}

inline void add_to(Element& acc, const Element& e, const Rational& k = 1) {
  for (const auto& [i, c] : e) add_to(acc, i, c * k);
}

/// Finite-dimensional graded-commutative differential graded algebra over Q
/// with an explicit homogeneous basis.
///
/// Basis elements are stored in nondecreasing degree order; element 0 is the
/// unit. Differentials and products are kept as sparse elements in global
/// coordinates so that malformed input (wrong degrees) stays representable and
/// validate() can report it.
class FiniteCdga {
 public:
  struct BasisElement {
    std::string name;
    int degree = 0;
  };

  FiniteCdga() = default;
  explicit FiniteCdga(std::vector<BasisElement> basis) : basis_(std::move(basis)), d_(basis_.size()) {
    for (std::size_t i = 1; i < basis_.size(); ++i)
      require(basis_[i - 1].degree <= basis_[i].degree, "cdga basis must be sorted by degree");
    require(basis_.empty() || basis_.front().degree >= 0, "cdga degrees must be nonnegative");
  }

  std::size_t size() const { return basis_.size(); }
  const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  int top_degree() const { return basis_.empty() ? -1 : basis_.back().degree; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].name == name) return i;
    return std::nullopt;
  }

  /// Global index of the first basis element of degree k.
  std::size_t offset(int k) const {
    std::size_t i = 0;
    while (i < basis_.size() && basis_[i].degree < k) ++i;
    return i;
  }
  std::size_t dim(int k) const {
    if (k < 0) return 0;
    return offset(k + 1) - offset(k);
  }

  void set_differential(std::size_t i, Element value) { d_.at(i) = std::move(value); }
  const Element& differential(std::size_t i) const { return d_.at(i); }

  /// Sets e_i * e_j. When only one order is given, the other is implied by
  /// graded commutativity; supplying both lets validate() check them.
  void set_product(std::size_t i, std::size_t j, Element value) {
    require(i < size() && j < size(), "product index out of range");
    mult_[{i, j}] = std::move(value);
  }

  /// e_i * e_j. Missing entries fall back to graded commutativity of a stored
  /// (j, i), then to the unit rule, then to zero.
  Element product(std::size_t i, std::size_t j) const {
    if (auto it = mult_.find({i, j}); it != mult_.end()) return it->second;
    if (auto it = mult_.find({j, i}); it != mult_.end()) {
      Element e = it->second;
      if ((degree(i) * degree(j)) % 2 != 0)
        for (auto& [k, c] : e) c = -c;
      return e;
    }
    if (i == 0 && !basis_.empty() && degree(0) == 0) return Element{{j, 1}};
    if (j == 0 && !basis_.empty() && degree(0) == 0) return Element{{i, 1}};
    return {};
  }

  const std::map<std::pair<std::size_t, std::size_t>, Element>& stored_products() const { return mult_; }

  Element multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b) add_to(out, product(i, j), ci * cj);
    return out;
  }

  Element d(const Element& a) const {
    Element out;
    for (const auto& [i, c] : a) add_to(out, d_.at(i), c);
    return out;
  }

  // Dense local coordinates in degree k <-> sparse global elements.
  RationalVector to_local(const Element& e, int k) const {
    const std::size_t off = offset(k), n = dim(k);
    RationalVector v(n);
    for (const auto& [i, c] : e) {
      require(i >= off && i < off + n, "element is not homogeneous of the expected degree");
      v[i - off] = c;
    }
    return v;
  }
  Element from_local(std::span<const Rational> v, int k) const {
    const std::size_t off = offset(k);
    Element e;
    for (std::size_t i = 0; i < v.size(); ++i) add_to(e, off + i, v[i]);
    return e;
  }

  /// Matrix of d: A^k -> A^{k+1}, shape dim(k+1) x dim(k).
  RationalMatrix differential_matrix(int k) const {
    RationalMatrix m(dim(k + 1), dim(k));
    const std::size_t off = offset(k);
    for (std::size_t c = 0; c < dim(k); ++c) {
      RationalVector col = to_local(d_[off + c], k + 1);
      for (std::size_t r = 0; r < col.size(); ++r) m(r, c) = col[r];
    }
    return m;
  }

  std::string format(const Element& e) const {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : e) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      Rational mag = abs(c);
      if (mag != 1) os << to_string(mag) << "*";
      os << basis_[i].name;
      first = false;
    }
    return os.str();
  }

 private:
  std::vector<BasisElement> basis_;
  std::vector<Element> d_;
  std::map<std::pair<std::size_t, std::size_t>, Element> mult_;
};

struct Violation {
  enum class Kind { degree, d_squared, commutativity, leibniz, unit, associativity };
  Kind kind;
  std::vector<std::size_t> indices;  // basis indices involved
  std::string message;
};

inline std::string_view to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::degree: return "degree";
    case Violation::Kind::d_squared: return "d_squared";
    case Violation::Kind::commutativity: return "commutativity";
    case Violation::Kind::leibniz: return "leibniz";
    case Violation::Kind::unit: return "unit";
    case Violation::Kind::associativity: return "associativity";
  }
  return "?";
}

/// Checks every cdga axiom exactly; returns the first violated identity.
inline std::optional<Violation> validate(const FiniteCdga& A) {
  using K = Violation::Kind;
  const std::size_t n = A.size();
  auto homogeneous = [&](const Element& e, int deg) {
    for (const auto& [i, c] : e)
      if (A.degree(i) != deg) return false;
    return true;
  };

  if (A.dim(0) != 1 || A.degree(0) != 0)
    return Violation{K::unit, {}, "degree-0 component must be one-dimensional (spanned by the unit)"};
  for (std::size_t j = 0; j < n; ++j) {
    if (A.product(0, j) != Element{{j, 1}} || A.product(j, 0) != Element{{j, 1}})
      return Violation{K::unit, {0, j}, "unit does not act as identity on " + A.basis(j).name};
  }
  if (!A.differential(0).empty()) return Violation{K::unit, {0}, "d(1) must vanish"};

  for (std::size_t i = 0; i < n; ++i)
    if (!homogeneous(A.differential(i), A.degree(i) + 1))
      return Violation{K::degree, {i}, "d(" + A.basis(i).name + ") = " + A.format(A.differential(i)) +
                                           " is not of degree " + std::to_string(A.degree(i) + 1)};
  for (const auto& [ij, e] : A.stored_products())
    if (!homogeneous(e, A.degree(ij.first) + A.degree(ij.second)))
      return Violation{K::degree, {ij.first, ij.second},
                       "product " + A.basis(ij.first).name + "*" + A.basis(ij.second).name + " has the wrong degree"};

  for (std::size_t i = 0; i < n; ++i) {
    Element dd = A.d(A.differential(i));
    if (!dd.empty()) return Violation{K::d_squared, {i}, "d(d(" + A.basis(i).name + ")) = " + A.format(dd)};
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Element ab = A.product(i, j);
      Element ba = A.product(j, i);
      const Rational sign = (A.degree(i) * A.degree(j)) % 2 ? -1 : 1;
      Element diff = ab;
      add_to(diff, ba, -sign);
      if (!diff.empty())
        return Violation{K::commutativity, {i, j},
                         A.basis(i).name + "*" + A.basis(j).name + " != (-1)^{|a||b|} " + A.basis(j).name + "*" +
                             A.basis(i).name};
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element ei{{i, 1}}, ej{{j, 1}};
      Element lhs = A.d(A.product(i, j));
      Element rhs = A.multiply(A.differential(i), ej);
      add_to(rhs, A.multiply(ei, A.differential(j)), A.degree(i) % 2 ? -1 : 1);
      add_to(lhs, rhs, -1);
      if (!lhs.empty())
        return Violation{K::leibniz, {i, j}, "Leibniz rule fails on " + A.basis(i).name + "*" + A.basis(j).name};
    }

  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 1; k < n; ++k) {
        if (A.degree(i) + A.degree(j) + A.degree(k) > A.top_degree()) continue;
        const Element ei{{i, 1}}, ek{{k, 1}};
        Element lhs = A.multiply(A.product(i, j), ek);
        add_to(lhs, A.multiply(ei, A.product(j, k)), -1);
        if (!lhs.empty())
          return Violation{K::associativity, {i, j, k},
                           "associativity fails on " + A.basis(i).name + "," + A.basis(j).name + "," +
                               A.basis(k).name};
      }
  return std::nullopt;
}

}  // namespace formality::cdga
