#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "formality/errors.hpp"
#include "formality/lie/lyndon.hpp"
#include "formality/linalg/matrix.hpp"

namespace formality::lie {

/// Homogeneous element of the tensor algebra: word code -> coefficient, sorted
/// by code. A word of length d over n letters is coded in base n, first letter
/// most significant, so code order is lexicographic order.
using TensorElement = std::vector<std::pair<std::uint64_t, Rational>>;

inline std::uint64_t word_code(const Word& w, std::size_t n) {
  std::uint64_t c = 0;
  for (auto x : w) c = c * n + x;
  return c;
}

inline std::uint64_t power(std::size_t n, std::size_t d) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < d; ++i) p *= n;
  return p;
}

inline TensorElement normalize(std::map<std::uint64_t, Rational>&& m) {
  TensorElement out;
  out.reserve(m.size());
  for (auto& [k, v] : m)
    if (v != 0) out.emplace_back(k, std::move(v));
  return out;
}

/// [a, b] = ab - ba for homogeneous a (degree da) and b (degree db).
inline TensorElement commutator(const TensorElement& a, std::size_t da, const TensorElement& b, std::size_t db,
                                std::size_t n) {
  const std::uint64_t shift_a = power(n, db), shift_b = power(n, da);
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [ca, xa] : a)
    for (const auto& [cb, xb] : b) {
      Rational k = xa * xb;
      acc[ca * shift_a + cb] += k;
      acc[cb * shift_b + ca] -= k;
    }
  return normalize(std::move(acc));
}

/// Element of the free Lie algebra, in Lyndon-basis coordinates of one degree.
struct LieElement {
  std::size_t degree = 1;
  RationalVector coords;

  bool is_zero() const { return is_zero_vector(coords); }
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

/// Free Lie algebra on n generators, truncated at a maximal degree, realised
/// inside the tensor algebra through the standard bracketings of Lyndon words.
class FreeLieAlgebra {
 public:
  FreeLieAlgebra(std::size_t generators, std::size_t max_degree) : n_(generators), max_degree_(max_degree) {
    require(max_degree >= 1, "free Lie algebra needs max degree >= 1");
    require(generators == 0 || power_fits(generators, max_degree), "tensor degree too large to index");
    words_.resize(max_degree + 1);
    expansion_.resize(max_degree + 1);
    index_.resize(max_degree + 1);
    for (std::size_t d = 1; d <= max_degree; ++d) {
      words_[d] = lyndon_words(n_, d);
      for (std::size_t i = 0; i < words_[d].size(); ++i) {
        const Word& w = words_[d][i];
        index_[d][word_code(w, n_)] = i;
        if (d == 1) {
          expansion_[d].push_back({{w[0], Rational(1)}});
          continue;
        }
        auto [u, v] = standard_factorization(w);
        expansion_[d].push_back(commutator(expansion_of(u), u.size(), expansion_of(v), v.size(), n_));
      }
    }
  }

  std::size_t generators() const { return n_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t dimension(std::size_t d) const { return words_.at(d).size(); }
  const std::vector<Word>& basis_words(std::size_t d) const { return words_.at(d); }

  LieElement generator(std::size_t i) const {
    require(i < n_, "generator index out of range");
    LieElement e{1, RationalVector(n_)};
    e.coords[i] = 1;
    return e;
  }

  LieElement basis_element(std::size_t d, std::size_t i) const {
    LieElement e{d, RationalVector(dimension(d))};
    e.coords.at(i) = 1;
    return e;
  }

  TensorElement expand(const LieElement& x) const {
    check(x);
    std::map<std::uint64_t, Rational> acc;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      if (x.coords[i] == 0) continue;
      for (const auto& [code, c] : expansion_[x.degree][i]) acc[code] += x.coords[i] * c;
    }
    return normalize(std::move(acc));
  }

  /// Converts a homogeneous Lie polynomial back to Lyndon coordinates. The
  /// smallest word in the support of a nonzero Lie element is Lyndon and
  /// occurs in exactly one basis expansion with coefficient 1 as its minimum,
  /// so repeated subtraction terminates.
  LieElement to_lyndon(TensorElement t, std::size_t d) const {
    require(d >= 1 && d <= max_degree_, "degree out of range");
    LieElement out{d, RationalVector(dimension(d))};
    std::map<std::uint64_t, Rational> rest(t.begin(), t.end());
    while (!rest.empty()) {
      auto [code, c] = *rest.begin();
      auto it = index_[d].find(code);
      if (it == index_[d].end()) throw InternalError("tensor element is not a Lie polynomial");
      out.coords[it->second] += c;
      for (const auto& [k, v] : expansion_[d][it->second]) {
        auto& slot = rest[k];
        slot -= c * v;
        if (slot == 0) rest.erase(k);
      }
    }
    return out;
  }

  LieElement bracket(const LieElement& u, const LieElement& v) const {
    check(u);
    check(v);
    const std::size_t d = u.degree + v.degree;
    require(d <= max_degree_, "bracket exceeds the truncation degree");
    return to_lyndon(commutator(expand(u), u.degree, expand(v), v.degree, n_), d);
  }

  LieElement combine(const LieElement& a, const Rational& ka, const LieElement& b, const Rational& kb) const {
    require(a.degree == b.degree, "linear combination of different degrees");
    LieElement out{a.degree, RationalVector(a.coords.size())};
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = ka * a.coords[i] + kb * b.coords[i];
    return out;
  }

 private:
  static bool power_fits(std::size_t n, std::size_t d) {
    long double p = 1;
    for (std::size_t i = 0; i < d; ++i) p *= static_cast<long double>(n);
    return p < 4.0e18L;
  }

  void check(const LieElement& x) const {
    require(x.degree >= 1 && x.degree <= max_degree_, "Lie element degree out of range");
    require(x.coords.size() == dimension(x.degree), "Lie element has the wrong number of coordinates");
  }

  const TensorElement& expansion_of(const Word& w) const {
    return expansion_[w.size()][index_[w.size()].at(word_code(w, n_))];
  }

  std::size_t n_;
  std::size_t max_degree_;
  std::vector<std::vector<Word>> words_;
  std::vector<std::vector<TensorElement>> expansion_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
};

}  // namespace formality::lie
