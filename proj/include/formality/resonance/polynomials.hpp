#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "formality/linalg/numeric.hpp"

namespace formality::resonance {

/// Polynomial in n commuting variables with rational coefficients.
class MultiPoly {
 public:
  using Exponent = std::vector<unsigned>;

  explicit MultiPoly(std::size_t vars = 0) : vars_(vars) {}

  static MultiPoly constant(std::size_t vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Exponent(vars, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t vars, std::size_t i, const Rational& c = 1) {
    MultiPoly p(vars);
    Exponent e(vars, 0);
    e.at(i) = 1;
    p.add_term(e, c);
    return p;
  }

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  void add_term(const Exponent& e, const Rational& c) {
    require(e.size() == vars_, "monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require(a.vars_ == b.vars_, "multiplying polynomials in different rings");
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.vars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  Rational evaluate(std::span<const Rational> x) const {
    require(x.size() == vars_, "evaluation point has the wrong length");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational m = c;
      for (std::size_t i = 0; i < vars_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) m *= x[i];
      total += m;
    }
    return total;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      os << (first ? "" : " + ") << to_string(c);
      for (std::size_t i = 0; i < vars_; ++i)
        if (e[i]) os << "*s" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
      first = false;
    }
    return os.str();
  }

 private:
  std::size_t vars_;
  std::map<Exponent, Rational> terms_;
};

/// Laurent polynomial in n variables with integer coefficients.
class LaurentPoly {
 public:
  using Exponent = std::vector<long>;

  explicit LaurentPoly(std::size_t vars = 0) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Integer>& terms() const { return terms_; }

  void add_term(const Exponent& e, const Integer& c) {
    require(e.size() == vars_, "Laurent monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t vars_;
  std::map<Exponent, Integer> terms_;
};

}  // namespace formality::resonance
