#pragma once

#include <algorithm>
#include <numeric>
#include <optional>

#include "formality/linalg/polynomial.hpp"
#include "formality/resonance/polynomials.hpp"

namespace formality::resonance {

struct SingleVariableDecomposition {
  bool success = false;
  IntPolynomial P;                       // Delta = t^shift * P(t^e)
  std::vector<long> direction;           // primitive e, first nonzero entry positive; zero if constant
  std::vector<long> shift;               // translation applied (lex-minimal support point)
  std::vector<long> witness_a, witness_b;  // non-collinear support differences on failure
};

/// Tests whether Delta has a single essential variable, Delta = t^s * P(t^e),
/// after normalising by the monomial unit t^s with s the lexicographically
/// minimal support point.
inline SingleVariableDecomposition alexander_single_variable(const LaurentPoly& delta) {
  SingleVariableDecomposition out;
  const std::size_t n = delta.vars();
  out.direction.assign(n, 0);
  out.shift.assign(n, 0);
  if (delta.is_zero()) {
    out.success = true;
    return out;
  }
  const auto& terms = delta.terms();
  const auto& base = terms.begin()->first;  // std::map order is lexicographic
  out.shift = base;

  std::vector<std::pair<std::vector<long>, Integer>> diffs;
  for (const auto& [e, c] : terms) {
    std::vector<long> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = e[i] - base[i];
    diffs.emplace_back(std::move(d), c);
  }
  // Primitive direction from the first nonzero difference.
  const std::vector<long>* first = nullptr;
  for (const auto& [d, c] : diffs)
    if (std::any_of(d.begin(), d.end(), [](long x) { return x != 0; })) {
      first = &d;
      break;
    }
  if (!first) {
    out.success = true;
    out.P = IntPolynomial(std::vector<Integer>{terms.begin()->second});
    return out;
  }
  long g = 0;
  for (long x : *first) g = std::gcd(g, std::labs(x));
  for (std::size_t i = 0; i < n; ++i) out.direction[i] = (*first)[i] / g;

  std::vector<Integer> coeffs;
  for (const auto& [d, c] : diffs) {
    // d must equal k * e with integer k >= 0 (lex-positivity gives k >= 0)
    std::optional<long> k;
    bool collinear = true;
    for (std::size_t i = 0; i < n && collinear; ++i) {
      if (out.direction[i] == 0) {
        collinear = d[i] == 0;
        continue;
      }
      if (d[i] % out.direction[i] != 0) {
        collinear = false;
        break;
      }
      long ki = d[i] / out.direction[i];
      if (k && *k != ki) collinear = false;
      k = ki;
    }
    if (!collinear || !k || *k < 0) {
      out.success = false;
      out.witness_a = *first;
      out.witness_b = d;
      out.P = IntPolynomial{};
      return out;
    }
    if (coeffs.size() <= static_cast<std::size_t>(*k)) coeffs.resize(static_cast<std::size_t>(*k) + 1);
    coeffs[static_cast<std::size_t>(*k)] += c;
  }
  out.success = true;
  out.P = IntPolynomial(std::move(coeffs));
  return out;
}

}  // namespace formality::resonance
