#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "formality/linalg/numeric.hpp"

namespace formality::lie {

using Word = std::vector<std::size_t>;

inline int mobius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// Witt's formula: dimension of the degree-d part of the free Lie algebra on
/// n generators, (1/d) sum_{e | d} mu(d/e) n^e.
inline Integer witt_number(std::size_t n, std::size_t d) {
  require(d >= 1, "Witt number needs degree >= 1");
  Integer total = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    Integer pw = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(e));
    total += mobius(d / e) * pw;
  }
  return total / static_cast<long>(d);
}

/// All Lyndon words of length exactly d over {0..n-1}, in lexicographic order
/// (Duval's generation algorithm).
inline std::vector<Word> lyndon_words(std::size_t n, std::size_t d) {
  std::vector<Word> out;
  if (n == 0 || d == 0) return out;
  Word w{0};
  while (!w.empty()) {
    if (w.size() == d) out.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word rot(w.begin() + static_cast<long>(i), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
    if (!(w < rot)) return false;
  }
  return true;
}

/// Standard factorisation w = u v, v the longest proper Lyndon suffix.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
  require(w.size() >= 2, "standard factorisation needs a word of length >= 2");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + static_cast<long>(i), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<long>(i)), v};
  }
  throw InternalError("no Lyndon suffix");
}

inline std::string letter_name(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

/// Standard bracketing as text, e.g. aab -> [a,[a,b]].
inline std::string bracket_string(const Word& w, std::size_t n) {
  if (w.size() == 1) return letter_name(w[0], n);
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_string(u, n) + "," + bracket_string(v, n) + "]";
}

inline std::string word_string(const Word& w, std::size_t n) {
  std::string s;
  for (auto x : w) s += letter_name(x, n);
  return s;
}

/// Lyndon basis of degree d: words with their standard bracketings.
struct LyndonBasisEntry {
  Word word;
  std::string bracketed;
};

inline std::vector<LyndonBasisEntry> lyndon_basis(std::size_t n, std::size_t d) {
  std::vector<LyndonBasisEntry> out;
  for (auto& w : lyndon_words(n, d)) {
    std::string b = bracket_string(w, n);
    out.push_back({std::move(w), std::move(b)});
  }
  return out;
}

}  // namespace formality::lie
