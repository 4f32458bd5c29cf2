#pragma once

#include <string_view>

#include "formality/linalg/rank.hpp"

namespace formality {

enum class JordanAtOne { no_eigenvalue_one, all_blocks_size_one, block_of_size_ge_two };

inline std::string_view to_string(JordanAtOne j) {
  switch (j) {
    case JordanAtOne::no_eigenvalue_one: return "no_eigenvalue_one";
    case JordanAtOne::all_blocks_size_one: return "all_blocks_size_one";
    case JordanAtOne::block_of_size_ge_two: return "block_of_size_ge_two";
  }
  return "?";
}

/// Shape of the Jordan blocks of M at eigenvalue 1: blocks all have size one
/// exactly when rank(M - I) == rank((M - I)^2).
inline JordanAtOne jordan_block_at_one(const IntegerMatrix& M) {
  require(M.square(), "Jordan test needs a square matrix");
  IntegerMatrix N = M - IntegerMatrix::identity(M.rows());
  const std::size_t r1 = rank(N);
  if (r1 == M.rows()) return JordanAtOne::no_eigenvalue_one;
  return rank(N * N) == r1 ? JordanAtOne::all_blocks_size_one : JordanAtOne::block_of_size_ge_two;
}

}  // namespace formality
