#pragma once

#include "formality/cdga/cohomology.hpp"

namespace formality::cdga {

struct MasseyVerdict {
  bool defined = false;
  CohomologyClass representative;                // class of y*a3 + a1*z in H^2
  bool vanishes = false;                         // meaningful only when defined
  std::vector<RationalVector> indeterminacy;     // basis of a1 u H^1 + H^1 u a3, H^2 coordinates
  RationalVector y, z;                           // the chosen cochains, local A^1 coordinates
  std::string reason;                            // why it is undefined, if it is
};

/// Triple Massey product <a1, a2, a3> of degree-one classes.
///
/// Solves dy = a1 a2 and dz = a2 a3 (free variables zero, plus optional
/// cocycle shifts), forms y a3 + a1 z, and decides vanishing by exact
/// membership in the indeterminacy subspace a1 u H^1 + H^1 u a3.
inline MasseyVerdict massey_triple(const FiniteCdga& A, const Cohomology& H, const CohomologyClass& a1,
                                   const CohomologyClass& a2, const CohomologyClass& a3,
                                   std::span<const Rational> y_shift = {},
                                   std::span<const Rational> z_shift = {}) {
  require(a1.degree == 1 && a2.degree == 1 && a3.degree == 1, "triple Massey products take degree-one classes");
  MasseyVerdict v;
  if (A.top_degree() < 2) {
    // No degree-2 part: every product vanishes and so does the Massey product.
    v.defined = true;
    v.vanishes = true;
    v.representative = CohomologyClass{2, {}, {}};
    return v;
  }
  if (!cup(A, H, a1, a2).is_zero()) {
    v.reason = "a1 u a2 != 0";
    return v;
  }
  if (!cup(A, H, a2, a3).is_zero()) {
    v.reason = "a2 u a3 != 0";
    return v;
  }
  v.defined = true;

  auto e1 = A.from_local(a1.representative, 1);
  auto e2 = A.from_local(a2.representative, 1);
  auto e3 = A.from_local(a3.representative, 1);
  const RationalMatrix d1 = A.differential_matrix(1);
  auto y = solve(d1, A.to_local(A.multiply(e1, e2), 2));
  auto z = solve(d1, A.to_local(A.multiply(e2, e3), 2));
  if (!y || !z) throw InternalError("cup product vanishes in cohomology but is not exact");
  auto shift = [&](RationalVector& base, std::span<const Rational> s) {
    if (s.empty()) return;
    require(s.size() == base.size(), "cochain shift has the wrong length");
    require(is_zero_vector(d1.apply(s)), "cochain shift must be a cocycle");
    for (std::size_t i = 0; i < s.size(); ++i) base[i] += s[i];
  };
  shift(*y, y_shift);
  shift(*z, z_shift);
  v.y = *y;
  v.z = *z;

  Element rep = A.multiply(A.from_local(*y, 1), e3);
  add_to(rep, A.multiply(e1, A.from_local(*z, 1)));
  v.representative = H.project(2, A.to_local(rep, 2));

  SubspaceBasis indet(H.dim(2));
  for (std::size_t i = 0; i < H.dim(1); ++i) {
    auto h = H.basis_class(1, i);
    indet.insert(cup(A, H, a1, h).coords);
    indet.insert(cup(A, H, h, a3).coords);
  }
  v.indeterminacy = indet.basis();
  v.vanishes = indet.contains(v.representative.coords);
  return v;
}

}  // namespace formality::cdga
