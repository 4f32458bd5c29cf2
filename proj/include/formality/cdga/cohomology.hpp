#pragma once

#include <vector>

#include "formality/cdga/cdga.hpp"
#include "formality/cup_data.hpp"

namespace formality::cdga {

struct CohomologyClass {
  int degree = 0;
  RationalVector coords;          // in the chosen basis of H^degree
  RationalVector representative;  // cocycle in local coordinates of A^degree

  bool is_zero() const { return is_zero_vector(coords); }
};

/// H^k with a fixed basis of representative cocycles.
struct CohomologyDegree {
  int degree = 0;
  std::vector<RationalVector> representatives;  // local coordinates in A^k
  std::vector<RationalVector> boundaries;       // spanning set of im(d_{k-1})
  SubspaceBasis projector{0};                   // reps first, then independent boundaries

  std::size_t dimension() const { return representatives.size(); }
};

class Cohomology {
 public:
  Cohomology() = default;

  const std::vector<CohomologyDegree>& degrees() const { return degrees_; }
  const CohomologyDegree& at(int k) const { return degrees_.at(static_cast<std::size_t>(k)); }
  std::size_t dim(int k) const {
    return k < 0 || static_cast<std::size_t>(k) >= degrees_.size() ? 0 : at(k).dimension();
  }

  /// The class of basis element i of H^k.
  CohomologyClass basis_class(int k, std::size_t i) const {
    CohomologyClass c{k, RationalVector(dim(k)), at(k).representatives.at(i)};
    c.coords[i] = 1;
    return c;
  }

  /// Class with the given coordinates in the basis of H^k.
  CohomologyClass make_class(int k, RationalVector coords) const {
    require(coords.size() == dim(k), "class coordinates have the wrong length");
    RationalVector rep(at(k).projector.ambient());
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0)
        for (std::size_t j = 0; j < rep.size(); ++j) rep[j] += coords[i] * at(k).representatives[i][j];
    return {k, std::move(coords), std::move(rep)};
  }

  /// Projects a cocycle of degree k onto the cohomology basis.
  CohomologyClass project(int k, RationalVector cocycle) const {
    auto all = at(k).projector.coordinates(cocycle);
    if (!all) throw InputError("vector is not a cocycle of degree " + std::to_string(k));
    RationalVector coords(all->begin(), all->begin() + static_cast<long>(dim(k)));
    return {k, std::move(coords), std::move(cocycle)};
  }

  /// True iff v (local coordinates in A^k) lies in the image of d.
  bool is_exact(int k, std::span<const Rational> v) const {
    SubspaceBasis b(v.size());
    for (const auto& w : at(k).boundaries) b.insert(w);
    return b.contains(v);
  }

  friend Cohomology cohomology(const FiniteCdga& A);

 private:
  std::vector<CohomologyDegree> degrees_;
};

/// dim H^k = dim ker d_k - rank d_{k-1}. Representatives are the first kernel
/// vectors (free-column order) that are independent modulo the boundaries.
inline Cohomology cohomology(const FiniteCdga& A) {
  Cohomology H;
  for (int k = 0; k <= A.top_degree(); ++k) {
    CohomologyDegree deg;
    deg.degree = k;
    const std::size_t n = A.dim(k);
    if (k > 0) {
      RationalMatrix prev = A.differential_matrix(k - 1);
      for (std::size_t c = 0; c < prev.cols(); ++c) {
        RationalVector col = prev.column(c);
        if (!is_zero_vector(col)) deg.boundaries.push_back(std::move(col));
      }
    }
    RankKernel rk = rank_kernel(A.differential_matrix(k));
    SubspaceBasis quotient(n);
    for (const auto& b : deg.boundaries) quotient.insert(b);
    for (auto& z : rk.kernel)
      if (quotient.insert(z)) deg.representatives.push_back(z);
    deg.projector = SubspaceBasis(n);
    for (const auto& r : deg.representatives) deg.projector.insert(r);
    for (const auto& b : deg.boundaries) deg.projector.insert(b);
    H.degrees_.push_back(std::move(deg));
  }
  return H;
}

/// Cup product of classes, projected to the cohomology basis.
inline CohomologyClass cup(const FiniteCdga& A, const Cohomology& H, const CohomologyClass& a,
                           const CohomologyClass& b) {
  const int k = a.degree + b.degree;
  if (k > A.top_degree()) throw InputError("cup product exceeds the top degree " + std::to_string(A.top_degree()));
  Element prod = A.multiply(A.from_local(a.representative, a.degree), A.from_local(b.representative, b.degree));
  return H.project(k, A.to_local(prod, k));
}

/// Degree-one cup tensor in the computed cohomology bases.
inline CupData extract_cup_data(const FiniteCdga& A, const Cohomology& H) {
  const std::size_t b1 = H.dim(1), b2 = H.dim(2);
  CupData c(b1, b2);
  if (b2 == 0) return c;
  for (std::size_t i = 0; i < b1; ++i)
    for (std::size_t j = i + 1; j < b1; ++j) c.set(i, j, cup(A, H, H.basis_class(1, i), H.basis_class(1, j)).coords);
  return c;
}

inline CupData extract_cup_data(const FiniteCdga& A) { return extract_cup_data(A, cohomology(A)); }

}  // namespace formality::cdga
