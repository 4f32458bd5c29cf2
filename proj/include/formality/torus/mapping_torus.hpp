#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formality/linalg/jordan.hpp"
#include "formality/linalg/polynomial.hpp"
#include "formality/linalg/rank.hpp"
#include "formality/linalg/smith.hpp"

namespace formality::torus {

/// J = g diagonal copies of [[0,1],[-1,0]].
inline IntegerMatrix standard_symplectic_form(std::size_t g) {
  IntegerMatrix J(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    J(2 * k, 2 * k + 1) = 1;
    J(2 * k + 1, 2 * k) = -1;
  }
  return J;
}

/// Action h_* of the monodromy on H_1 of the fiber.
class MonodromyMatrix {
 public:
  explicit MonodromyMatrix(IntegerMatrix h) : h_(std::move(h)) {
    require(h_.square(), "monodromy matrix must be square");
    require(h_.rows() > 0, "monodromy matrix must be nonempty");
    const Integer det = determinant(h_);
    require(det == 1 || det == -1, "monodromy matrix must be invertible over Z (det = " + det.str() + ")");
    if (h_.rows() % 2 == 0) {
      const IntegerMatrix J = standard_symplectic_form(h_.rows() / 2);
      symplectic_ = h_.transpose() * J * h_ == J;
    }
  }

  const IntegerMatrix& matrix() const { return h_; }
  std::size_t size() const { return h_.rows(); }
  bool symplectic() const { return symplectic_; }
  std::optional<std::size_t> genus() const {
    if (!symplectic_) return std::nullopt;
    return h_.rows() / 2;
  }

 private:
  IntegerMatrix h_;
  bool symplectic_ = false;
};

inline IntegerMatrix identity_minus(const IntegerMatrix& h) { return IntegerMatrix::identity(h.rows()) - h; }

/// Wang sequence: H_1(U_h; Z) = Z + coker(I - h_*).
inline AbelianGroup wang_h1(const MonodromyMatrix& h) {
  AbelianGroup c = cokernel(identity_minus(h.matrix()));
  c.free_rank += 1;
  return c;
}

inline std::size_t b1_mapping_torus(const MonodromyMatrix& h) {
  const IntegerMatrix m = identity_minus(h.matrix());
  return 1 + m.cols() - rank(m);
}

struct CharacterComponent {
  IntPolynomial char_poly;
  std::vector<PolyFactor> factors;
  bool contains_one = false;  // 1 is an eigenvalue
  bool all_cyclotomic = false;
};

inline CharacterComponent character_component(const MonodromyMatrix& h) {
  CharacterComponent cc;
  cc.char_poly = char_poly(h.matrix());
  cc.factors = factor_monic(cc.char_poly);
  cc.contains_one = determinant(identity_minus(h.matrix())) == 0;
  cc.all_cyclotomic = is_cyclotomic_product(cc.char_poly);
  return cc;
}

struct QuasiKahlerObstruction {
  bool obstructed = false;
  std::optional<PolyFactor> witness;  // a factor with a root off the unit circle
};

/// Obstructed iff h_* has an eigenvalue of norm != 1, decided by Kronecker:
/// a monic integer polynomial with unimodular roots and unit constant term is
/// a product of cyclotomics.
inline QuasiKahlerObstruction quasi_kahler_obstruction(const MonodromyMatrix& h) {
  QuasiKahlerObstruction out;
  const IntPolynomial p = char_poly(h.matrix());
  if (is_cyclotomic_product(p)) return out;
  out.obstructed = true;
  for (const auto& f : factor_monic(p))
    if (!f.cyclotomic) {
      out.witness = f;
      break;
    }
  if (!out.witness) throw InternalError("non-cyclotomic char poly without a non-cyclotomic factor");
  return out;
}

struct JordanObstruction {
  bool obstructed = false;
  JordanAtOne verdict = JordanAtOne::no_eigenvalue_one;
};

inline JordanObstruction formality_jordan_obstruction(const MonodromyMatrix& h) {
  JordanObstruction j;
  j.verdict = jordan_block_at_one(h.matrix());
  j.obstructed = j.verdict == JordanAtOne::block_of_size_ge_two;
  return j;
}

struct IsolatedPoint {
  PolyFactor factor;  // 1 x rho for every root rho of factor.poly
  bool unitary = false;
};

/// With 1 not an eigenvalue, every eigenvalue rho of h_* gives an isolated
/// point 1 x rho of V_1(N x U_h), independent of V_1(N).
inline std::vector<IsolatedPoint> kunneth_v1_isolated(const MonodromyMatrix& h,
                                                      const std::vector<std::string>& v1_of_N = {}) {
  (void)v1_of_N;  // the isolated points do not depend on V_1(N)
  require(determinant(identity_minus(h.matrix())) != 0, "1 is an eigenvalue of the monodromy");
  std::vector<IsolatedPoint> out;
  for (const auto& f : factor_monic(char_poly(h.matrix()))) out.push_back({f, f.cyclotomic});
  return out;
}

/// A_n = [[n+2, -1], [1, 0]].
inline IntegerMatrix family_block(long n) { return IntegerMatrix{{Integer(n + 2), Integer(-1)}, {Integer(1), Integer(0)}}; }

/// B_{g,n}: block sum of g copies of A_n.
inline IntegerMatrix family_matrix(std::size_t g, long n) {
  std::vector<IntegerMatrix> blocks(g, family_block(n));
  return block_sum<Integer>(blocks);
}

inline AbelianGroup expected_family_h1(std::size_t g, long n) {
  AbelianGroup a;
  a.free_rank = 2;
  a.torsion.assign(g, Integer(n));
  return a;
}

struct FamilyReport {
  std::size_t g = 0;
  long n = 0;
  IntegerMatrix monodromy;
  bool symplectic = false;
  bool one_is_eigenvalue = false;
  AbelianGroup h1_fiber_bundle;  // H_1(U_h)
  AbelianGroup h1;               // H_1(S^1 x U_h)
  bool h1_matches = false;
  IntPolynomial char_poly;
  bool char_poly_matches = false;
  QuasiKahlerObstruction obstruction;
  std::vector<std::string> conclusions;
};

/// W_{g,n} = S^1 x U_h with h acting on H_1(Sigma_g) by B_{g,n}, n > 1.
inline FamilyReport non_kahler_family(std::size_t g, long n) {
  require(g >= 1, "genus must be at least 1");
  require(n > 1, "the family needs n > 1");
  FamilyReport r;
  r.g = g;
  r.n = n;
  r.monodromy = family_matrix(g, n);
  const MonodromyMatrix h(r.monodromy);
  r.symplectic = h.symplectic();
  if (!r.symplectic) throw InternalError("B_{g,n} failed the symplectic check");
  r.one_is_eigenvalue = determinant(identity_minus(r.monodromy)) == 0;
  if (r.one_is_eigenvalue) throw InternalError("1 is an eigenvalue of B_{g,n}");
  r.h1_fiber_bundle = wang_h1(h);
  r.h1 = r.h1_fiber_bundle;
  r.h1.free_rank += 1;  // Kunneth with the extra circle
  r.h1_matches = r.h1 == expected_family_h1(g, n);
  r.char_poly = char_poly(r.monodromy);
  r.char_poly_matches = r.char_poly == IntPolynomial{1, -(static_cast<int>(n) + 2), 1}.pow(g);
  r.obstruction = quasi_kahler_obstruction(h);
  if (r.obstruction.obstructed) {
    r.conclusions.push_back("W has the rational homotopy type of the Kahler manifold M x T^2 x S^2");
    r.conclusions.push_back("W admits no Kahler metric (eigenvalues of h_* off the unit circle)");
  }
  return r;
}

}  // namespace formality::torus
