#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "formality/cup_data.hpp"
#include "formality/resonance/polynomials.hpp"

namespace formality::resonance {

/// Linear subspace of H^1 = Q^ambient with an independent basis.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  LinearSubspace(std::size_t ambient, std::vector<RationalVector> basis) : ambient_(ambient), basis_(std::move(basis)) {
    for (const auto& v : basis_) require(v.size() == ambient_, "subspace basis vector has the wrong length");
    require(rank(matrix_from_rows(basis_, ambient_)) == basis_.size(), "subspace basis is linearly dependent");
  }

  static LinearSubspace whole(std::size_t n) { return coordinate(n, all_indices(n)); }

  static LinearSubspace coordinate(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<RationalVector> b;
    for (auto i : indices) {
      require(i < n, "coordinate index out of range");
      RationalVector v(n);
      v[i] = 1;
      b.push_back(std::move(v));
    }
    return LinearSubspace(n, std::move(b));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  /// Point with parameters s in this subspace: sum_k s_k v_k.
  RationalVector point(std::span<const Rational> s) const {
    require(s.size() == basis_.size(), "subspace parameters have the wrong length");
    RationalVector x(ambient_);
    for (std::size_t k = 0; k < s.size(); ++k)
      for (std::size_t i = 0; i < ambient_; ++i) x[i] += s[k] * basis_[k][i];
    return x;
  }

  bool contains(std::span<const Rational> v) const {
    SubspaceBasis b(ambient_);
    for (const auto& w : basis_) b.insert(w);
    return b.contains(v);
  }

  LinearSubspace extended(const RationalVector& v) const {
    auto b = basis_;
    b.push_back(v);
    return LinearSubspace(ambient_, std::move(b));
  }

 private:
  static std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
  }

  std::size_t ambient_ = 0;
  std::vector<RationalVector> basis_;
};

/// dim H^1(H^*, lambda_x) = dim ker(lambda_x) - 1 for x != 0. At x = 0 the
/// defining complex has lambda_0 = 0, and the literal reading gives b1.
inline std::size_t resonance_dimension(const CupData& c, std::span<const Rational> x) {
  require(x.size() == c.b1(), "resonance point has length " + std::to_string(x.size()) + ", expected " +
                                  std::to_string(c.b1()));
  if (is_zero_vector(x)) return c.b1();
  return c.b1() - rank(c.lambda(x)) - 1;
}

/// x in R_d.
inline bool membership(const CupData& c, std::span<const Rational> x, std::size_t d) {
  return resonance_dimension(c, x) >= d;
}

namespace detail {

// Determinant of a square matrix of polynomials by row-wise Laplace
// expansion, memoised over the set of used columns.
inline MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m, std::size_t vars) {
  const std::size_t q = m.size();
  if (q == 0) return MultiPoly::constant(vars, 1);
  std::vector<MultiPoly> level{MultiPoly::constant(vars, 1)};
  std::vector<std::uint32_t> masks{0};
  for (std::size_t r = 0; r < q; ++r) {
    std::map<std::uint32_t, MultiPoly> next;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if (level[k].is_zero()) continue;
      for (std::size_t col = 0; col < q; ++col) {
        if (masks[k] >> col & 1u) continue;
        if (m[r][col].is_zero()) continue;
        // sign: number of used columns to the right of col
        const int inv = std::popcount(masks[k] >> (col + 1));
        MultiPoly term = level[k] * m[r][col];
        if (inv % 2) term = MultiPoly(vars) - term;
        auto [it, inserted] = next.try_emplace(masks[k] | (1u << col), vars);
        it->second = it->second + term;
      }
    }
    level.clear();
    masks.clear();
    for (auto& [mask, p] : next) {
      masks.push_back(mask);
      level.push_back(std::move(p));
    }
  }
  return level.empty() ? MultiPoly(vars) : level.front();
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace detail

struct SubspaceResonanceResult {
  bool contained = false;
  std::size_t minor_order = 0;
  // A nonvanishing minor when not contained: row and column indices and its polynomial.
  std::vector<std::size_t> witness_rows, witness_cols;
  std::string witness_polynomial;
};

inline constexpr std::size_t default_minor_budget = 200000;

/// Decides L \ {0} subset of R_d exactly: lambda_x restricted to x in L is a
/// matrix of linear forms in the coordinates of L, and L lies in R_d iff all
/// its minors of order b1 - d vanish identically.
inline SubspaceResonanceResult subspace_in_resonance_detail(const CupData& c, const LinearSubspace& L, std::size_t d,
                                                            std::size_t budget = default_minor_budget) {
  require(L.ambient() == c.b1(), "subspace ambient dimension differs from b1");
  require(L.dimension() >= 1, "subspace must be positive-dimensional");
  SubspaceResonanceResult res;
  const std::size_t b1 = c.b1(), b2 = c.b2(), m = L.dimension();
  if (d >= b1) {
    // Needs dim ker lambda_x >= b1 + 1: impossible for x != 0.
    res.minor_order = 0;
    res.witness_polynomial = "1";
    return res;
  }
  const std::size_t q = b1 - d;
  res.minor_order = q;
  if (q > b2) {
    res.contained = true;
    return res;
  }
  std::vector<RationalMatrix> lambdas;
  for (const auto& v : L.basis()) lambdas.push_back(c.lambda(v));
  auto entry = [&](std::size_t r, std::size_t j) {
    MultiPoly p(m);
    for (std::size_t k = 0; k < m; ++k) p.add_term([&] {
        MultiPoly::Exponent e(m, 0);
        e[k] = 1;
        return e;
      }(), lambdas[k](r, j));
    return p;
  };
  auto rows = detail::subsets(b2, q);
  auto cols = detail::subsets(b1, q);
  if (rows.size() * cols.size() > budget)
    throw BudgetExceeded("symbolic minor count " + std::to_string(rows.size() * cols.size()) + " exceeds budget");
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<MultiPoly>> sub(q, std::vector<MultiPoly>(q, MultiPoly(m)));
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) sub[a][b] = entry(rs[a], cs[b]);
      MultiPoly det = detail::poly_determinant(sub, m);
      if (!det.is_zero()) {
        res.witness_rows = rs;
        res.witness_cols = cs;
        res.witness_polynomial = det.str();
        return res;
      }
    }
  res.contained = true;
  return res;
}

inline bool subspace_in_resonance(const CupData& c, const LinearSubspace& L, std::size_t d) {
  return subspace_in_resonance_detail(c, L, d).contained;
}

/// Standard basis directions e_v outside L with L + span(e_v) still inside R_d.
/// An empty result is a partial maximality certificate for L.
inline std::vector<std::size_t> coordinate_extensions(const CupData& c, const LinearSubspace& L, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < c.b1(); ++v) {
    RationalVector e(c.b1());
    e[v] = 1;
    if (L.contains(e)) continue;
    if (subspace_in_resonance(c, L.extended(e), d)) out.push_back(v);
  }
  return out;
}

enum class Isotropy { zero_isotropic, one_isotropic, neither };

inline std::string_view to_string(Isotropy i) {
  switch (i) {
    case Isotropy::zero_isotropic: return "zero_isotropic";
    case Isotropy::one_isotropic: return "one_isotropic";
    case Isotropy::neither: return "neither";
  }
  return "?";
}

struct IsotropicityVerdict {
  Isotropy kind = Isotropy::neither;
  std::size_t image_dimension = 0;
  RationalVector witness;  // kernel vector of the degenerate pairing (ambient coordinates), if any
};

/// Isotropy type of L with respect to mu restricted to wedge^2 L.
inline IsotropicityVerdict isotropicity(const CupData& c, const LinearSubspace& L) {
  require(L.ambient() == c.b1(), "subspace ambient dimension differs from b1");
  const std::size_t m = L.dimension();
  const auto& v = L.basis();
  SubspaceBasis image(c.b2());
  std::vector<std::vector<RationalVector>> values(m, std::vector<RationalVector>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      values[a][b] = c.evaluate(v[a], v[b]);
      image.insert(values[a][b]);
    }
  IsotropicityVerdict out;
  out.image_dimension = image.dimension();
  if (out.image_dimension == 0) {
    out.kind = Isotropy::zero_isotropic;
    return out;
  }
  if (out.image_dimension > 1) return out;
  // Scalar skew form: mu(v_a ^ v_b) = omega_ab * w with w the image generator.
  RationalMatrix omega(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto coord = image.coordinates(values[a][b]);
      omega(a, b) = (*coord)[0];
      omega(b, a) = -(*coord)[0];
    }
  RankKernel rk = rank_kernel(omega);
  if (rk.rank == m) {
    out.kind = Isotropy::one_isotropic;
    return out;
  }
  out.witness = L.point(rk.kernel.front());
  return out;
}

struct ComponentCheck {
  std::size_t index = 0;
  std::size_t dimension = 0;
  bool in_resonance = false;
  IsotropicityVerdict isotropy;
  bool ok = false;
  std::string clause;  // which requirement failed, or which one held
};

struct PositionResult {
  enum class Status { pass, fail, precondition_violation };
  Status status = Status::pass;
  std::vector<ComponentCheck> components;
  std::optional<std::size_t> offending;  // first failing or violating component
};

inline std::string_view to_string(PositionResult::Status s) {
  switch (s) {
    case PositionResult::Status::pass: return "pass";
    case PositionResult::Status::fail: return "fail";
    case PositionResult::Status::precondition_violation: return "precondition_violation";
  }
  return "?";
}

/// Each positive-dimensional component of R_1 must be 0-isotropic of
/// dimension >= 2 or 1-isotropic of dimension >= 4. Components are first
/// verified to lie in R_1.
inline PositionResult position_obstruction(const CupData& c, const std::vector<LinearSubspace>& components) {
  PositionResult out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& L = components[i];
    ComponentCheck chk;
    chk.index = i;
    chk.dimension = L.dimension();
    require(L.ambient() == c.b1(), "component " + std::to_string(i) + " has the wrong ambient dimension");
    if (L.dimension() == 0) {
      chk.in_resonance = true;
      chk.ok = true;
      chk.clause = "zero-dimensional component, no condition";
      out.components.push_back(std::move(chk));
      continue;
    }
    chk.in_resonance = subspace_in_resonance(c, L, 1);
    if (!chk.in_resonance) {
      chk.clause = "not contained in R_1";
      if (!out.offending || out.status != PositionResult::Status::precondition_violation) out.offending = i;
      out.status = PositionResult::Status::precondition_violation;
      out.components.push_back(std::move(chk));
      continue;
    }
    chk.isotropy = isotropicity(c, L);
    switch (chk.isotropy.kind) {
      case Isotropy::zero_isotropic:
        chk.ok = L.dimension() >= 2;
        chk.clause = chk.ok ? "0-isotropic, dim >= 2" : "0-isotropic but dim < 2";
        break;
      case Isotropy::one_isotropic:
        chk.ok = L.dimension() >= 4;
        chk.clause = chk.ok ? "1-isotropic, dim >= 4" : "1-isotropic but dim < 4";
        break;
      case Isotropy::neither:
        chk.clause = "neither 0- nor 1-isotropic";
        break;
    }
    if (!chk.ok && out.status == PositionResult::Status::pass) {
      out.status = PositionResult::Status::fail;
      out.offending = i;
    }
    out.components.push_back(std::move(chk));
  }
  return out;
}

struct SigmaBound {
  std::vector<LinearSubspace> pieces;  // verified maximal linear subspaces inside R_1
  bool r1_is_everything = false;       // H^1 subset of R_1: the bound leaves Sigma^1 empty
  std::size_t samples = 0;
  std::size_t samples_in_r1 = 0;
  std::size_t samples_in_r1_outside_pieces = 0;  // nonzero: R_1 has parts the pieces miss
  std::string statement;
};

inline constexpr std::size_t coordinate_search_limit = 12;

/// Upper bound Sigma^1 subset of H^1 \ R_1 (valid for 1-formal groups).
/// Linear pieces of R_1 are verified exactly among H^1, the supplied
/// candidates and all coordinate subspaces (b1 <= 12); the random sample is a
/// seeded consistency check on the complement, not a proof.
inline SigmaBound sigma_upper_bound(const CupData& c, const std::vector<LinearSubspace>& candidates = {},
                                    std::size_t samples = 200, std::uint64_t seed = 1) {
  SigmaBound out;
  const std::size_t n = c.b1();
  if (n == 0) {
    out.statement = "H^1 = 0: nothing to bound";
    return out;
  }
  auto add_piece = [&](const LinearSubspace& L) {
    // keep only maximal pieces
    for (const auto& P : out.pieces) {
      bool inside = true;
      for (const auto& v : L.basis()) inside = inside && P.contains(v);
      if (inside) return;
    }
    std::vector<LinearSubspace> kept;
    for (auto& P : out.pieces) {
      bool inside = true;
      for (const auto& v : P.basis()) inside = inside && L.contains(v);
      if (!inside) kept.push_back(std::move(P));
    }
    kept.push_back(L);
    out.pieces = std::move(kept);
  };

  if (subspace_in_resonance(c, LinearSubspace::whole(n), 1)) {
    out.r1_is_everything = true;
    out.pieces.push_back(LinearSubspace::whole(n));
  } else {
    for (const auto& L : candidates)
      if (L.dimension() > 0 && subspace_in_resonance(c, L, 1)) add_piece(L);
    if (n <= coordinate_search_limit) {
      std::vector<std::uint32_t> masks;
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) masks.push_back(mask);
      // largest first so maximal pieces are found before their subsets
      std::stable_sort(masks.begin(), masks.end(),
                       [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
      for (auto mask : masks) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1u) idx.push_back(i);
        LinearSubspace L = LinearSubspace::coordinate(n, idx);
        bool covered = false;
        for (const auto& P : out.pieces) {
          bool inside = true;
          for (const auto& v : L.basis()) inside = inside && P.contains(v);
          covered = covered || inside;
        }
        if (covered) continue;
        if (subspace_in_resonance(c, L, 1)) add_piece(L);
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector x(n);
    for (auto& xi : x) xi = dist(rng);
    if (is_zero_vector(x)) continue;
    ++out.samples;
    if (!membership(c, x, 1)) continue;
    ++out.samples_in_r1;
    bool covered = false;
    for (const auto& P : out.pieces) covered = covered || P.contains(x);
    if (!covered) ++out.samples_in_r1_outside_pieces;
  }

  if (out.r1_is_everything)
    out.statement =
        "R_1 = H^1, so for a 1-formal group Sigma^1 is empty; if Sigma^1 is known to be nonempty the group is not "
        "1-formal";
  else if (out.pieces.empty())
    out.statement = "no positive-dimensional linear piece of R_1 found; Sigma^1 is contained in H^1 \\ R_1, which "
                    "the sample suggests is H^1 \\ {0} (1-formality assumed)";
  else
    out.statement = "Sigma^1 is contained in H^1 minus the union of the listed subspaces of R_1 (1-formality assumed)";
  return out;
}

}  // namespace formality::resonance
