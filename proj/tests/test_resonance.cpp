#include <gtest/gtest.h>

#include <random>

#include "formality/resonance/alexander.hpp"
#include "formality/resonance/resonance.hpp"
#include "oracles.hpp"

using namespace formality;
using namespace formality::resonance;

namespace {

RationalVector vec(std::initializer_list<int> v) {
  RationalVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

RationalVector random_point(std::mt19937_64& rng, const LinearSubspace& L) {
  std::uniform_int_distribution<int> d(-7, 7);
  for (;;) {
    RationalVector s(L.dimension());
    for (auto& x : s) x = Rational(d(rng), 1 + std::abs(d(rng)));
    auto x = L.point(s);
    if (!is_zero_vector(x)) return x;
  }
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  RationalVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

LaurentPoly laurent(std::size_t vars, std::vector<std::pair<std::vector<long>, long>> terms) {
  LaurentPoly p(vars);
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST(Resonance, DimensionExamples) {
  EXPECT_EQ(resonance_dimension(CupData::zero(3), vec({1, 2, -1})), 2u);
  EXPECT_EQ(resonance_dimension(CupData::torus(2), vec({1, 0})), 0u);
  EXPECT_EQ(resonance_dimension(CupData::surface(2), vec({1, 0, 0, 0})), 2u);
  EXPECT_EQ(resonance_dimension(CupData::torus(3), vec({0, 0, 0})), 3u);
  EXPECT_THROW(resonance_dimension(CupData::torus(2), vec({1, 0, 0})), InputError);
}

TEST(Resonance, MembershipExamples) {
  EXPECT_TRUE(membership(CupData::zero(3), vec({5, 0, 1}), 2));
  EXPECT_FALSE(membership(CupData::torus(2), vec({1, 0}), 1));
  for (auto c : {CupData::torus(3), CupData::surface(2), CupData::zero(4)})
    EXPECT_TRUE(membership(c, RationalVector(c.b1()), c.b1()));
}

TEST(Resonance, MembershipMatchesRankOracle) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> b1d(1, 5), b2d(1, 4);
  std::uniform_int_distribution<int> xd(-4, 4);
  for (int t = 0; t < 1000; ++t) {
    auto c = oracle::random_cup(rng, b1d(rng), b2d(rng), t % 3 == 0 ? 1 : 2);
    RationalVector x(c.b1());
    // bias some points toward sparse supports, where resonance is likelier
    for (auto& v : x) v = (t % 4 == 0 && xd(rng) > 0) ? Rational(0) : Rational(xd(rng), 1 + std::abs(xd(rng)));
    if (is_zero_vector(x)) x[0] = 1;
    const std::size_t depth = oracle::resonance_depth_bruteforce(c, x);
    ASSERT_EQ(resonance_dimension(c, x), depth);
    for (std::size_t d = 0; d <= c.b1(); ++d) ASSERT_EQ(membership(c, x, d), depth >= d);
  }
}

TEST(Resonance, SubspaceExamples) {
  EXPECT_TRUE(subspace_in_resonance(CupData::zero(3), LinearSubspace::whole(3), 2));
  EXPECT_FALSE(subspace_in_resonance(CupData::torus(2), LinearSubspace::coordinate(2, {0}), 1));
  EXPECT_TRUE(subspace_in_resonance(CupData::surface(2), LinearSubspace::whole(4), 1));
  EXPECT_FALSE(subspace_in_resonance(CupData::surface(2), LinearSubspace::whole(4), 3));
  auto det = subspace_in_resonance_detail(CupData::torus(2), LinearSubspace::whole(2), 1);
  EXPECT_FALSE(det.contained);
  EXPECT_FALSE(det.witness_polynomial.empty());
  EXPECT_THROW(subspace_in_resonance(CupData::torus(2), LinearSubspace::whole(3), 1), InputError);
}

TEST(Resonance, SymbolicVerdictMatchesSampling) {
  std::mt19937_64 rng(12);
  struct Case {
    CupData c;
    std::size_t d;
  };
  std::vector<Case> cases;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t d = 1; d <= n; ++d) cases.push_back({CupData::zero(n), d});
  for (std::size_t n = 2; n <= 4; ++n) cases.push_back({CupData::torus(n), 1});
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::size_t d = 1; d <= 2 * g - 1; ++d) cases.push_back({CupData::surface(g), d});

  std::size_t checked = 0;
  for (const auto& [c, d] : cases) {
    const std::size_t n = c.b1();
    std::vector<LinearSubspace> subspaces{LinearSubspace::whole(n)};
    for (std::size_t i = 0; i < n; ++i) subspaces.push_back(LinearSubspace::coordinate(n, {i}));
    if (n >= 3) subspaces.push_back(LinearSubspace::coordinate(n, {0, 2}));
    auto line = random_vector(rng, n);
    if (!is_zero_vector(line)) subspaces.push_back(LinearSubspace(n, {line}));
    for (const auto& L : subspaces) {
      const bool symbolic = subspace_in_resonance(c, L, d);
      bool all = true;
      for (int s = 0; s < 100; ++s) all = all && membership(c, random_point(rng, L), d);
      ASSERT_EQ(symbolic, all) << "b1=" << n << " d=" << d << " dim L=" << L.dimension();
      ++checked;
    }
  }
  EXPECT_GT(checked, 40u);
}

TEST(Resonance, SymbolicContainmentImpliesPointwise) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 60; ++t) {
    auto c = oracle::random_cup(rng, 3 + t % 3, 1 + t % 2, 1);
    for (std::size_t i = 0; i < c.b1(); ++i)
      for (std::size_t j = i + 1; j < c.b1(); ++j) {
        auto L = LinearSubspace::coordinate(c.b1(), {i, j});
        if (!subspace_in_resonance(c, L, 1)) continue;
        for (int s = 0; s < 100; ++s) ASSERT_TRUE(membership(c, random_point(rng, L), 1));
      }
  }
}

TEST(Isotropy, Examples) {
  for (std::size_t g = 1; g <= 4; ++g) {
    auto v = isotropicity(CupData::surface(g), LinearSubspace::whole(2 * g));
    EXPECT_EQ(v.kind, Isotropy::one_isotropic) << g;
    EXPECT_EQ(v.image_dimension, 1u);
  }
  EXPECT_EQ(isotropicity(CupData::zero(4), LinearSubspace::coordinate(4, {1, 3})).kind, Isotropy::zero_isotropic);
  EXPECT_EQ(isotropicity(CupData::torus(2), LinearSubspace::whole(2)).kind, Isotropy::one_isotropic);
  // odd-dimensional slice of a surface: degenerate pairing
  auto odd = isotropicity(CupData::surface(2), LinearSubspace::coordinate(4, {0, 1, 2}));
  EXPECT_EQ(odd.kind, Isotropy::neither);
  ASSERT_EQ(odd.witness.size(), 4u);
  EXPECT_FALSE(is_zero_vector(odd.witness));
  EXPECT_EQ(isotropicity(CupData::torus(3), LinearSubspace::whole(3)).image_dimension, 3u);
}

TEST(Isotropy, InvariantUnderBasisChange) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    const std::size_t b1 = 3 + t % 3;
    auto c = oracle::random_cup(rng, b1, 1 + t % 2, 1);
    if (t % 5 == 0) c = CupData::surface(2);
    const std::size_t n = c.b1();
    const std::size_t m = 2 + t % (n - 1);
    std::vector<RationalVector> basis;
    while (basis.size() < m) {
      auto cand = basis;
      cand.push_back(random_vector(rng, n));
      if (rank(matrix_from_rows(cand, n)) == cand.size()) basis = std::move(cand);
    }
    LinearSubspace L(n, basis);
    auto P = to_rational(oracle::random_unimodular(rng, m));
    std::vector<RationalVector> other;
    for (std::size_t a = 0; a < m; ++a) other.push_back(L.point(P.row(a)));
    LinearSubspace L2(n, other);
    auto v1 = isotropicity(c, L), v2 = isotropicity(c, L2);
    ASSERT_EQ(v1.kind, v2.kind);
    ASSERT_EQ(v1.image_dimension, v2.image_dimension);
  }
}

TEST(Position, Examples) {
  auto prod = CupData::product(CupData::zero(2), CupData::zero(2));
  auto r = position_obstruction(prod, {LinearSubspace::coordinate(4, {0, 1}), LinearSubspace::coordinate(4, {2, 3})});
  EXPECT_EQ(r.status, PositionResult::Status::pass);

  auto f = position_obstruction(CupData::zero(3), {LinearSubspace::coordinate(3, {0})});
  EXPECT_EQ(f.status, PositionResult::Status::fail);
  ASSERT_TRUE(f.offending);
  EXPECT_EQ(*f.offending, 0u);
  EXPECT_NE(f.components[0].clause.find("dim < 2"), std::string::npos);

  EXPECT_EQ(position_obstruction(CupData::surface(2), {LinearSubspace::whole(4)}).status,
            PositionResult::Status::pass);
}

TEST(Position, SurfaceFamilyBothBranches) {
  for (std::size_t g = 2; g <= 4; ++g)
    EXPECT_EQ(position_obstruction(CupData::surface(g), {LinearSubspace::whole(2 * g)}).status,
              PositionResult::Status::pass);
  // genus one: R_1 = {0}, no positive-dimensional component, vacuous pass
  EXPECT_FALSE(subspace_in_resonance(CupData::surface(1), LinearSubspace::whole(2), 1));
  EXPECT_EQ(position_obstruction(CupData::surface(1), {}).status, PositionResult::Status::pass);
  // handing in H^1 anyway is a precondition violation, not a verdict
  auto v = position_obstruction(CupData::surface(1), {LinearSubspace::whole(2)});
  EXPECT_EQ(v.status, PositionResult::Status::precondition_violation);
  EXPECT_FALSE(v.components[0].in_resonance);
}

TEST(Sigma, Examples) {
  auto z = sigma_upper_bound(CupData::zero(2));
  EXPECT_TRUE(z.r1_is_everything);

  auto t = sigma_upper_bound(CupData::torus(2));
  EXPECT_FALSE(t.r1_is_everything);
  EXPECT_TRUE(t.pieces.empty());
  EXPECT_EQ(t.samples_in_r1, 0u);

  auto s = sigma_upper_bound(CupData::surface(2));
  EXPECT_TRUE(s.r1_is_everything);

  // F2 x F2: R_1 is the union of the two factor planes
  auto p = sigma_upper_bound(CupData::product(CupData::zero(2), CupData::zero(2)));
  EXPECT_FALSE(p.r1_is_everything);
  ASSERT_EQ(p.pieces.size(), 2u);
  for (const auto& L : p.pieces) EXPECT_EQ(L.dimension(), 2u);
  EXPECT_EQ(p.samples_in_r1_outside_pieces, 0u);
}

TEST(Alexander, Examples) {
  auto a = alexander_single_variable(laurent(2, {{{2, 2}, 1}, {{1, 1}, 1}, {{0, 0}, 1}}));
  ASSERT_TRUE(a.success);
  EXPECT_EQ(a.P, (IntPolynomial{1, 1, 1}));
  EXPECT_EQ(a.direction, (std::vector<long>{1, 1}));

  auto c = alexander_single_variable(laurent(2, {{{0, 0}, 5}}));
  ASSERT_TRUE(c.success);
  EXPECT_EQ(c.P, (IntPolynomial{5}));

  // t1 + t2 is t1 * (1 + t2/t1): a single variable after the monomial shift
  auto s = alexander_single_variable(laurent(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_TRUE(s.success);
  EXPECT_EQ(s.direction, (std::vector<long>{1, -1}));

  auto f = alexander_single_variable(laurent(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
  EXPECT_FALSE(f.success);
  EXPECT_FALSE(f.witness_a.empty());
  EXPECT_FALSE(f.witness_b.empty());

  EXPECT_TRUE(alexander_single_variable(LaurentPoly(3)).success);
}

TEST(Alexander, UnivariateEmbeddings) {
  std::mt19937_64 rng(18);
  std::uniform_int_distribution<int> coef(-5, 5), ed(-3, 3), deg(0, 5), nv(1, 4);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(nv(rng));
    std::vector<long> e(n), shift(n);
    for (auto& x : e) x = ed(rng);
    for (auto& x : shift) x = ed(rng);
    std::vector<Integer> P(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : P) c = coef(rng);
    P.back() = 1 + std::abs(coef(rng));
    LaurentPoly delta(n);
    for (std::size_t k = 0; k < P.size(); ++k) {
      std::vector<long> m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = shift[i] + static_cast<long>(k) * e[i];
      delta.add_term(m, P[k]);
    }
    ASSERT_TRUE(alexander_single_variable(delta).success);
  }
}
