#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "formality/torus/mapping_torus.hpp"
#include "oracles.hpp"

using namespace formality;
using namespace formality::torus;

namespace {

MonodromyMatrix M2(long a, long b, long c, long d) {
  return MonodromyMatrix(IntegerMatrix{{Integer(a), Integer(b)}, {Integer(c), Integer(d)}});
}

IntPolynomial product_of_factors(const std::vector<PolyFactor>& fs) {
  IntPolynomial p{1};
  for (const auto& f : fs) p = p * f.poly.pow(f.multiplicity);
  return p;
}

// Some eigenvalue off the unit circle, from numeric roots.
bool has_root_off_circle(const IntPolynomial& p) {
  std::vector<double> c;
  for (const auto& x : p.coeffs()) c.push_back(static_cast<double>(x));
  for (const auto& r : oracle::numeric_roots(c))
    if (std::abs(std::abs(r) - 1.0) > 1e-3) return true;
  return false;
}

}  // namespace

TEST(Monodromy, Construction) {
  EXPECT_TRUE(M2(2, 1, 1, 1).symplectic());
  EXPECT_EQ(M2(2, 1, 1, 1).genus(), 1u);
  EXPECT_FALSE(M2(0, 1, 1, 0).symplectic());  // det -1
  EXPECT_THROW(M2(2, 0, 0, 1), InputError);
  EXPECT_THROW(MonodromyMatrix(IntegerMatrix(2, 3)), InputError);
  EXPECT_FALSE(MonodromyMatrix(IntegerMatrix::identity(3)).symplectic());
}

TEST(Wang, Examples) {
  EXPECT_EQ(wang_h1(M2(-1, 0, 0, -1)), (AbelianGroup{1, {Integer(2), Integer(2)}}));
  EXPECT_EQ(wang_h1(M2(1, 0, 0, 1)), (AbelianGroup{3, {}}));
  EXPECT_EQ(wang_h1(MonodromyMatrix(family_block(3))), (AbelianGroup{1, {Integer(3)}}));
}

TEST(Wang, B1Examples) {
  for (long n = 1; n <= 8; ++n) EXPECT_EQ(b1_mapping_torus(MonodromyMatrix(family_block(n))), 1u);
  for (std::size_t g = 1; g <= 3; ++g)
    EXPECT_EQ(b1_mapping_torus(MonodromyMatrix(IntegerMatrix::identity(2 * g))), 2 * g + 1);
  EXPECT_EQ(b1_mapping_torus(M2(1, 1, 0, 1)), 2u);
}

TEST(Wang, AgreesWithDeterminantAndRank) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 3;
    MonodromyMatrix h(oracle::random_unimodular(rng, n, 4 + t % 5));
    auto H = wang_h1(h);
    const auto imh = identity_minus(h.matrix());
    ASSERT_EQ(H.free_rank, b1_mapping_torus(h));
    ASSERT_EQ(H.free_rank, 1 + n - oracle::gauss_rank(imh));
    const Integer det = oracle::leibniz_det(imh);
    if (det != 0) {
      Integer order = 1;
      for (const auto& q : H.torsion) order *= q;
      ASSERT_EQ(order, abs(det));
      ASSERT_EQ(H.free_rank, 1u);
    }
  }
}

TEST(Character, Examples) {
  auto a2 = character_component(MonodromyMatrix(family_block(2)));
  EXPECT_EQ(a2.char_poly, (IntPolynomial{1, -4, 1}));
  ASSERT_EQ(a2.factors.size(), 1u);
  EXPECT_FALSE(a2.factors[0].cyclotomic);
  EXPECT_FALSE(a2.contains_one);
  EXPECT_FALSE(a2.all_cyclotomic);

  auto id = character_component(M2(1, 0, 0, 1));
  ASSERT_EQ(id.factors.size(), 1u);
  EXPECT_EQ(id.factors[0].poly, (IntPolynomial{-1, 1}));
  EXPECT_EQ(id.factors[0].multiplicity, 2u);
  EXPECT_TRUE(id.factors[0].cyclotomic);
  EXPECT_TRUE(id.contains_one);

  auto rot = character_component(M2(0, -1, 1, 0));
  ASSERT_EQ(rot.factors.size(), 1u);
  EXPECT_EQ(rot.factors[0].poly, (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(rot.factors[0].cyclotomic_index, 4u);
  EXPECT_FALSE(rot.contains_one);
}

TEST(Character, FactorsMultiplyBack) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    MonodromyMatrix h(oracle::random_unimodular(rng, 2 + t % 4, 3 + t % 6));
    auto cc = character_component(h);
    ASSERT_EQ(product_of_factors(cc.factors), cc.char_poly);
    bool all = true;
    for (const auto& f : cc.factors) all = all && f.cyclotomic;
    ASSERT_EQ(all, cc.all_cyclotomic);
    ASSERT_EQ(cc.contains_one, oracle::root_one_multiplicity(cc.char_poly.coeffs()) > 0);
  }
}

TEST(QuasiKahler, Examples) {
  auto o = quasi_kahler_obstruction(M2(2, 1, 1, 1));
  EXPECT_TRUE(o.obstructed);
  ASSERT_TRUE(o.witness);
  EXPECT_EQ(o.witness->poly, (IntPolynomial{1, -3, 1}));
  EXPECT_FALSE(quasi_kahler_obstruction(M2(-1, 0, 0, -1)).obstructed);
  EXPECT_FALSE(quasi_kahler_obstruction(M2(1, 1, 0, 1)).obstructed);
}

TEST(QuasiKahler, Sl2Sweep) {
  std::size_t total = 0, obstructed = 0;
  for (long a = -10; a <= 10; ++a)
    for (long b = -10; b <= 10; ++b)
      for (long c = -10; c <= 10; ++c)
        for (long d = -10; d <= 10; ++d) {
          if (a * d - b * c != 1) continue;
          auto h = M2(a, b, c, d);
          const bool ob = quasi_kahler_obstruction(h).obstructed;
          ASSERT_EQ(ob, std::labs(a + d) >= 3) << a << " " << b << " " << c << " " << d;
          ASSERT_EQ(ob, has_root_off_circle(char_poly(h.matrix())));
          ++total;
          obstructed += ob;
        }
  EXPECT_GT(total, 1000u);
  EXPECT_GT(obstructed, 0u);
  EXPECT_LT(obstructed, total);
}

TEST(QuasiKahler, HigherRankAgainstNumericRoots) {
  std::mt19937_64 rng(57);
  for (int t = 0; t < 150; ++t) {
    MonodromyMatrix h(oracle::random_unimodular(rng, 2 + t % 3, 2 + t % 7));
    auto o = quasi_kahler_obstruction(h);
    ASSERT_EQ(o.obstructed, has_root_off_circle(char_poly(h.matrix())));
    if (o.obstructed) {
      ASSERT_FALSE(o.witness->cyclotomic);
    }
  }
}

TEST(Jordan, Examples) {
  EXPECT_TRUE(formality_jordan_obstruction(M2(1, 1, 0, 1)).obstructed);
  EXPECT_EQ(formality_jordan_obstruction(M2(1, 1, 0, 1)).verdict, JordanAtOne::block_of_size_ge_two);
  EXPECT_EQ(formality_jordan_obstruction(M2(-1, 0, 0, -1)).verdict, JordanAtOne::no_eigenvalue_one);
  EXPECT_EQ(formality_jordan_obstruction(M2(1, 0, 0, 1)).verdict, JordanAtOne::all_blocks_size_one);
  EXPECT_FALSE(formality_jordan_obstruction(M2(1, 0, 0, 1)).obstructed);
}

TEST(Kunneth, Examples) {
  auto a2 = kunneth_v1_isolated(MonodromyMatrix(family_block(2)), {"anything"});
  ASSERT_EQ(a2.size(), 1u);
  EXPECT_EQ(a2[0].factor.poly, (IntPolynomial{1, -4, 1}));
  EXPECT_FALSE(a2[0].unitary);

  auto minus = kunneth_v1_isolated(M2(-1, 0, 0, -1));
  ASSERT_EQ(minus.size(), 1u);
  EXPECT_EQ(minus[0].factor.poly, (IntPolynomial{1, 1}));
  EXPECT_TRUE(minus[0].unitary);

  EXPECT_THROW(kunneth_v1_isolated(M2(1, 1, 0, 1)), InputError);
}

TEST(Family, Examples) {
  auto r = non_kahler_family(1, 3);
  EXPECT_EQ(r.h1, (AbelianGroup{2, {Integer(3)}}));
  EXPECT_TRUE(r.obstruction.obstructed);
  EXPECT_EQ(r.conclusions.size(), 2u);

  auto s = non_kahler_family(2, 2);
  EXPECT_EQ(s.h1, (AbelianGroup{2, {Integer(2), Integer(2)}}));
  EXPECT_TRUE(s.obstruction.obstructed);

  EXPECT_THROW(non_kahler_family(1, 1), InputError);
  EXPECT_THROW(non_kahler_family(0, 3), InputError);
}

TEST(Family, FullRangeAndDistinctness) {
  std::set<std::string> seen;
  for (std::size_t g = 1; g <= 5; ++g)
    for (long n = 2; n <= 20; ++n) {
      auto r = non_kahler_family(g, n);
      ASSERT_TRUE(r.symplectic);
      ASSERT_TRUE(r.h1_matches);
      ASSERT_TRUE(r.char_poly_matches);
      ASSERT_TRUE(r.obstruction.obstructed);
      ASSERT_TRUE(seen.insert(r.h1.str()).second) << r.h1.str();
      // independent check of the torsion: |det(I - B)| = n^g
      const Integer det = determinant(identity_minus(r.monodromy));
      Integer ng = 1;
      for (std::size_t k = 0; k < g; ++k) ng *= n;
      ASSERT_EQ(abs(det), ng);
    }
}

TEST(Family, BlockSumIsSymplectic) {
  for (std::size_t g = 1; g <= 5; ++g)
    for (long n = 2; n <= 6; ++n) {
      const auto B = family_matrix(g, n);
      const auto J = standard_symplectic_form(g);
      ASSERT_EQ(B.transpose() * J * B, J);
      ASSERT_EQ(MonodromyMatrix(B).genus(), g);
    }
}
