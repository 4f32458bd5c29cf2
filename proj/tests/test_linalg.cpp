#include <gtest/gtest.h>

#include <random>

#include "formality/linalg/jordan.hpp"
#include "formality/linalg/polynomial.hpp"
#include "formality/linalg/rank.hpp"
#include "formality/linalg/smith.hpp"
#include "oracles.hpp"

using namespace formality;

namespace {

IntegerMatrix A(long n) { return IntegerMatrix{{Integer(n + 2), Integer(-1)}, {Integer(1), Integer(0)}}; }

bool is_diagonal_chain(const SmithForm& s) {
  for (std::size_t r = 0; r < s.D.rows(); ++r)
    for (std::size_t c = 0; c < s.D.cols(); ++c) {
      if (r != c && s.D(r, c) != 0) return false;
    }
  for (std::size_t i = 0; i < s.divisors.size(); ++i) {
    if (s.divisors[i] <= 0 || s.D(i, i) != s.divisors[i]) return false;
    if (i + 1 < s.divisors.size() && s.divisors[i + 1] % s.divisors[i] != 0) return false;
  }
  for (std::size_t i = s.divisors.size(); i < std::min(s.D.rows(), s.D.cols()); ++i)
    if (s.D(i, i) != 0) return false;
  return true;
}

}  // namespace

TEST(Smith, ExamplesFromFamilyBlock) {
  IntegerMatrix m{{-4, 1}, {-1, 1}};
  EXPECT_EQ(m, IntegerMatrix::identity(2) - A(3));
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.divisors, (std::vector<Integer>{1, 3}));
  EXPECT_EQ(s.U * m * s.V, s.D);
  EXPECT_EQ(cokernel(m), (AbelianGroup{0, {3}}));
}

TEST(Smith, TrivialCases) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix::identity(3)).divisors, (std::vector<Integer>{1, 1, 1}));
  EXPECT_TRUE(smith_normal_form(IntegerMatrix(2, 3)).divisors.empty());
  EXPECT_EQ(cokernel(IntegerMatrix(2, 2)), (AbelianGroup{2, {}}));
  EXPECT_EQ(cokernel(IntegerMatrix::identity(2)), (AbelianGroup{0, {}}));
  EXPECT_EQ(cokernel(IntegerMatrix{{2, 0}, {0, 2}}).str(), "Z/2 + Z/2");
}

TEST(Smith, RandomizedIdentities) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntegerMatrix m = oracle::random_matrix(rng, r, c, 6);
    auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.D);
    ASSERT_TRUE(is_diagonal_chain(s));
    ASSERT_EQ(abs(oracle::leibniz_det(s.U)), 1);
    ASSERT_EQ(abs(oracle::leibniz_det(s.V)), 1);
    ASSERT_EQ(s.divisors.size(), oracle::gauss_rank(m));
    if (r == c) {
      Integer prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.D(i, i);
      ASSERT_EQ(abs(oracle::leibniz_det(m)), prod);
      ASSERT_EQ(determinant(m), oracle::leibniz_det(m));
    }
  }
}

TEST(Smith, CokernelUnimodularInvariance) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntegerMatrix m = oracle::random_matrix(rng, r, c, 5);
    auto P = oracle::random_unimodular(rng, r), Q = oracle::random_unimodular(rng, c);
    ASSERT_EQ(cokernel(m), cokernel(P * m * Q));
  }
}

TEST(Smith, AbelianGroupNormalisation) {
  EXPECT_EQ(abelian_group_from_orders(1, {Integer(2), Integer(3)}), (AbelianGroup{1, {6}}));
  EXPECT_EQ(abelian_group_from_orders(0, {Integer(4), Integer(2), Integer(1)}), (AbelianGroup{0, {2, 4}}));
  EXPECT_EQ(AbelianGroup{}.str(), "0");
}

TEST(Rank, Examples) {
  auto rk = rank_kernel(RationalMatrix{{0, 1}, {0, 0}});
  EXPECT_EQ(rk.rank, 1u);
  ASSERT_EQ(rk.kernel.size(), 1u);
  EXPECT_EQ(rk.kernel[0][1], 0);
  EXPECT_NE(rk.kernel[0][0], 0);

  auto z = rank_kernel(RationalMatrix(3, 3));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.kernel.size(), 3u);

  RationalMatrix m{{2, 4}, {1, 2}};
  auto k = rank_kernel(m);
  EXPECT_EQ(k.rank, 1u);
  ASSERT_EQ(k.kernel.size(), 1u);
  EXPECT_EQ(k.kernel[0][0], -2 * k.kernel[0][1]);
}

TEST(Rank, KernelIsKernelRandomized) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    auto m = to_rational(oracle::random_matrix(rng, r, c, 2));
    auto k = rank_kernel(m);
    ASSERT_EQ(k.rank, oracle::gauss_rank(m));
    ASSERT_EQ(k.rank + k.kernel.size(), c);
    for (const auto& v : k.kernel) ASSERT_TRUE(is_zero_vector(m.apply(v)));
    ASSERT_EQ(oracle::gauss_rank(k.kernel), k.kernel.size());
  }
}

TEST(Rank, SolveAndSubspaceCoordinates) {
  RationalMatrix a{{1, 2}, {3, 4}};
  RationalVector b{Rational(5), Rational(6)};
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x), b);
  EXPECT_FALSE(solve(RationalMatrix{{1, 1}, {1, 1}}, RationalVector{Rational(1), Rational(2)}));

  SubspaceBasis s(3);
  EXPECT_TRUE(s.insert({1, 1, 0}));
  EXPECT_TRUE(s.insert({0, 1, 1}));
  EXPECT_FALSE(s.insert({1, 2, 1}));
  auto co = s.coordinates(RationalVector{2, 5, 3});
  ASSERT_TRUE(co);
  EXPECT_EQ(*co, (RationalVector{2, 3}));
  EXPECT_FALSE(s.coordinates(RationalVector{1, 0, 0}));
}

TEST(Polynomial, CharPolyExamples) {
  EXPECT_EQ(char_poly(A(2)), (IntPolynomial{1, -4, 1}));
  EXPECT_EQ(char_poly(IntegerMatrix::identity(2)), (IntPolynomial{1, -2, 1}));
  EXPECT_EQ(char_poly(IntegerMatrix{{-1, 0}, {0, -1}}), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(char_poly(A(2)).str(), "t^2 - 4t + 1");
}

TEST(Polynomial, CayleyHamiltonAndDeterminantOracle) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      auto m = oracle::random_matrix(rng, n, n, 4);
      auto p = char_poly(m);
      ASSERT_EQ(p.degree(), static_cast<long>(n));
      ASSERT_TRUE(p.evaluate(m).is_zero());
      for (int t = -2; t <= 2; ++t) ASSERT_EQ(p(Integer(t)), oracle::char_poly_at(m, t));
    }
}

TEST(Polynomial, CyclotomicExamples) {
  EXPECT_TRUE(is_cyclotomic_product(IntPolynomial{1, -2, 1}));
  EXPECT_FALSE(is_cyclotomic_product(IntPolynomial{1, -4, 1}));
  EXPECT_TRUE(is_cyclotomic_product(IntPolynomial{1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPolynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPolynomial{1, 0, -1, 0, 1}));
}

TEST(Polynomial, CyclotomicAgreesWithNumericRoots) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(1, 6);
  int cyclo = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = deg(rng);
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coef(rng);
    c.back() = 1;
    c.front() = (trial % 2) ? 1 : -1;
    IntPolynomial f(c);
    std::vector<double> dc;
    for (const auto& x : c) dc.push_back(static_cast<double>(x));
    bool unit = true;
    for (auto z : oracle::numeric_roots(dc)) unit &= std::abs(std::abs(z) - 1.0) < 1e-3;
    ASSERT_EQ(is_cyclotomic_product(f), unit) << f.str();
    cyclo += unit;
  }
  EXPECT_GT(cyclo, 5);
}

TEST(Polynomial, CyclotomicMultiplicative) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<IntPolynomial> pool;
  for (std::size_t m = 1; m <= 12; ++m) pool.push_back(cyclotomic(m));
  for (int i = 0; i < 12; ++i) {
    std::vector<Integer> c{Integer(1), Integer(coef(rng)), Integer(coef(rng)), Integer(1)};
    pool.emplace_back(c);
  }
  for (const auto& f : pool)
    for (const auto& g : pool)
      ASSERT_EQ(is_cyclotomic_product(f * g), is_cyclotomic_product(f) && is_cyclotomic_product(g));
}

TEST(Polynomial, FactorMonicReconstructs) {
  std::vector<IntPolynomial> cases = {
      IntPolynomial{1, -4, 1}.pow(3) * cyclotomic(3),
      IntPolynomial{1, -2, 1} * IntPolynomial{-2, 0, 1},
      cyclotomic(5) * cyclotomic(8) * IntPolynomial{1, 1},
      IntPolynomial{-1, 1}.pow(2) * IntPolynomial{1, -3, 1} * IntPolynomial{2, 0, 0, 1},
      IntPolynomial{6, -5, 1},
  };
  for (const auto& f : cases) {
    IntPolynomial prod{1};
    for (const auto& pf : factor_monic(f)) {
      prod = prod * pf.poly.pow(pf.multiplicity);
      EXPECT_EQ(pf.cyclotomic, is_cyclotomic_product(pf.poly));
      if (pf.cyclotomic) {
        EXPECT_EQ(pf.poly, cyclotomic(pf.cyclotomic_index));
      }
    }
    EXPECT_EQ(prod, f) << f.str();
  }
  auto f = factor_monic(IntPolynomial{1, -4, 1}.pow(2));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].multiplicity, 2u);
  EXPECT_FALSE(f[0].cyclotomic);
  EXPECT_TRUE(f[0].certified_irreducible);
}

TEST(Jordan, Examples) {
  EXPECT_EQ(jordan_block_at_one(IntegerMatrix{{1, 1}, {0, 1}}), JordanAtOne::block_of_size_ge_two);
  EXPECT_EQ(jordan_block_at_one(IntegerMatrix::identity(3)), JordanAtOne::all_blocks_size_one);
  EXPECT_EQ(jordan_block_at_one(IntegerMatrix{{-1, 0}, {0, -1}}), JordanAtOne::no_eigenvalue_one);
}

TEST(Jordan, AgreesWithMultiplicityOracle) {
  // Blocks at 1 all have size one iff geometric multiplicity (nullity of
  // M - I) equals the multiplicity of 1 as a root of the char poly.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<int> small(-1, 1);
  int seen_block = 0, seen_diag = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = dim(rng);
    // upper triangular with mostly unit diagonal, or fully random
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = i == j ? Integer(small(rng) >= 0 ? 1 : -1) : Integer(small(rng));
    if (trial % 3 == 0) m = oracle::random_matrix(rng, n, n, 2);
    std::vector<Integer> cp;
    auto p = char_poly(m);
    for (long i = 0; i <= p.degree(); ++i) cp.push_back(p.coeff(static_cast<std::size_t>(i)));
    const std::size_t alg = oracle::root_one_multiplicity(cp);
    const std::size_t geo = n - oracle::gauss_rank(m - IntegerMatrix::identity(n));
    JordanAtOne expect = alg == 0 ? JordanAtOne::no_eigenvalue_one
                         : alg == geo ? JordanAtOne::all_blocks_size_one
                                      : JordanAtOne::block_of_size_ge_two;
    ASSERT_EQ(jordan_block_at_one(m), expect);
    seen_block += expect == JordanAtOne::block_of_size_ge_two;
    seen_diag += expect == JordanAtOne::all_blocks_size_one;
  }
  EXPECT_GT(seen_block, 10);
  EXPECT_GT(seen_diag, 10);
}

TEST(Numeric, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -4 "), Rational(-4));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_EQ(to_string(Rational(-3, 9)), "-1/3");
}
