#include <random>

#include <gtest/gtest.h>

#include "mft/errors.hpp"
#include "mft/matrix.hpp"
#include "support/leibniz.hpp"
#include "support/random_graphs.hpp"

namespace mft {
namespace {

using testing::leibniz_det;
using testing::rational_matrix;

const RationalMatrix kP2 = rational_matrix({{"2", "-1"}, {"-1", "2"}});
const RationalMatrix kK3W = rational_matrix({{"3", "-1", "-1"}, {"-1", "3", "-1"}, {"-1", "-1", "3"}});
const RationalMatrix kK3L = rational_matrix({{"2", "-1", "-1"}, {"-1", "2", "-1"}, {"-1", "-1", "2"}});

RationalMatrix identity(int n) { return RationalMatrix::Identity(n, n); }

TEST(DetTest, Examples) {
  EXPECT_EQ(det(identity(3)), Rational(1));
  EXPECT_EQ(det(kP2), Rational(3));
  EXPECT_EQ(det(kK3W), Rational(16));
  EXPECT_EQ(det(RationalMatrix(0, 0)), Rational(1));
}

TEST(DetTest, NeedsPivotingAndFractions) {
  EXPECT_EQ(det(rational_matrix({{"0", "1"}, {"1", "0"}})), Rational(-1));
  EXPECT_EQ(det(rational_matrix({{"1/2", "1/3"}, {"1/4", "1/5"}})), Rational::parse("1/60"));
  EXPECT_EQ(det(rational_matrix({{"1", "2"}, {"2", "4"}})), Rational(0));
  EXPECT_EQ(det(rational_matrix({{"0", "0"}, {"0", "5"}})), Rational(0));
}

TEST(DetTest, MatchesPermutationExpansion) {
  std::mt19937_64 rng(11);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 150; ++trial) {
    const RationalMatrix m = testing::random_matrix(rng, testing::uniform_int(rng, 1, 6), pool);
    EXPECT_EQ(det(m), leibniz_det(m));
  }
}

TEST(DetTest, IsMultiplicative) {
  std::mt19937_64 rng(12);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform_int(rng, 1, 5);
    const RationalMatrix a = testing::random_matrix(rng, n, pool);
    const RationalMatrix b = testing::random_matrix(rng, n, pool);
    EXPECT_EQ(det(RationalMatrix(a * b)), det(a) * det(b));
  }
}

TEST(CofactorTest, Examples) {
  EXPECT_EQ(cofactor(kP2, 0, 0), Rational(2));
  EXPECT_EQ(cofactor(kP2, 0, 1), Rational(1));
  EXPECT_EQ(cofactor(kK3W, 0, 1), Rational(4));
  EXPECT_EQ(cofactor(rational_matrix({{"5"}}), 0, 0), Rational(1));
}

TEST(CofactorTest, RejectsBadIndices) {
  EXPECT_THROW(cofactor(kP2, 2, 0), std::out_of_range);
  EXPECT_THROW(cofactor(kP2, 0, -1), std::out_of_range);
  EXPECT_THROW(cofactor(RationalMatrix(0, 0), 0, 0), std::invalid_argument);
}

TEST(AdjugateTest, Examples) {
  EXPECT_EQ(adjugate(identity(2)), identity(2));
  EXPECT_EQ(adjugate(kP2), rational_matrix({{"2", "1"}, {"1", "2"}}));
  EXPECT_EQ(RationalMatrix(kK3W * adjugate(kK3W)), RationalMatrix(identity(3) * Rational(16)));
}

TEST(AdjugateTest, ProductIsDetTimesIdentityEvenWhenSingular) {
  std::mt19937_64 rng(13);
  const auto pool = testing::signed_weight_pool();
  int singular = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = testing::uniform_int(rng, 1, 6);
    RationalMatrix m = testing::random_matrix(rng, n, pool);
    if (trial % 4 == 0 && n > 1) m.row(n - 1) = m.row(0);  // force singular
    const Rational d = det(m);
    singular += d.is_zero();
    EXPECT_EQ(RationalMatrix(m * adjugate(m)), RationalMatrix(identity(n) * d));
  }
  EXPECT_GT(singular, 10);
}

TEST(AdjugateTest, LargeMatrixRouteAgreesWithCofactors) {
  std::mt19937_64 rng(14);
  const auto pool = testing::positive_weight_pool();
  const int n = 13;
  RationalMatrix m = testing::random_matrix(rng, n, pool);
  m.diagonal().array() += Rational(10);
  const RationalMatrix adj = adjugate(m);
  EXPECT_EQ(adj(4, 7), cofactor(m, 7, 4));
  EXPECT_EQ(adj(0, 12), cofactor(m, 12, 0));
  EXPECT_EQ(RationalMatrix(m * adj), RationalMatrix(identity(n) * det(m)));
}

TEST(InverseTest, Examples) {
  EXPECT_EQ(inverse(identity(3)), identity(3));
  EXPECT_EQ(inverse(kP2), rational_matrix({{"2/3", "1/3"}, {"1/3", "2/3"}}));
  EXPECT_EQ(inverse(rational_matrix({{"1", "0"}, {"-1", "2"}})), rational_matrix({{"1", "0"}, {"1/2", "1/2"}}));
}

TEST(InverseTest, SingularThrows) {
  EXPECT_THROW(inverse(rational_matrix({{"1", "2"}, {"2", "4"}})), SingularMatrixError);
  EXPECT_THROW(inverse(kK3L), SingularMatrixError);
}

TEST(InverseTest, RoundTripsAndMatchesScaledAdjugate) {
  std::mt19937_64 rng(15);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform_int(rng, 1, 6);
    const RationalMatrix m = testing::random_matrix(rng, n, pool);
    const Rational d = det(m);
    if (d.is_zero()) {
      EXPECT_THROW(inverse(m), SingularMatrixError);
      continue;
    }
    const RationalMatrix inv = inverse(m);
    EXPECT_EQ(RationalMatrix(m * inv), identity(n));
    EXPECT_EQ(inv, RationalMatrix(adjugate(m) / d));
  }
}

TEST(DeleteRowsColsTest, Examples) {
  EXPECT_EQ(delete_rows_cols(kK3W, VertexSet{}), kK3W);
  EXPECT_EQ(delete_rows_cols(kK3L, VertexSet{0}), kP2);
  const RationalMatrix empty = delete_rows_cols(kK3L, VertexSet{0, 1, 2});
  EXPECT_EQ(empty.rows(), 0);
  EXPECT_EQ(det(empty), Rational(1));
  const RationalMatrix m = rational_matrix({{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}});
  EXPECT_EQ(delete_rows_cols(m, VertexSet{1}), rational_matrix({{"1", "3"}, {"7", "9"}}));
  EXPECT_THROW(delete_rows_cols(m, VertexSet{3}), std::out_of_range);
}

TEST(CharPolyTest, Examples) {
  const Polynomial<Rational> zero = char_poly(RationalMatrix(RationalMatrix::Zero(2, 2)));
  EXPECT_EQ(zero.coeffs, (std::vector<Rational>{0, 0, 1}));
  EXPECT_EQ(char_poly(kK3L).coeffs, (std::vector<Rational>{0, 9, 6, 1}));
  EXPECT_EQ(char_poly(RationalMatrix(0, 0)).coeffs, (std::vector<Rational>{1}));
}

TEST(CharPolyTest, MatchesPrincipalMinorSumsAndDet) {
  std::mt19937_64 rng(16);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 80; ++trial) {
    const int n = testing::uniform_int(rng, 1, 6);
    const RationalMatrix m = testing::random_matrix(rng, n, pool);
    const Polynomial<Rational> p = char_poly(m);
    ASSERT_EQ(p.degree(), n);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(p.coeffs[k], principal_minor_sum(m, k)) << "k=" << k;
    EXPECT_EQ(p.coeffs[0], det(m));
    EXPECT_EQ(p(Rational(3)), det(RationalMatrix(m + identity(n) * Rational(3))));
  }
}

TEST(PrincipalMinorSumTest, Examples) {
  EXPECT_EQ(principal_minor_sum(kK3L, 3), Rational(1));
  EXPECT_EQ(principal_minor_sum(kK3W, 0), det(kK3W));
  EXPECT_EQ(principal_minor_sum(kK3L, 1), Rational(9));
  EXPECT_THROW(principal_minor_sum(kK3L, 4), std::out_of_range);
  EXPECT_THROW(principal_minor_sum(kK3L, -1), std::out_of_range);
}

TEST(FloatMatrixTest, MirrorsExactRoutines) {
  std::mt19937_64 rng(17);
  const auto pool = testing::positive_weight_pool();
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::uniform_int(rng, 1, 6);
    RationalMatrix m = testing::random_matrix(rng, n, pool);
    m.diagonal().array() += Rational(4);
    const Eigen::MatrixXd f = to_double(m);
    EXPECT_NEAR(det(f), det(m).to_double(), 1e-9 * std::abs(det(m).to_double()));
    EXPECT_TRUE(inverse(f).isApprox(to_double(inverse(m)), 1e-12));
    const auto pf = char_poly(f);
    const auto pe = char_poly(m);
    for (int k = 0; k <= n; ++k) {
      EXPECT_NEAR(pf.coeffs[k], pe.coeffs[k].to_double(), 1e-8 * (1 + std::abs(pe.coeffs[k].to_double())));
    }
  }
}

}  // namespace
}  // namespace mft
