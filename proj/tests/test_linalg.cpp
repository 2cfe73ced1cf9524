#include <gtest/gtest.h>

#include <algorithm>

#include "expoly/linalg.hpp"
#include "expoly/rng.hpp"
#include "expoly/unipoly.hpp"
#include "oracles.hpp"

using namespace expoly;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  // product of rows x rank and rank x cols factors, so the rank is at most `rank`
  Matrix a(rows, rank);
  Matrix b(rank, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < rank; ++k) a(i, k) = Scalar::gaussian(rng.uniform(-3, 3), rng.uniform(-1, 1));
  }
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = Scalar::rational(rng.uniform(-4, 4), rng.uniform(1, 3));
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < rank; ++k) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

UniPoly from_roots(const std::vector<Scalar>& roots) {
  UniPoly p({Scalar(1)});
  for (const auto& r : roots) p = p * UniPoly::linear(r);
  return p;
}

}  // namespace

TEST(Bareiss, MatchesOracleRank) {
  Rng rng(71);
  for (int k = 0; k < 60; ++k) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 7));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
    const auto r = static_cast<std::size_t>(rng.uniform(0, 4));
    const Matrix m = random_matrix(rng, rows, cols, r);
    const auto cert = bareiss_rank(m);
    ASSERT_EQ(cert.rank, oracle::gauss_rank(oracle::rows_of(m)));
    if (cert.rank == 0) continue;
    EXPECT_FALSE(determinant(m.submatrix(cert.pivot_rows, cert.pivot_cols)).is_zero());
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  Rng rng(73);
  for (int k = 0; k < 30; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix m = random_matrix(rng, n, n, n);
    EXPECT_EQ(determinant(m), oracle::cofactor_det(oracle::rows_of(m)));
  }
  Matrix singular(2, 2);
  singular(0, 0) = Scalar(1);
  singular(0, 1) = Scalar(2);
  singular(1, 0) = Scalar(2);
  singular(1, 1) = Scalar(4);
  EXPECT_TRUE(determinant(singular).is_zero());
}

TEST(Solve, ConsistentAndInconsistentSystems) {
  Rng rng(79);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = random_matrix(rng, 5, 3, 3);
    std::vector<Scalar> x{Scalar(rng.uniform(-3, 3)), Scalar::rational(1, 2), Scalar::i()};
    std::vector<Scalar> b(5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 3; ++j) b[i] += a(i, j) * x[j];
    }
    const auto sol = solve(a, b);
    ASSERT_TRUE(sol.has_value());
    for (std::size_t i = 0; i < 5; ++i) {
      Scalar acc(0);
      for (std::size_t j = 0; j < 3; ++j) acc += a(i, j) * (*sol)[j];
      ASSERT_EQ(acc, b[i]);
    }
  }
  Matrix a(2, 1);
  a(0, 0) = Scalar(1);
  a(1, 0) = Scalar(1);
  EXPECT_FALSE(solve(a, {Scalar(1), Scalar(2)}).has_value());
}

TEST(SpanBasis, Membership) {
  SpanBasis span(3);
  EXPECT_TRUE(span.add({Scalar(1), Scalar(2), Scalar(3)}));
  EXPECT_FALSE(span.add({Scalar(2), Scalar(4), Scalar(6)}));
  EXPECT_TRUE(span.add({Scalar(0), Scalar(1), Scalar(1)}));
  EXPECT_EQ(span.dimension(), 2U);
  EXPECT_TRUE(span.contains({Scalar(1), Scalar(3), Scalar(4)}));
  EXPECT_FALSE(span.contains({Scalar(0), Scalar(0), Scalar(1)}));
  EXPECT_FALSE(span.add({Scalar(0), Scalar(0), Scalar(0)}));
}

TEST(UniPoly, ArithmeticAndGcd) {
  const UniPoly a = from_roots({Scalar(1), Scalar(2), Scalar::i()});
  const UniPoly b = from_roots({Scalar(2), Scalar::i(), Scalar(-3)});
  EXPECT_EQ(gcd(a, b), from_roots({Scalar(2), Scalar::i()}));
  EXPECT_EQ(a.evaluate(Scalar::i()), Scalar(0));
  EXPECT_EQ(UniPoly({Scalar(1), Scalar(0), Scalar(3)}).derivative(), UniPoly({Scalar(0), Scalar(6)}));
  EXPECT_EQ(UniPoly({Scalar(2), Scalar(4)}).monic(), UniPoly({Scalar::rational(1, 2), Scalar(1)}));
  EXPECT_EQ((a - a).degree(), -1);
}

TEST(UniPoly, SquarefreeFactorisation) {
  const UniPoly p = from_roots({Scalar(1), Scalar(1), Scalar(1), Scalar(2), Scalar(2), Scalar::rational(-1, 2)});
  const auto f = squarefree_factors(p);
  ASSERT_GE(f.size(), 3U);
  EXPECT_EQ(f[0], UniPoly::linear(Scalar::rational(-1, 2)));
  EXPECT_EQ(f[1], UniPoly::linear(Scalar(2)));
  EXPECT_EQ(f[2], UniPoly::linear(Scalar(1)));
  UniPoly product({Scalar(1)});
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) product = product * f[i];
  }
  EXPECT_EQ(product, p.monic());
}

TEST(UniPoly, GaussianRationalRoots) {
  const std::vector<Scalar> roots{Scalar(3), Scalar::rational(-2, 5), Scalar::gaussian(1, -1), Scalar(mpq_class(1, 2), mpq_class(1, 3))};
  const auto found = gaussian_rational_roots(from_roots(roots));
  EXPECT_EQ(found.roots.size(), roots.size());
  for (const auto& r : roots) EXPECT_NE(std::find(found.roots.begin(), found.roots.end(), r), found.roots.end());
  EXPECT_EQ(found.remainder.degree(), 0);

  // z^2 - z - 1 has irrational roots
  const auto none = gaussian_rational_roots(UniPoly({Scalar(-1), Scalar(-1), Scalar(1)}));
  EXPECT_TRUE(none.roots.empty());
  EXPECT_EQ(none.remainder.degree(), 2);

  // (z - 2)(z^2 - 2)
  const auto partial = gaussian_rational_roots(UniPoly::linear(Scalar(2)) * UniPoly({Scalar(-2), Scalar(0), Scalar(1)}));
  EXPECT_EQ(partial.roots, std::vector<Scalar>{Scalar(2)});
  EXPECT_EQ(partial.remainder.degree(), 2);
}

TEST(Rationalize, RecoversSmallFractions) {
  EXPECT_EQ(rationalize(0.333333333333, 1000), mpq_class(1, 3));
  EXPECT_EQ(rationalize(-2.5, 1000), mpq_class(-5, 2));
  EXPECT_EQ(rationalize(7.0, 10), mpq_class(7));
}
