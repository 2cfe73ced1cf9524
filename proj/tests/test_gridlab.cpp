#include <gtest/gtest.h>

#include <algorithm>

#include "expoly/battery.hpp"
#include "expoly/decompose.hpp"
#include "expoly/errors.hpp"
#include "expoly/gridlab.hpp"
#include "expoly/text.hpp"
#include "oracles.hpp"

using namespace expoly;

namespace {

ExpPoly P(const char* text) { return parse_expr(text); }

/// M[x][y] = f(x + y) over box x box, built directly from evaluate.
std::vector<std::vector<Scalar>> sum_matrix(const ExpPoly& f, const GridBox& box) {
  const auto pts = box.points();
  std::vector<std::vector<Scalar>> m(pts.size(), std::vector<Scalar>(pts.size()));
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) m[a][b] = f.evaluate(pts[a] + pts[b]);
  }
  return m;
}

std::vector<Scalar> ints(std::initializer_list<long long> xs) {
  std::vector<Scalar> out;
  for (auto x : xs) out.emplace_back(Scalar::rational(x, 1));
  return out;
}

bool has_flag(const OrderBounds& b, const std::string& flag) {
  return std::find(b.flags.begin(), b.flags.end(), flag) != b.flags.end();
}

}  // namespace

TEST(GridBox, ShapeAndErrors) {
  const GridBox b({0, -1}, {1, 1});
  EXPECT_EQ(b.volume(), 6U);
  EXPECT_EQ(b.to_string(), "0..1,-1..1");
  const auto pts = b.points();
  EXPECT_EQ(pts.front(), (GroupElem{0, -1}));
  EXPECT_EQ(pts[1], (GroupElem{0, 0}));
  EXPECT_EQ(pts.back(), (GroupElem{1, 1}));
  EXPECT_THROW(GridBox({2}, {1}), MalformedInput);
  EXPECT_THROW(GridBox({}, {}), MalformedInput);
  EXPECT_THROW(GridBox({0, 0}, {1}), DimensionMismatch);
}

TEST(Sample, Examples) {
  EXPECT_EQ(sample(P("exp(2)"), GridBox::cube(1, 0, 2)).values, ints({1, 2, 4}));
  EXPECT_EQ(sample(ExpPoly(1), GridBox::cube(1, 0, 2)).values, ints({0, 0, 0}));
  EXPECT_EQ(sample(P("t1 + t2"), GridBox::cube(2, 0, 1)).values, ints({0, 1, 1, 2}));
  EXPECT_THROW(sample(P("t1"), GridBox::cube(2, 0, 1)), DimensionMismatch);
}

TEST(SumRank, Examples) {
  EXPECT_EQ(sum_rank(P("exp(2)"), GridBox::cube(1, 0, 3)).rank, 1U);
  EXPECT_EQ(sum_rank(P("t1^2"), GridBox::cube(1, 0, 3)).rank, 3U);
  EXPECT_EQ(sum_rank(ExpPoly(1), GridBox::cube(1, 0, 3)).rank, 0U);
  EXPECT_EQ(sum_rank(P("t1*exp(2) + t1"), GridBox::cube(1, 0, 4)).rank, 4U);
}

TEST(SumRank, SumOfSquaresHasRankNPlusTwo) {
  for (std::size_t N = 1; N <= 3; ++N) {
    const ExpPoly q = sum_of_squares(N);
    const GridBox box = GridBox::cube(N, 0, 2);
    const auto cert = sum_rank(q, box);
    EXPECT_EQ(cert.rank, N + 2);
    EXPECT_EQ(oracle::gauss_rank(sum_matrix(q, box)), N + 2);
  }
}

TEST(SumRank, ExplicitRankDecompositionOfSumOfSquares) {
  // q(x + y) = q(x) * 1 + 1 * q(y) + sum_i 2 x_i y_i
  for (std::size_t N = 1; N <= 4; ++N) {
    const ExpPoly q = sum_of_squares(N);
    const GridBox box = GridBox::cube(N, -1, 1);
    for (const auto& x : box.points()) {
      for (const auto& y : box.points()) {
        Scalar acc = q.evaluate(x) + q.evaluate(y);
        for (std::size_t i = 0; i < N; ++i) acc += Scalar(2 * x.coords[i] * y.coords[i]);
        ASSERT_EQ(acc, q.evaluate(x + y));
      }
    }
  }
}

TEST(SumRank, AgreesWithOracleAndCertificateIsSound) {
  Rng rng(31);
  for (int k = 0; k < 30; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const ExpPoly f = random_exppoly(rng, BatterySpec{d, 2, 2, false});
    const GridBox box = d == 1 ? GridBox::cube(1, -1, 4) : GridBox::cube(2, 0, 2);
    const auto m = sum_matrix(f, box);
    const auto cert = sum_rank(f, box);
    ASSERT_EQ(cert.rank, oracle::gauss_rank(m)) << f.to_string();
    ASSERT_EQ(cert.pivot_rows.size(), cert.rank);
    ASSERT_EQ(cert.pivot_cols.size(), cert.rank);
    if (cert.rank == 0 || cert.rank > 6) continue;
    std::vector<std::vector<Scalar>> minor;
    for (auto r : cert.pivot_rows) {
      std::vector<Scalar> row;
      for (auto c : cert.pivot_cols) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    EXPECT_FALSE(oracle::cofactor_det(minor).is_zero()) << f.to_string();
  }
}

TEST(SumRank, StableOnGrowingWindowsEqualsSpanDimension) {
  Rng rng(37);
  for (int k = 0; k < 20; ++k) {
    const ExpPoly f = random_exppoly(rng, BatterySpec{1, 3, 2, true});
    const auto deg = static_cast<std::int64_t>(f.degree());
    const auto r1 = sum_rank(f, GridBox::cube(1, 0, deg + 1)).rank;
    const auto r2 = sum_rank(f, GridBox::cube(1, 0, deg + 2)).rank;
    EXPECT_EQ(r1, r2) << f.to_string();
    EXPECT_EQ(r1, static_cast<std::size_t>(deg) + (f.has_identity_in_spectrum() ? 1 : 0));
  }
}

TEST(RefuteOrder2, SumOfSquaresIsRefuted) {
  const auto r = refute_order2(sum_of_squares(2), 3, GridBox::cube(2, 0, 2));
  EXPECT_TRUE(r.refuted);
  ASSERT_FALSE(r.entries.empty());
  for (const auto& e : r.entries) {
    EXPECT_EQ(e.rank, 4U);
    EXPECT_NE(e.E1.contains(e.j), e.E1.contains(e.k));
    EXPECT_NE(e.E2.contains(e.j), e.E2.contains(e.k));
  }
}

TEST(RefuteOrder2, InconclusiveCases) {
  const auto a = refute_order2(P("exp(2)"), 3, GridBox::cube(1, 0, 3));
  EXPECT_FALSE(a.refuted);
  const auto b = refute_order2(P("t1"), 3, GridBox::cube(1, 0, 3));
  EXPECT_FALSE(b.refuted);
  for (const auto& e : b.entries) EXPECT_EQ(e.rank, 2U);
  EXPECT_THROW(refute_order2(P("t1"), 2, GridBox::cube(1, 0, 3)), PreconditionViolation);
}

TEST(MinOrderBounds, Examples) {
  const auto sq = min_order_bounds(P("t1^2"), 2, GridBox::cube(1, 0, 3), 4);
  EXPECT_EQ(sq.lower, 3U);
  EXPECT_EQ(sq.upper, 3U);
  EXPECT_TRUE(has_flag(sq, "EXACT"));

  const auto q2 = min_order_bounds(sum_of_squares(2), 3, GridBox::cube(2, 0, 2), 4);
  EXPECT_EQ(q2.lower, 3U);
  EXPECT_EQ(q2.upper, 3U);
  EXPECT_EQ(q2.lower_route, "refute_order2");
  EXPECT_TRUE(q2.exact());

  const auto e = min_order_bounds(P("exp(2)"), 4, GridBox::cube(1, 0, 3), 4);
  EXPECT_EQ(e.lower, 1U);
  EXPECT_EQ(e.upper, 1U);

  const auto z = min_order_bounds(ExpPoly(1), 3, GridBox::cube(1, 0, 3), 4);
  EXPECT_EQ(z.upper, 0U);
  EXPECT_TRUE(z.exact());

  EXPECT_THROW(min_order_bounds(P("t1"), 3, GridBox::cube(1, 0, 3), 7), PreconditionViolation);
  EXPECT_THROW(min_order_bounds(P("t1"), 1, GridBox::cube(1, 0, 3), 4), PreconditionViolation);
  EXPECT_THROW(min_order_bounds(P("t1"), 2, GridBox::cube(2, 0, 3), 4), DimensionMismatch);
}

TEST(MinOrderBounds, CertifiedBoundsBracketWitnessOrder) {
  Rng rng(43);
  for (int k = 0; k < 15; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const ExpPoly f = random_exppoly(rng, BatterySpec{d, 2, 2, false});
    const std::size_t n = 3;
    const auto b = min_order_bounds(f, n, default_box(f), 2, static_cast<std::uint64_t>(k));
    EXPECT_LE(b.lower, b.upper);
    EXPECT_LE(b.upper, decompose_sum(f, n).order()) << f.to_string();
    EXPECT_GE(b.lower, static_cast<std::size_t>(f.degree()));
    EXPECT_EQ(has_flag(b, "EXACT"), b.exact());
    EXPECT_EQ(has_flag(b, "OPEN"), !b.exact());
  }
}

TEST(Heuristic, IsLabelledAndAdvisory) {
  const auto one = heuristic_order_search(P("exp(2)"), 2, 1, 3, 0);
  EXPECT_TRUE(one.attempted);
  ASSERT_TRUE(one.feasible_order.has_value());
  EXPECT_EQ(*one.feasible_order, 1U);

  const auto lin = heuristic_order_search(P("t1"), 2, 1, 3, 0);
  ASSERT_TRUE(lin.feasible_order.has_value());
  EXPECT_EQ(*lin.feasible_order, 2U);

  const auto none = heuristic_order_search(P("t1^2"), 2, 1, 2, 0);
  EXPECT_TRUE(none.attempted);
  EXPECT_FALSE(none.feasible_order.has_value());
  EXPECT_GT(none.best_residual, 1e-9);

  const auto skipped = heuristic_order_search(P("t1 + t2 + t3"), 2, 1, 3, 0);
  EXPECT_FALSE(skipped.attempted);
  EXPECT_FALSE(skipped.note.empty());

  // deterministic for a fixed seed
  const auto again = heuristic_order_search(P("t1"), 2, 1, 3, 0);
  EXPECT_EQ(again.best_residual, lin.best_residual);
  EXPECT_EQ(again.note, lin.note);
}

TEST(ExponentialsInSpan, Examples) {
  const GridBox box = GridBox::cube(1, 0, 4);
  const std::vector<GridFunction> basis{sample(P("exp(2)"), box), sample(P("exp(3)"), box)};
  const std::vector<Exponential> cands{Exponential::of(2), Exponential::of(3), Exponential::of(5)};
  EXPECT_EQ(exponentials_in_span(basis, cands, box), (std::vector<Exponential>{Exponential::of(2), Exponential::of(3)}));

  const std::vector<GridFunction> mixed{sample(P("exp(2) + exp(3)"), box)};
  EXPECT_TRUE(exponentials_in_span(mixed, cands, box).empty());
  EXPECT_TRUE(exponentials_in_span({}, cands, box).empty());
  EXPECT_THROW(exponentials_in_span(basis, cands, GridBox::cube(1, 0, 3)), PreconditionViolation);
}

TEST(Reconstruct, Examples) {
  const auto a = reconstruct_gep(sample(P("exp(2)"), GridBox::cube(1, 0, 9)));
  EXPECT_EQ(a.order, 1U);
  EXPECT_EQ(a.f, P("exp(2)"));

  const auto b = reconstruct_gep(sample(P("t1"), GridBox::cube(1, 0, 9)));
  EXPECT_EQ(b.order, 2U);
  EXPECT_EQ(b.characteristic, UniPoly::linear(Scalar(1)) * UniPoly::linear(Scalar(1)));
  ASSERT_EQ(b.roots.size(), 1U);
  EXPECT_EQ(b.roots[0].second, 2U);
  EXPECT_EQ(b.f, P("t1"));

  const ExpPoly c = P("t1*exp(2) + 1");
  const auto rc = reconstruct_gep(sample(c, GridBox::cube(1, 0, 11)));
  EXPECT_EQ(rc.order, 3U);
  EXPECT_EQ(rc.f, c);

  const auto z = reconstruct_gep(sample(ExpPoly(1), GridBox::cube(1, 0, 5)));
  EXPECT_EQ(z.order, 0U);
  EXPECT_TRUE(z.f.is_zero());
}

TEST(Reconstruct, ShiftedWindowAndGaussianSpectrum) {
  const ExpPoly f = P("(t1 - 2)*exp(-1/2) + 3*exp(i)");
  const auto r = reconstruct_gep(sample(f, GridBox::cube(1, -3, 8)));
  EXPECT_EQ(r.order, 3U);
  EXPECT_EQ(r.f, f);
}

TEST(Reconstruct, RoundTripOnBattery) {
  Rng rng(47);
  for (int k = 0; k < 25; ++k) {
    const ExpPoly f = random_exppoly(rng, BatterySpec{1, 3, 2, false});
    const auto deg = static_cast<std::int64_t>(f.degree());
    const auto r = reconstruct_gep(sample(f, GridBox::cube(1, 0, 4 * (deg + 1) + 2)));
    ASSERT_EQ(r.f, f) << f.to_string();
  }
}

TEST(Reconstruct, Errors) {
  using Kind = ReconstructionError::Kind;
  try {
    reconstruct_gep(sample(P("t1^3"), GridBox::cube(1, 0, 3)));
    FAIL() << "expected window_too_small";
  } catch (const ReconstructionError& e) {
    EXPECT_EQ(e.kind(), Kind::window_too_small);
  }

  std::vector<Scalar> fib{Scalar(0), Scalar(1)};
  while (fib.size() < 16) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  try {
    reconstruct_gep(GridFunction{GridBox::cube(1, 0, 15), fib});
    FAIL() << "expected spectrum_outside_field";
  } catch (const ReconstructionError& e) {
    EXPECT_EQ(e.kind(), Kind::spectrum_outside_field);
    EXPECT_FALSE(e.factor().empty());
  }

  try {
    reconstruct_gep(GridFunction{GridBox::cube(1, 0, 5), ints({1, 0, 0, 0, 0, 0})});
    FAIL() << "expected spectrum_outside_field";
  } catch (const ReconstructionError& e) {
    EXPECT_EQ(e.kind(), Kind::spectrum_outside_field);
  }

  try {
    reconstruct_gep(sample(P("t1 + t2"), GridBox::cube(2, 0, 3)));
    FAIL() << "expected bad_input";
  } catch (const ReconstructionError& e) {
    EXPECT_EQ(e.kind(), Kind::bad_input);
  }
}

TEST(MinimalRecurrence, MatchesBerlekampMassey) {
  Rng rng(53);
  for (int k = 0; k < 40; ++k) {
    const ExpPoly f = random_exppoly(rng, BatterySpec{1, 3, 2, false});
    const auto vals = sample(f, GridBox::cube(1, 0, 13)).values;
    const auto rec = minimal_recurrence(vals);
    ASSERT_TRUE(rec.has_value());
    EXPECT_EQ(rec->order, oracle::linear_complexity(vals)) << f.to_string();
    for (std::size_t i = 0; i + rec->order < vals.size(); ++i) {
      Scalar acc(0);
      for (std::size_t j = 0; j < rec->order; ++j) acc += rec->coeffs[j] * vals[i + j];
      ASSERT_EQ(acc, vals[i + rec->order]);
    }
  }
}
