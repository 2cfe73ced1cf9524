#include <gtest/gtest.h>

#include <algorithm>

#include "expoly/battery.hpp"
#include "expoly/diffops.hpp"
#include "expoly/errors.hpp"
#include "expoly/text.hpp"

using namespace expoly;

namespace {

ExpPoly P(const char* text) { return parse_expr(text); }

}  // namespace

TEST(Delta, Examples) {
  EXPECT_EQ(delta(P("t1^2"), {1}), P("2*t1 + 1"));
  EXPECT_TRUE(delta(P("7/3"), {4}).is_zero());
  EXPECT_EQ(delta(P("exp(2)"), {1}), P("exp(2)"));
  EXPECT_THROW(delta(P("t1"), {1, 0}), DimensionMismatch);
}

TEST(Delta, LowersPolynomialDegree) {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const GenPoly p = random_genpoly(rng, d, 4);
    const ExpPoly g = delta(ExpPoly::from_poly(p), random_step(rng, d));
    EXPECT_LE(g.max_poly_degree(), p.degree() - 1);
  }
}

TEST(MDelta, Examples) {
  const Exponential two = Exponential::of(2);
  EXPECT_TRUE(mdelta(P("exp(2)"), two, {5}).is_zero());
  EXPECT_EQ(mdelta(P("t1"), Exponential::identity(1), {1}), P("1"));
  const ExpPoly f = P("t1*exp(2)");
  const ExpPoly g = mdelta(f, two, {1});
  EXPECT_EQ(g, P("2*exp(2)"));
  for (std::int64_t x = 0; x <= 5; ++x) EXPECT_EQ(g.evaluate({x}), f.evaluate({x + 1}) - Scalar(2) * f.evaluate({x}));
}

TEST(MDelta, IdentityModifierIsDelta) {
  Rng rng(9);
  for (int k = 0; k < 20; ++k) {
    const ExpPoly f = random_exppoly(rng, BatterySpec{2, 3, 2, false});
    const GroupElem h = random_step(rng, 2);
    EXPECT_EQ(mdelta(f, Exponential::identity(2), h), delta(f, h));
  }
}

TEST(ApplyWord, Examples) {
  EXPECT_TRUE(apply_word(P("t1^2"), DiffOpWord{{DiffFactor::plain({1}, 3)}}).is_zero());
  const ExpPoly f = P("t1*exp(2) + 3");
  EXPECT_EQ(apply_word(f, DiffOpWord{}), f);
  const DiffOpWord w{{DiffFactor::modified(Exponential::of(2), {1}, 2),
                      DiffFactor::modified(Exponential::identity(1), {1}, 2)}};
  EXPECT_TRUE(apply_word(P("t1*exp(2) + t1"), w).is_zero());
}

TEST(ApplyWord, RejectsBadFactors) {
  EXPECT_THROW(apply_word(P("t1"), DiffOpWord{{DiffFactor::plain({1}, 0)}}), PreconditionViolation);
  EXPECT_THROW(apply_word(P("t1"), DiffOpWord{{DiffFactor::plain({1, 1})}}), DimensionMismatch);
  EXPECT_THROW(apply_word(ExpPoly(1), DiffOpWord{{DiffFactor::modified(Exponential::of(2), {1, 0})}}),
               DimensionMismatch);
}

TEST(ApplyWord, FactorOrderIsIrrelevant) {
  Rng rng(21);
  for (int k = 0; k < 25; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const ExpPoly f = random_exppoly(rng, BatterySpec{d, 3, 3, false});
    DiffOpWord w;
    const auto len = rng.uniform(1, 4);
    for (std::int64_t j = 0; j < len; ++j) {
      const auto power = static_cast<unsigned>(rng.uniform(1, 2));
      if (rng.coin()) {
        w.factors.push_back(DiffFactor::plain(random_step(rng, d), power));
      } else {
        w.factors.push_back(DiffFactor::modified(random_exponential(rng, d, false), random_step(rng, d), power));
      }
    }
    const ExpPoly forward = apply_word(f, w);
    DiffOpWord reversed = w;
    std::reverse(reversed.factors.begin(), reversed.factors.end());
    EXPECT_EQ(apply_word(f, reversed), forward);
    DiffOpWord rotated = w;
    std::rotate(rotated.factors.begin(), rotated.factors.begin() + 1, rotated.factors.end());
    EXPECT_EQ(apply_word(f, rotated), forward);
  }
}

TEST(Annihilator, Examples) {
  const GroupElem h{2};
  const auto w1 = annihilator_for(P("t1^2"), std::vector<GroupElem>{h});
  ASSERT_EQ(w1.factors.size(), 1U);
  EXPECT_EQ(w1.factors[0].power, 3U);
  EXPECT_TRUE(w1.factors[0].modifier->is_identity());
  EXPECT_TRUE(apply_word(P("t1^2"), w1).is_zero());

  const auto w2 = annihilator_for(P("exp(2)"), std::vector<GroupElem>{h});
  EXPECT_EQ(w2.factors[0].power, 1U);
  EXPECT_TRUE(apply_word(P("exp(2)"), w2).is_zero());

  const ExpPoly f = P("t1*exp(2) + t1^2");
  for (std::int64_t h1 = 1; h1 <= 3; ++h1) {
    for (std::int64_t h2 = 1; h2 <= 3; ++h2) {
      // spectrum order: identity first, then 2
      const auto w = annihilator_for(f, std::vector<GroupElem>{{h2}, {h1}});
      EXPECT_EQ(w.factors.size(), 2U);
      EXPECT_TRUE(apply_word(f, w).is_zero());
    }
  }
  EXPECT_TRUE(annihilator_for(ExpPoly(1), std::vector<GroupElem>{}).factors.empty());
}

TEST(Annihilator, DifferenceIdentityForTwistedPolynomials) {
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const GenPoly g = random_genpoly(rng, d, 4);
    const Exponential m = random_exponential(rng, d, false);
    const GroupElem h = random_step(rng, d);
    const auto n = static_cast<unsigned>(rng.uniform(1, 3));
    ExpPoly lhs = ExpPoly::term(g, m);
    ExpPoly dg = ExpPoly::from_poly(g);
    for (unsigned j = 0; j < n; ++j) {
      lhs = mdelta(lhs, m, h);
      dg = delta(dg, h);
    }
    ASSERT_EQ(lhs, (dg * ExpPoly::from_exponential(m)).scaled(m.evaluate(h).pow(n)));
  }
}

TEST(Annihilator, DegreeDropTable) {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const GenPoly p = random_genpoly_of_degree(rng, d, static_cast<unsigned>(rng.uniform(0, 4)));
    const Exponential mi = random_exponential(rng, d, false);
    const bool same = rng.coin();
    const Exponential m = same ? mi : random_exponential(rng, d, false);
    const ExpPoly out = mdelta(ExpPoly::term(p, mi), m, random_step(rng, d));
    if (out.is_zero()) continue;
    ASSERT_EQ(out.terms().size(), 1U);
    EXPECT_EQ(out.terms()[0].exp, mi);
    const int dq = out.terms()[0].poly.degree();
    EXPECT_LE(dq, p.degree());
    if (m == mi) EXPECT_LT(dq, p.degree());
  }
}

TEST(Annihilator, RandomBatteryAndConverse) {
  Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const ExpPoly f = random_exppoly(rng, BatterySpec{d, 3, 3, false});
    const auto& first = f.terms().front();
    Exponents top(d, 0);
    top[0] = static_cast<std::uint32_t>(first.poly.degree() + 1);
    const ExpPoly g = f + ExpPoly::term(GenPoly::monomial(top, Scalar(1)), first.exp);
    bool escapes = false;
    for (int a = 0; a < 5; ++a) {
      std::vector<GroupElem> steps;
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        steps.push_back(a == 0 ? GroupElem::unit(d, 0) : random_step(rng, d));
      }
      const auto w = annihilator_for(f, steps);
      ASSERT_TRUE(apply_word(f, w).is_zero()) << f.to_string();
      escapes = escapes || !apply_word(g, w).is_zero();
    }
    EXPECT_TRUE(escapes) << g.to_string();
  }
}

TEST(Annihilator, NeedsOneStepPerTerm) {
  EXPECT_THROW(annihilator_for(P("t1 + exp(2)"), std::vector<GroupElem>{{1}}), PreconditionViolation);
}
