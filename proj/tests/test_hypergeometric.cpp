#include <gtest/gtest.h>

#include "parabi/families.hpp"
#include "parabi/hypergeometric.hpp"
#include "parabi/verify.hpp"
#include "support/correction_display.hpp"
#include "support/instances.hpp"

using namespace parabi;
using parabi::testing::label;
using parabi::testing::make;

TEST(ExplicitEval, MatchesRecurrenceEverywhere) {
  for (const auto& p : parabi::testing::all_instances()) {
    const auto P = generate_polys(p, p.N());
    for (const auto& x : random_rationals(2 * p.N() + 5, 99))
      for (int n = 0; n <= p.N(); ++n) EXPECT_EQ(explicit_eval(p, n, x), P[n](x)) << label(p) << " n=" << n;
  }
}

TEST(ExplicitEval, ConstantTermAndOddRoot) {
  const ParamSet p0 = make(FamilyCase::P0, 4, "-6", "1/2", "1/3");
  const ParamSet p2 = make(FamilyCase::P2, 5, "-6", "1/3", "2/7");
  for (const auto& x : random_rationals(5)) EXPECT_EQ(explicit_eval(p0, 0, x), 1);
  for (int m = 1; m <= p0.N(); m += 2) EXPECT_EQ(explicit_eval(p0, m, (p0.b() - p0.j() - 1 - p0.a()) / 4), 0) << m;
  for (int m = 1; m <= p2.N(); m += 2) EXPECT_EQ(explicit_eval(p2, m, -(p2.b() + p2.j() + 1 + p2.a()) / 4), 0) << m;
}

TEST(ExplicitEval, SmallP0Value) {
  const ParamSet p = make(FamilyCase::P0, 2, "-4", "0", "1/2");
  EXPECT_EQ(explicit_eval(p, 3, 1), generate_polys(p)[3](Rational(1)));
}

TEST(ExplicitEval, DegreeOutOfRange) {
  const ParamSet p = make(FamilyCase::P0, 2, "-4", "0", "1/2");
  EXPECT_THROW(explicit_eval(p, p.N() + 1, 0), ArgumentError);
  EXPECT_THROW(explicit_eval(p, -1, 0), ArgumentError);
}

TEST(ExplicitEval, DeformedBranchNeedsNonEndpointAlpha) {
  const ParamSet p0 = make(FamilyCase::P0, 4, "-6", "1/2", "1");
  EXPECT_NO_THROW(explicit_eval(p0, 2, Rational(1, 3)));
  EXPECT_THROW(explicit_eval(p0, 6, Rational(1, 3)), DegenerateDeformationError);
  const ParamSet p2 = make(FamilyCase::P2, 3, "-4", "1/2", "0");
  EXPECT_THROW(explicit_eval(p2, 6, Rational(1, 3)), DegenerateDeformationError);
}

TEST(SummandBranch, BoundariesArePinned) {
  // P0, j = 4: even degree switches after k = 2, odd degree at k = 2.
  EXPECT_EQ(summand_branch(FamilyCase::P0, false, 4, 2), SummandBranch::Plain);
  EXPECT_EQ(summand_branch(FamilyCase::P0, false, 4, 3), SummandBranch::Deformed);
  EXPECT_EQ(summand_branch(FamilyCase::P0, true, 4, 1), SummandBranch::Plain);
  EXPECT_EQ(summand_branch(FamilyCase::P0, true, 4, 2), SummandBranch::Deformed);
  // P2, j = 5: boundary 2.
  EXPECT_EQ(summand_branch(FamilyCase::P2, false, 5, 2), SummandBranch::Plain);
  EXPECT_EQ(summand_branch(FamilyCase::P2, false, 5, 3), SummandBranch::Deformed);
  EXPECT_EQ(summand_branch(FamilyCase::P2, true, 5, 1), SummandBranch::Plain);
  EXPECT_EQ(summand_branch(FamilyCase::P2, true, 5, 2), SummandBranch::Deformed);
}

TEST(SummandBranch, BothBranchesAreExercised) {
  const ParamSet p = make(FamilyCase::P0, 6, "-7", "-1/3", "1/4");
  int plain = 0, deformed = 0;
  for (int m = 0; m <= p.N(); ++m)
    EXPECT_EQ(summand_table(p, m, Rational(2, 9)).entries.size(), static_cast<std::size_t>(m / 2 + 1));
  for (int m = 0; m <= p.N(); ++m)
    for (int k = 0; k <= m / 2; ++k)
      (summand_branch(FamilyCase::P0, m % 2 == 1, p.j(), k) == SummandBranch::Plain ? plain : deformed)++;
  EXPECT_GT(plain, 0);
  EXPECT_GT(deformed, 0);
}

TEST(Regularized, PoleBookkeeping) {
  const Regularized r = rpoch(1, -1);
  EXPECT_EQ(r.order(), -1);
  EXPECT_THROW(r.value(), SingularParameterError);
  EXPECT_EQ((r * rpoch(-2, 3)).value(), 2);
  EXPECT_EQ(rpoch(Rational(1, 2), 2).value(), Rational(3, 4));
  EXPECT_EQ(rpoch(-1, 2).value(), 0);
  EXPECT_EQ(rpoch(4, -2).value(), Rational(1, 6));
}

TEST(Hypergeo4F3, Examples) {
  EXPECT_EQ(hypergeo_4F3({0, Rational(1, 3), 2, 5}, {1, 2, 3}, 5), 1);
  EXPECT_EQ(hypergeo_4F3({-2, 1, 1, 1}, {1, 1, 1}, 0), 1);
  // (-1)_k (b)_k / (k! (c)_k) summed with one term: 1 - b/c.
  EXPECT_EQ(hypergeo_4F3({-1, 3, 1, 1}, {4, 1, 1}, 4), Rational(1, 4));
  EXPECT_THROW(hypergeo_4F3({-3, 1, 1, 1}, {-1, 1, 1}, 3), SingularParameterError);
}

TEST(Hypergeo4F3, PlainEvenDegreeIsOneSeries) {
  const ParamSet p = make(FamilyCase::P0, 4, "-6", "1/2", "1/3");
  const auto P = generate_polys(p, p.N());
  const Rational r = (p.b() - p.j() - 1 - p.a()) / 4;
  for (int n = 0; n <= p.j() / 2; ++n)
    for (const auto& x : random_rationals(4, 5)) {
      const Rational kappa = normalizer(p, 2 * n).kappa.value();
      const Rational series = hypergeo_4F3({-n, n - p.j(), r + x, r - x},
                                           {(1 + p.b() - p.j()) / 2, -(p.j() + p.a()) / 2, Rational(-p.j(), 2)}, n);
      EXPECT_EQ(kappa * series, P[2 * n](x));
    }
}

TEST(CorrectionDisplay, TwoPartSumAgreesWithSummandTable) {
  for (const auto& p : parabi::testing::all_instances()) {
    if (p.family() != FamilyCase::P0) continue;
    for (const auto& x : random_rationals(6, 3))
      for (int m = 0; m <= p.N(); ++m)
        EXPECT_EQ(parabi::testing::two_part_eval(p, m, x), explicit_eval(p, m, x)) << label(p) << " m=" << m;
  }
}

TEST(CorrectionDisplay, OddCorrectionLowerParameterIsHalfJPlusOne) {
  const ParamSet p = make(FamilyCase::P0, 4, "-6", "1/2", "1/3");
  const Rational x(2, 7);
  EXPECT_EQ(parabi::testing::two_part_eval(p, 7, x, 2), explicit_eval(p, 7, x));
  EXPECT_NE(parabi::testing::two_part_eval(p, 7, x, 4), explicit_eval(p, 7, x));
}
