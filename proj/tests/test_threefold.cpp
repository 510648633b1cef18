#include <gtest/gtest.h>

#include "cybiv/bivector.hpp"
#include "cybiv/sampling.hpp"
#include "cybiv/threefold.hpp"

using namespace cybiv;

namespace {

constexpr int kIterations = 100;

const std::vector<ThreefoldSpec> kSpecs{{1, 1}, {2, 0}, {3, -1}, {0, 2}, {4, -2}, {2, 2}, {-1, 1}};

}  // namespace

TEST(Threefold, TransitionRoundTrip) {
  Rng rng(11);
  for (const auto& spec : kSpecs) {
    for (int i = 0; i < kIterations; ++i) {
      ChartPoly p = random_laurent(rng, 3, 3);
      EXPECT_EQ(express_in_u(spec, express_in_v(spec, p)), p);
      EXPECT_EQ(express_in_v(spec, express_in_u(spec, p)), p);
    }
  }
}

TEST(Threefold, CoordinateImages) {
  ThreefoldSpec w3{3, -1};
  auto img = coordinate_transition(w3, Direction::UtoV);
  EXPECT_EQ(img[0], ChartPoly::monomial(-1, 0, 0));
  EXPECT_EQ(img[1], ChartPoly::monomial(3, 1, 0));
  EXPECT_EQ(img[2], ChartPoly::monomial(-1, 0, 1));
}

TEST(Threefold, CalabiYauIffDegreesSumToTwo) {
  for (int k1 = -4; k1 <= 6; ++k1) {
    for (int k2 = -4; k2 <= 6; ++k2) {
      ThreefoldSpec s{k1, k2};
      EXPECT_EQ(jacobian_determinant(s), ChartPoly::monomial(k1 + k2 - 2, 0, 0, ExactScalar(-1)));
      EXPECT_EQ(s.is_calabi_yau(), k1 + k2 == 2);
    }
  }
}

TEST(Threefold, Lambda2TransitionIsInvertible) {
  for (const auto& spec : kSpecs) {
    auto m = lambda2_transition(spec, Direction::UtoV);
    auto inv = lambda2_transition(spec, Direction::VtoU);
    for (size_t i = 0; i < 3; ++i) {
      for (size_t j = 0; j < 3; ++j) {
        ChartPoly s;
        for (size_t k = 0; k < 3; ++k) s += express_in_u(spec, inv.entries[i][k]) * m.entries[k][j];
        EXPECT_EQ(s, ChartPoly(i == j ? 1 : 0)) << spec.name() << " " << i << j;
      }
    }
  }
}

TEST(Threefold, Lambda2MatrixOfW1ByHand) {
  // Minors of the Jacobian of (z, u1, u2) -> (1/z, z u1, z u2), computed by hand.
  auto m = lambda2_transition(ThreefoldSpec{1, 1}, Direction::UtoV);
  EXPECT_EQ(m.entries[0][0], ChartPoly::monomial(2, 0, 0));
  EXPECT_EQ(m.entries[0][1], ChartPoly::monomial(1, 1, 0, ExactScalar(-1)));
  EXPECT_EQ(m.entries[0][2], ChartPoly::monomial(1, 0, 1, ExactScalar(-1)));
  EXPECT_EQ(m.entries[1][1], ChartPoly::monomial(-1, 0, 0, ExactScalar(-1)));
  EXPECT_EQ(m.entries[2][2], ChartPoly::monomial(-1, 0, 0, ExactScalar(-1)));
  EXPECT_TRUE(m.entries[1][0].is_zero() && m.entries[2][0].is_zero());
  EXPECT_TRUE(m.entries[1][2].is_zero() && m.entries[2][1].is_zero());
}

TEST(Threefold, GlobalFunctionCriterion) {
  Rng rng(12);
  for (const auto& spec : kSpecs) {
    for (int i = 0; i < kIterations; ++i) {
      int r = static_cast<int>(rng() % 13) - 4, s = static_cast<int>(rng() % 4), t = static_cast<int>(rng() % 4);
      ChartPoly m = ChartPoly::monomial(r, s, t);
      bool expected = r >= 0 && r <= spec.k1 * s + spec.k2 * t;
      EXPECT_EQ(is_global_function(spec, m), expected) << spec.name() << " " << r << s << t;
      // global iff polynomial in both charts
      EXPECT_EQ(is_chart_polynomial(m) && is_chart_polynomial(express_in_v(spec, m)), expected);
    }
    for (const auto& m : global_function_monomials(spec, 3)) EXPECT_TRUE(is_global_function(spec, ChartPoly(m)));
  }
}

TEST(Bivector, ChangeOfChartRoundTrip) {
  Rng rng(13);
  for (const auto& spec : kSpecs) {
    for (int i = 0; i < kIterations; ++i) {
      CoefficientTriple q{random_laurent(rng), random_laurent(rng), random_laurent(rng)};
      BivectorField b(spec, q);
      EXPECT_EQ(BivectorField::from_v_coefficients(spec, b.v_coefficients()), b);
    }
  }
}

TEST(Bivector, NonGlobalReasonNamesMonomial) {
  BivectorField b(ThreefoldSpec{3, -1}, {ChartPoly(), ChartPoly(), ChartPoly::monomial(0, 0, 1)});
  auto why = b.nonglobal_reason();
  ASSERT_TRUE(why.has_value());
  EXPECT_NE(why->find("u2"), std::string::npos);
  EXPECT_NE(why->find("r <= 3*s + -1*t"), std::string::npos);
  BivectorField e10(ThreefoldSpec{3, -1}, {ChartPoly(), ChartPoly::monomial(0, 0, 1), ChartPoly()});
  EXPECT_TRUE(e10.is_global());
}

TEST(Bivector, SlotWeights) {
  ChartMonomial m(2, 1, 3);
  EXPECT_EQ(slot_multidegree(0, m), (Multidegree{2, 1, 3}));
  EXPECT_EQ(slot_multidegree(1, m), (Multidegree{1, 2, 3}));
  EXPECT_EQ(slot_multidegree(2, m), (Multidegree{1, 1, 4}));
  for (int slot = 0; slot < 3; ++slot) EXPECT_EQ(*slot_monomial(slot, slot_multidegree(slot, m)), m);
}
