#include <gtest/gtest.h>

#include "cybiv/reference_catalog.hpp"
#include "cybiv/sampling.hpp"
#include "cybiv/sections.hpp"

using namespace cybiv;

namespace {

constexpr int kIterations = 100;

const ThreefoldSpec kW1{1, 1};
const ThreefoldSpec kW2{2, 0};
const ThreefoldSpec kW3{3, -1};

/// Independent oracle: a single-slot monomial field is global iff its V-image is polynomial.
std::vector<BivectorField> global_monomial_fields(const ThreefoldSpec& spec, int n) {
  std::vector<BivectorField> out;
  for (int slot = 0; slot < 3; ++slot) {
    for (int s = 0; s <= n; ++s) {
      for (int t = 0; s + t <= n; ++t) {
        for (int r = -6; r <= 20; ++r) {
          CoefficientTriple q;
          q[static_cast<size_t>(slot)] = ChartPoly::monomial(r, s, t);
          BivectorField b(spec, q);
          if (b.is_global()) out.push_back(b);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST(Sections, BasisIsGlobalHomogeneousAndIndependent) {
  for (const auto& spec : reference_specs()) {
    auto basis = section_basis(spec, 2);
    std::vector<BivectorField> seen;
    for (const auto& b : basis) {
      EXPECT_TRUE(b.is_global());
      EXPECT_LE(b.max_fiber_degree(), 2);
      EXPECT_NO_THROW(weight_of(b));
      EXPECT_FALSE(in_linear_span(seen, b));
      seen.push_back(b);
    }
  }
}

TEST(Sections, GlobalMonomialFieldsLieInTheBasisSpan) {
  for (const auto& spec : reference_specs()) {
    auto basis = section_basis(spec, 2);
    for (const auto& m : global_monomial_fields(spec, 2)) EXPECT_TRUE(in_linear_span(basis, m)) << format_triple(m.q);
  }
}

TEST(Sections, RandomGlobalCombinationsLieInTheSpan) {
  Rng rng(21);
  for (const auto& spec : reference_specs()) {
    auto basis = section_basis(spec, 2);
    auto small = section_basis(spec, 1);
    for (int i = 0; i < kIterations; ++i) {
      BivectorField q = random_section(small, rng, 3);
      EXPECT_TRUE(q.is_global());
      EXPECT_TRUE(in_linear_span(basis, q));
    }
  }
}

TEST(Sections, NonGlobalFieldsAreOutsideTheSpan) {
  auto basis = section_basis(kW3, 2);
  BivectorField bad(kW3, {ChartPoly(), ChartPoly(), ChartPoly::monomial(0, 0, 1)});
  EXPECT_FALSE(in_linear_span(basis, bad));
}

TEST(Sections, HomogeneousPiecesAreAtMostThreeDimensional) {
  for (const auto& spec : reference_specs()) {
    for (int r = -3; r <= 8; ++r) {
      for (int s = 0; s <= 2; ++s) {
        for (int t = 0; s + t <= 2; ++t) {
          Multidegree d{r, s, t};
          auto hs = homogeneous_sections(spec, d);
          EXPECT_LE(hs.size(), 3U);
          for (const auto& h : hs) EXPECT_EQ(weight_of(h), d);
        }
      }
    }
  }
}

TEST(Presentation, W1HasFourGeneratorsAndOneRelation) {
  auto gens = reference_generator_fields(kW1);
  auto p = module_presentation(kW1, gens, 4);
  ASSERT_EQ(p.generators.size(), 4U);
  ASSERT_EQ(p.relations.size(), 1U);
  EXPECT_TRUE(p.relations_stable);
  // Hand relation z u2 e1 - z u1 e2 - u2 e3 + u1 e4 = 0.
  std::vector<ChartPoly> hand{ChartPoly::monomial(1, 0, 1), ChartPoly::monomial(1, 1, 0, ExactScalar(-1)),
                              ChartPoly::monomial(0, 0, 1, ExactScalar(-1)), ChartPoly::monomial(0, 1, 0)};
  EXPECT_TRUE(is_relation(gens, hand));
  std::optional<ExactScalar> scale;
  for (size_t i = 0; i < 4; ++i) {
    auto c = proportionality(p.relations[0].coefficients[i], hand[i]);
    ASSERT_TRUE(c.has_value());
    if (scale) EXPECT_EQ(*c, *scale);
    scale = c;
  }
}

TEST(Presentation, W2HasFiveGenerators) {
  auto gens = reference_generator_fields(kW2);
  auto p = module_presentation(kW2, gens, 4);
  ASSERT_EQ(p.generators.size(), 5U);
  for (size_t i = 0; i < 5; ++i) EXPECT_EQ(p.generators[i], gens[i]);
  for (const auto& r : p.relations) EXPECT_TRUE(is_relation(p.generators, r.coefficients));
}

TEST(Presentation, RelationsHoldAndGeneratorsExpressSections) {
  Rng rng(22);
  for (const auto& spec : reference_specs()) {
    auto p = module_presentation(spec, reference_generator_fields(spec), 4);
    for (const auto& r : p.relations) EXPECT_TRUE(is_relation(p.generators, r.coefficients));
    auto basis = section_basis(spec, 2);
    for (int i = 0; i < kIterations / 4; ++i) {
      BivectorField q = random_section(basis, rng, 3);
      auto e = express_in_generators(q, p);
      ASSERT_TRUE(e.ok()) << e.message;
      EXPECT_EQ(combine(p.generators, e.coefficients), q);
      for (const auto& c : e.coefficients) EXPECT_TRUE(is_global_function(spec, c));
    }
  }
}

TEST(Presentation, ExpressRejectsNonGlobal) {
  auto p = module_presentation(kW3, reference_generator_fields(kW3), 4);
  BivectorField bad(kW3, {ChartPoly(), ChartPoly(), ChartPoly::monomial(0, 0, 1)});
  EXPECT_EQ(express_in_generators(bad, p).failure, ExpressFailure::NotGlobal);
}

TEST(Presentation, W3ReferenceGeneratorsAreKeptAndDisplayedRelationsMostlyHold) {
  auto gens = reference_generator_fields(kW3);
  size_t valid = 0;
  for (const auto& r : reference_relations(kW3)) valid += is_relation(gens, relation_coefficients(r, gens));
  EXPECT_EQ(valid, reference_relations(kW3).size() - 1);  // the e12 relation needs the coefficient -3 z u1 u2
  auto p = module_presentation(kW3, gens, 5);
  for (size_t i = 0; i < gens.size(); ++i) EXPECT_EQ(p.generators[i], gens[i]);
}
