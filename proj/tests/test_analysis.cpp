#include <gtest/gtest.h>

#include <set>

#include "cybiv/analysis.hpp"
#include "cybiv/exact_linalg.hpp"
#include "cybiv/reference_catalog.hpp"
#include "cybiv/sampling.hpp"
#include "cybiv/schouten.hpp"
#include "cybiv/sections.hpp"

using namespace cybiv;

namespace {

constexpr int kIterations = 100;

const ThreefoldSpec kW1{1, 1};
const ThreefoldSpec kW2{2, 0};
const ThreefoldSpec kW3{3, -1};

BivectorField gen(const ThreefoldSpec& spec, const std::string& label) {
  for (const auto& g : reference_generator_fields(spec)) {
    if (g.label == label) return g;
  }
  throw std::invalid_argument(label);
}

std::vector<std::string> pieces(const VanishingLocus& l) {
  std::vector<std::string> out;
  for (const auto& c : l.chart_components) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST(Degeneracy, W2TypesByHand) {
  EXPECT_EQ(degeneracy_locus(gen(kW2, "e1")).type_summary(), "C2");
  EXPECT_EQ(degeneracy_locus(gen(kW2, "e2")).type_summary(), "P1xC");
  EXPECT_EQ(degeneracy_locus(gen(kW2, "e3")).type_summary(), "C2 u C");
  auto e4 = degeneracy_locus(gen(kW2, "e4"));
  EXPECT_TRUE(e4.is_empty());
  EXPECT_EQ(e4.type_summary(), "empty");
}

TEST(Degeneracy, W1E2IsTheLineAtInfinityOfTheFiber) {
  auto l = degeneracy_locus(gen(kW1, "e2"));
  EXPECT_EQ(pieces(l), (std::vector<std::string>{"{xi=v2=0}"}));
}

TEST(Degeneracy, W3PieceCounts) {
  EXPECT_EQ(degeneracy_locus(gen(kW3, "e1")).chart_components.size(), 3U);
  EXPECT_EQ(degeneracy_locus(gen(kW3, "e2")).chart_components.size(), 4U);
  auto e11 = degeneracy_locus(gen(kW3, "e11"));
  EXPECT_EQ(pieces(e11), (std::vector<std::string>{"{z=0}", "{u2=0}", "{v2=0}", "{xi=v1=0}"}));
}

TEST(Degeneracy, PiecesVanishOnTheCoefficients) {
  // Every coefficient vanishes on every piece: substituting 0 for the piece's variables kills it.
  for (const auto& spec : reference_specs()) {
    for (const auto& g : reference_generator_fields(spec)) {
      auto l = degeneracy_locus(g);
      ASSERT_TRUE(l.decomposed);
      for (const auto& piece : l.chart_components) {
        auto coeffs = piece.chart == Chart::U ? g.q : g.v_coefficients();
        for (auto c : coeffs) {
          for (int v : piece.variables) c = evaluate_variable(c, static_cast<Var>(v), ExactScalar(0));
          EXPECT_TRUE(c.is_zero()) << g.label << " " << piece.to_string();
        }
      }
    }
  }
}

TEST(Degeneracy, DistinguishingIsSymmetric) {
  auto gens = reference_generator_fields(kW3);
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      EXPECT_EQ(distinguish_by_locus(gens[i], gens[j]).distinguished,
                distinguish_by_locus(gens[j], gens[i]).distinguished);
    }
    EXPECT_FALSE(distinguish_by_locus(gens[i], gens[i]).distinguished);
  }
}

TEST(Casimir, W2Lemmas) {
  // e1 = d_u2^d_z and e3 = z d_u2^d_z leave u1 free; e2 = u1 d_u1^d_u2 leaves z; e4 = d_z^d_u1 leaves u2.
  EXPECT_EQ(casimirs(gen(kW2, "e1"), 4).description(), "f(u1)");
  EXPECT_EQ(casimirs(gen(kW2, "e2"), 4).description(), "f(z)");
  EXPECT_EQ(casimirs(gen(kW2, "e3"), 4).description(), "f(u1)");
  EXPECT_EQ(casimirs(gen(kW2, "e4"), 4).description(), "f(u2)");
}

TEST(Casimir, ThreeClassesOnW3StableInTheBound) {
  std::vector<BivectorField> ten;
  for (const char* l : {"e1", "e2", "e3", "e4", "e5", "e7", "e8", "e10", "e11", "e13"}) ten.push_back(gen(kW3, l));
  for (int bound : {3, 4}) {
    auto classes = classify_by_casimir(ten, bound);
    ASSERT_EQ(classes.size(), 3U);
    std::map<std::string, std::set<std::string>> got;
    for (const auto& c : classes) got[c.description] = {c.labels.begin(), c.labels.end()};
    EXPECT_EQ(got["f(z)"], (std::set<std::string>{"e1", "e2"}));
    EXPECT_EQ(got["f(u1)"], (std::set<std::string>{"e3", "e4", "e5", "e10", "e11"}));
    EXPECT_EQ(got["f(u2)"], (std::set<std::string>{"e7", "e8", "e13"}));
  }
}

TEST(Casimir, KernelMembershipMatchesTheBracket) {
  Rng rng(51);
  std::vector<ChartMonomial> box;
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; s + t <= 3; ++t) box.emplace_back(r, s, t);
  for (const auto& spec : reference_specs()) {
    for (const auto& g : reference_generator_fields(spec)) {
      auto cas = casimirs(g, 3);
      for (int i = 0; i < kIterations / 10; ++i) {
        ChartPoly f = random_combination(box, rng, 3);
        // A random multiple of the basis plus a random perturbation.
        ChartPoly in;
        for (const auto& b : cas.local_basis) in += random_small_scalar(rng) * b;
        EXPECT_TRUE(function_bracket(in, g).is_zero());
        bool kills = function_bracket(f, g).is_zero();
        std::vector<BivectorField> span;
        BivectorField as_field(spec, {f, ChartPoly(), ChartPoly()});
        for (const auto& b : cas.local_basis) span.emplace_back(spec, CoefficientTriple{b, ChartPoly(), ChartPoly()});
        bool member = in_linear_span(span, as_field);
        EXPECT_EQ(kills, member) << g.label << " " << format_poly(f);
      }
    }
  }
}

TEST(Foliation, LeavesFollowTheCasimirVariable) {
  auto rep = foliation_report(gen(kW1, "e2"));
  EXPECT_NE(rep.leaves.find("u2 = const"), std::string::npos);
  auto e4 = foliation_report(gen(kW2, "e4"));
  EXPECT_NE(e4.leaves.find("0-dimensional leaves: none"), std::string::npos);
  EXPECT_NE(e4.leaves.find("Z_2"), std::string::npos);
  auto e13 = foliation_report(gen(kW3, "e13"));
  EXPECT_EQ(e13.casimir.description(), "f(u2)");
  EXPECT_NE(e13.leaves.find("u2 = const"), std::string::npos);
}
