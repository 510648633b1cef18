#include <gtest/gtest.h>

#include "cybiv/chart_poly.hpp"
#include "cybiv/exact_linalg.hpp"
#include "cybiv/poly_text.hpp"
#include "cybiv/sampling.hpp"

using namespace cybiv;

namespace {

constexpr int kIterations = 200;

ChartPoly z() { return ChartPoly::variable(Var::Base); }
ChartPoly u1() { return ChartPoly::variable(Var::Fiber1); }
ChartPoly u2() { return ChartPoly::variable(Var::Fiber2); }

}  // namespace

TEST(ExactScalar, FieldLaws) {
  Rng rng(1);
  for (int i = 0; i < kIterations; ++i) {
    ExactScalar a = random_small_scalar(rng, 9) / ExactScalar(static_cast<long>(rng() % 7 + 1));
    ExactScalar b = random_small_scalar(rng, 9) / ExactScalar(static_cast<long>(rng() % 5 + 1));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - b) + b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ(ExactScalar::parse(a.to_string()), a);
  }
  EXPECT_EQ(ExactScalar(6, 4), ExactScalar(3, 2));
  EXPECT_EQ(ExactScalar(1, -2).to_string(), "-1/2");
  EXPECT_THROW(ExactScalar(1, 0), std::domain_error);
}

TEST(ChartPoly, RingLaws) {
  Rng rng(2);
  for (int i = 0; i < kIterations; ++i) {
    ChartPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * ChartPoly(1), a);
    EXPECT_EQ(-(-a), a);
  }
}

TEST(ChartPoly, NoZeroTermsStored) {
  ChartPoly p = z() * u1() - u1() * z();
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0U);
  EXPECT_THROW(ChartMonomial(0, -1, 0), std::invalid_argument);
}

TEST(ChartPoly, DerivationLaws) {
  Rng rng(3);
  for (int i = 0; i < kIterations; ++i) {
    ChartPoly a = random_laurent(rng), b = random_laurent(rng);
    ExactScalar c = random_small_scalar(rng);
    for (Var v : {Var::Base, Var::Fiber1, Var::Fiber2}) {
      EXPECT_EQ(partial_derivative(a * b, v), partial_derivative(a, v) * b + a * partial_derivative(b, v));
      EXPECT_EQ(partial_derivative(a + c * b, v), partial_derivative(a, v) + c * partial_derivative(b, v));
    }
    // mixed partials commute
    EXPECT_EQ(partial_derivative(partial_derivative(a, Var::Base), Var::Fiber1),
              partial_derivative(partial_derivative(a, Var::Fiber1), Var::Base));
  }
  EXPECT_EQ(partial_derivative(ChartPoly::monomial(-2, 1, 0), Var::Base), ChartPoly::monomial(-3, 1, 0, ExactScalar(-2)));
}

TEST(ChartPoly, SubstitutionIsRingHomomorphism) {
  Rng rng(4);
  // z -> 3z (invertible), u1 -> u1 + z*u2, u2 -> u2^2
  std::array<ChartPoly, 3> images{ExactScalar(3) * z(), u1() + z() * u2(), u2() * u2()};
  for (int i = 0; i < kIterations; ++i) {
    ChartPoly a = random_laurent(rng), b = random_laurent(rng);
    EXPECT_EQ(substitute(a * b, images), substitute(a, images) * substitute(b, images));
    EXPECT_EQ(substitute(a + b, images), substitute(a, images) + substitute(b, images));
  }
  std::array<ChartPoly, 3> bad{u1(), u1(), u2()};
  EXPECT_THROW(substitute(ChartPoly::monomial(-1, 0, 0), bad), std::invalid_argument);
}

TEST(ChartPoly, MonomialTransformMatchesSubstitution) {
  Rng rng(5);
  for (int i = 0; i < kIterations; ++i) {
    ChartPoly a = random_laurent(rng);
    int k1 = static_cast<int>(rng() % 7) - 3, k2 = static_cast<int>(rng() % 7) - 3;
    std::array<ChartPoly, 3> images{ChartPoly::monomial(-1, 0, 0), ChartPoly::monomial(k1, 1, 0),
                                    ChartPoly::monomial(k2, 0, 1)};
    EXPECT_EQ(monomial_transform(a, -1, k1, k2), substitute(a, images));
    // the exponent map is an involution when a = -1
    EXPECT_EQ(monomial_transform(monomial_transform(a, -1, k1, k2), -1, k1, k2), a);
  }
}

TEST(ChartPoly, Proportionality) {
  Rng rng(6);
  for (int i = 0; i < kIterations; ++i) {
    ChartPoly a = random_laurent(rng);
    if (a.is_zero()) continue;
    ExactScalar c = random_small_scalar(rng, 5);
    if (c.is_zero()) c = ExactScalar(7, 3);
    auto got = proportionality(c * a, a);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, c);
    EXPECT_FALSE(proportionality(a + ChartPoly::monomial(9, 9, 9), a).has_value());
  }
}

TEST(PolyText, FormatParseRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < kIterations; ++i) {
    ChartPoly a = random_laurent(rng);
    if (i % 3 == 0) a *= ExactScalar(-5, 7);
    for (Chart c : {Chart::U, Chart::V}) {
      std::string text = format_poly(a, c);
      EXPECT_EQ(parse_poly(text, c), a) << text;
      EXPECT_EQ(format_poly(parse_poly(text, c), c), text);
    }
  }
}

TEST(PolyText, Grammar) {
  EXPECT_EQ(parse_poly("3/2*z^2*u1 - z^-1 + 4", Chart::U),
            ChartPoly::monomial(2, 1, 0, ExactScalar(3, 2)) - ChartPoly::monomial(-1, 0, 0) + ChartPoly(4));
  EXPECT_EQ(parse_poly("xi*v1", Chart::V), ChartPoly::monomial(1, 1, 0));
  EXPECT_EQ(parse_poly("-u2*u2", Chart::U), ChartPoly::monomial(0, 0, 2, ExactScalar(-1)));
  EXPECT_EQ(format_poly(ChartPoly()), "0");
  EXPECT_EQ(format_poly(ChartPoly::monomial(1, 1, 0, ExactScalar(-1))), "-z*u1");
}

TEST(PolyText, ErrorsCarryPositions) {
  try {
    parse_poly("z + u3", Chart::U);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_THROW(parse_poly("xi", Chart::U), ParseError);
  EXPECT_THROW(parse_poly("", Chart::U), ParseError);
  EXPECT_THROW(parse_poly("u1^-1", Chart::U), ParseError);
  EXPECT_THROW(parse_poly("z**u1", Chart::U), ParseError);
}

TEST(ExactLinalg, KernelVectorsAreAnnihilated) {
  Rng rng(8);
  for (int i = 0; i < kIterations; ++i) {
    size_t rows = rng() % 5 + 1, cols = rng() % 6 + 1;
    DenseMatrix m(rows, DenseVector(cols));
    for (auto& r : m)
      for (auto& x : r) x = random_small_scalar(rng, 2);
    auto ker = kernel_basis(m, cols);
    EXPECT_EQ(ker.size() + rank(m, cols), cols);
    for (const auto& v : ker) {
      for (const auto& r : m) {
        ExactScalar s;
        for (size_t j = 0; j < cols; ++j) s += r[j] * v[j];
        EXPECT_TRUE(s.is_zero());
      }
    }
    // sparse elimination agrees with the dense one
    std::vector<SparseVector> sparse;
    for (const auto& r : m) {
      SparseVector sv;
      for (size_t j = 0; j < cols; ++j)
        if (!r[j].is_zero()) sv[j] = r[j];
      sparse.push_back(sv);
    }
    auto sker = sparse_kernel_basis(sparse, cols);
    ASSERT_EQ(sker.size(), ker.size());
    for (size_t k = 0; k < ker.size(); ++k) {
      for (size_t j = 0; j < cols; ++j) {
        auto it = sker[k].find(j);
        EXPECT_EQ(it == sker[k].end() ? ExactScalar(0) : it->second, ker[k][j]);
      }
    }
  }
}

TEST(ExactLinalg, SolveAndSpan) {
  Rng rng(9);
  for (int i = 0; i < kIterations; ++i) {
    size_t rows = rng() % 4 + 1, cols = rng() % 4 + 1;
    DenseMatrix m(rows, DenseVector(cols));
    DenseVector x(cols);
    for (auto& r : m)
      for (auto& e : r) e = random_small_scalar(rng, 3);
    for (auto& e : x) e = random_small_scalar(rng, 3);
    DenseVector b(rows);
    for (size_t r = 0; r < rows; ++r)
      for (size_t j = 0; j < cols; ++j) b[r] += m[r][j] * x[j];
    auto sol = solve_linear(m, b, cols);
    ASSERT_TRUE(sol.has_value());
    for (size_t r = 0; r < rows; ++r) {
      ExactScalar s;
      for (size_t j = 0; j < cols; ++j) s += m[r][j] * (*sol)[j];
      EXPECT_EQ(s, b[r]);
    }
    SpanTracker span(cols);
    for (const auto& r : m) span.add(r);
    EXPECT_EQ(span.dimension(), rank(m, cols));
    for (const auto& r : m) EXPECT_TRUE(span.contains(r));
  }
  DenseMatrix m{{ExactScalar(1), ExactScalar(1)}, {ExactScalar(2), ExactScalar(2)}};
  EXPECT_FALSE(solve_linear(m, {ExactScalar(1), ExactScalar(3)}, 2).has_value());
}
