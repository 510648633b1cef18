#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cybiv/exact_scalar.hpp"

namespace cybiv {

/// Index of a chart variable: 0 is the base coordinate (z or xi), 1 and 2 are the
/// fiber coordinates (u1, u2 or v1, v2).
enum class Var : int { Base = 0, Fiber1 = 1, Fiber2 = 2 };

/// Monomial z^ez u1^eu1 u2^eu2 in a chart.  The base exponent may be negative
/// (Laurent in the base coordinate); the fiber exponents are non-negative.
struct ChartMonomial {
  int ez = 0;
  int eu1 = 0;
  int eu2 = 0;

  ChartMonomial() = default;
  /// Throws std::invalid_argument if a fiber exponent is negative.
  ChartMonomial(int z, int u1, int u2);

  [[nodiscard]] int exponent(Var v) const;
  [[nodiscard]] int fiber_degree() const { return eu1 + eu2; }
  [[nodiscard]] int total_degree() const { return ez + eu1 + eu2; }

  friend ChartMonomial operator*(const ChartMonomial& a, const ChartMonomial& b) {
    return {a.ez + b.ez, a.eu1 + b.eu1, a.eu2 + b.eu2};
  }
  friend bool operator==(const ChartMonomial&, const ChartMonomial&) = default;
  /// Graded-lex order with z < u1 < u2: total degree first, then the u2, u1, z exponents.
  friend std::strong_ordering operator<=>(const ChartMonomial& a, const ChartMonomial& b);
};

/// Exact Laurent polynomial in the base coordinate, polynomial in the fiber
/// coordinates.  Terms are kept in a map keyed by monomial with no zero coefficients.
class ChartPoly {
 public:
  using Terms = std::map<ChartMonomial, ExactScalar>;

  ChartPoly() = default;
  ChartPoly(const ExactScalar& c);  // NOLINT(google-explicit-constructor)
  ChartPoly(long c) : ChartPoly(ExactScalar(c)) {}  // NOLINT(google-explicit-constructor)
  ChartPoly(const ChartMonomial& m, const ExactScalar& c = ExactScalar(1));

  static ChartPoly variable(Var v);
  static ChartPoly monomial(int ez, int eu1, int eu2, const ExactScalar& c = ExactScalar(1)) {
    return ChartPoly(ChartMonomial(ez, eu1, eu2), c);
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] size_t size() const { return terms_.size(); }
  [[nodiscard]] ExactScalar coefficient(const ChartMonomial& m) const;
  /// True if the polynomial is a nonzero constant.
  [[nodiscard]] bool is_constant() const;
  /// Single-term polynomial?
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] std::optional<int> min_base_exponent() const;
  [[nodiscard]] int max_fiber_degree() const;
  [[nodiscard]] bool uses(Var v) const;
  [[nodiscard]] const std::pair<const ChartMonomial, ExactScalar>& leading_term() const;

  void add_term(const ChartMonomial& m, const ExactScalar& c);

  ChartPoly& operator+=(const ChartPoly& o);
  ChartPoly& operator-=(const ChartPoly& o);
  ChartPoly& operator*=(const ChartPoly& o);
  ChartPoly& operator*=(const ExactScalar& c);
  friend ChartPoly operator+(ChartPoly a, const ChartPoly& b) { return a += b; }
  friend ChartPoly operator-(ChartPoly a, const ChartPoly& b) { return a -= b; }
  friend ChartPoly operator*(const ChartPoly& a, const ChartPoly& b);
  friend ChartPoly operator*(ChartPoly a, const ExactScalar& c) { return a *= c; }
  friend ChartPoly operator*(const ExactScalar& c, ChartPoly a) { return a *= c; }
  ChartPoly operator-() const;
  friend bool operator==(const ChartPoly&, const ChartPoly&) = default;

  /// Multiplies every term by a monomial.
  [[nodiscard]] ChartPoly shifted(const ChartMonomial& m) const;
  [[nodiscard]] ChartPoly pow(unsigned e) const;

 private:
  Terms terms_;
};

/// Partial derivative with respect to a chart variable.
ChartPoly partial_derivative(const ChartPoly& p, Var v);

/// Substitutes images for (z, u1, u2).  A negative power of z requires the image
/// of z to be an invertible monomial (nonzero coefficient, no fiber variables);
/// otherwise std::invalid_argument is thrown.
ChartPoly substitute(const ChartPoly& p, const std::array<ChartPoly, 3>& images);

/// Applies the exponent map (r, s, t) -> (a*r + b*s + c*t, s, t) to each monomial,
/// i.e. substitution z -> z^a, u1 -> z^b u1, u2 -> z^c u2 without expansion.
ChartPoly monomial_transform(const ChartPoly& p, int a, int b, int c);

/// Sets one variable to a rational value.  Setting the base variable requires a
/// nonzero value if negative powers are present.
ChartPoly evaluate_variable(const ChartPoly& p, Var v, const ExactScalar& value);

/// Exact scalar c with a == c * b, if one exists (b must be nonzero).
std::optional<ExactScalar> proportionality(const ChartPoly& a, const ChartPoly& b);

}  // namespace cybiv
