#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "cybiv/chart_poly.hpp"
#include "cybiv/threefold.hpp"

namespace cybiv {

using CoefficientTriple = std::array<ChartPoly, 3>;

/// Torus weight (r, s, t) of a homogeneous bivector: the slot-0 coefficient is a
/// multiple of z^r u1^s u2^t, slot 1 of z^(r+1) u1^(s-1) u2^t and slot 2 of
/// z^(r+1) u1^s u2^(t-1).
struct Multidegree {
  int r = 0;
  int s = 0;
  int t = 0;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
  [[nodiscard]] int fiber_degree() const { return s + t; }
};

/// Multidegree of the bivector m * (basis bivector of the slot).
Multidegree slot_multidegree(int slot, const ChartMonomial& m);
/// Monomial the given slot carries in multidegree d, if admissible (fiber exponents >= 0).
std::optional<ChartMonomial> slot_monomial(int slot, const Multidegree& d);

/// Bivector field on a threefold, stored by its U-chart coefficients in the
/// basis (du1^du2, du2^dz, dz^du1) = (d1^d2, d2^d0, d0^d1).
struct BivectorField {
  ThreefoldSpec spec;
  CoefficientTriple q;
  std::string label;

  BivectorField() = default;
  BivectorField(const ThreefoldSpec& s, CoefficientTriple coeffs, std::string name = {})
      : spec(s), q(std::move(coeffs)), label(std::move(name)) {}

  /// Builds a field from its V-chart coefficients.
  static BivectorField from_v_coefficients(const ThreefoldSpec& s, const CoefficientTriple& qv,
                                           std::string name = {});

  /// V-chart coefficients in V variables.
  [[nodiscard]] CoefficientTriple v_coefficients() const;
  /// True if the U and V coefficients are polynomial (no negative base powers).
  [[nodiscard]] bool is_global() const;
  /// Explanation naming the first obstruction to being global, if any.
  [[nodiscard]] std::optional<std::string> nonglobal_reason() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] int max_fiber_degree() const;

  /// Components grouped by torus weight.
  [[nodiscard]] std::map<Multidegree, BivectorField> homogeneous_components() const;

  BivectorField& operator+=(const BivectorField& o);
  BivectorField& operator-=(const BivectorField& o);
  friend BivectorField operator+(BivectorField a, const BivectorField& b) { return a += b; }
  friend BivectorField operator-(BivectorField a, const BivectorField& b) { return a -= b; }
  friend BivectorField operator*(const ChartPoly& f, const BivectorField& b);
  friend BivectorField operator*(const ExactScalar& c, const BivectorField& b);
  /// Equality of the geometric object (labels are ignored).
  friend bool operator==(const BivectorField& a, const BivectorField& b) {
    return a.spec == b.spec && a.q == b.q;
  }
};

/// Applies a transition matrix to a coefficient triple (no change of variables).
CoefficientTriple apply_matrix(const TransitionMatrix& m, const CoefficientTriple& q);

/// Exact c with a == c * b, if any (b nonzero).
std::optional<ExactScalar> proportionality(const BivectorField& a, const BivectorField& b);

std::string format_triple(const CoefficientTriple& q, Chart chart = Chart::U);

}  // namespace cybiv
