#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cybiv/chart_poly.hpp"
#include "cybiv/poly_text.hpp"

namespace cybiv {

/// Total space of O(-k1) + O(-k2) over P^1, glued from charts U(z,u1,u2) and
/// V(xi,v1,v2) by xi = 1/z, v1 = z^k1 u1, v2 = z^k2 u2.
struct ThreefoldSpec {
  int k1 = 1;
  int k2 = 1;

  [[nodiscard]] bool is_calabi_yau() const { return k1 + k2 == 2; }
  [[nodiscard]] std::string name() const;
  /// The Calabi-Yau threefold with splitting (k, 2 - k).
  static ThreefoldSpec calabi_yau(int k) { return {k, 2 - k}; }

  friend bool operator==(const ThreefoldSpec&, const ThreefoldSpec&) = default;
};

enum class Direction { UtoV, VtoU };

/// Substitution images: for UtoV, (xi, v1, v2) expressed in U variables; for
/// VtoU, (z, u1, u2) expressed in V variables.
std::array<ChartPoly, 3> coordinate_transition(const ThreefoldSpec& spec, Direction dir);

/// Rewrites a U-chart function in V coordinates, and conversely.
ChartPoly express_in_v(const ThreefoldSpec& spec, const ChartPoly& p_u);
ChartPoly express_in_u(const ThreefoldSpec& spec, const ChartPoly& p_v);

/// 3x3 matrix of chart polynomials acting on coefficient triples in the basis
/// (d1^d2, d2^d0, d0^d1).  UtoV entries are in U variables: V-coefficients are
/// M * (U-coefficients), then rewritten in V variables.  VtoU entries are in V
/// variables.
struct TransitionMatrix {
  Direction direction = Direction::UtoV;
  std::array<std::array<ChartPoly, 3>, 3> entries;
};

/// Second exterior power of the Jacobian of the chart change, computed from the
/// 2x2 minors of the Jacobian of the coordinate transition.
TransitionMatrix lambda2_transition(const ThreefoldSpec& spec, Direction dir = Direction::UtoV);

/// Jacobian determinant of the coordinate transition in the given direction.
ChartPoly jacobian_determinant(const ThreefoldSpec& spec, Direction dir = Direction::UtoV);

/// Monomials z^r u1^s u2^t with 0 <= r <= k1 s + k2 t and s + t <= max_fiber_degree,
/// in increasing canonical order.
std::vector<ChartMonomial> global_function_monomials(const ThreefoldSpec& spec, int max_fiber_degree);

/// First monomial of p violating 0 <= r <= k1 s + k2 t, if any.
std::optional<ChartMonomial> first_nonglobal_monomial(const ThreefoldSpec& spec, const ChartPoly& p);
bool is_global_function(const ThreefoldSpec& spec, const ChartPoly& p);

/// True if p has no negative powers of the base variable.
bool is_chart_polynomial(const ChartPoly& p);

}  // namespace cybiv
