#include "cybiv/threefold.hpp"

#include <algorithm>
#include <stdexcept>

namespace cybiv {

std::string ThreefoldSpec::name() const {
  return "W(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
}

std::array<ChartPoly, 3> coordinate_transition(const ThreefoldSpec& spec, Direction) {
  // The gluing is symmetric under exchanging the charts, so both directions have
  // the same formulas in their respective source variables.
  return {ChartPoly::monomial(-1, 0, 0), ChartPoly::monomial(spec.k1, 1, 0),
          ChartPoly::monomial(spec.k2, 0, 1)};
}

ChartPoly express_in_v(const ThreefoldSpec& spec, const ChartPoly& p_u) {
  return substitute(p_u, coordinate_transition(spec, Direction::VtoU));
}

ChartPoly express_in_u(const ThreefoldSpec& spec, const ChartPoly& p_v) {
  return substitute(p_v, coordinate_transition(spec, Direction::UtoV));
}

namespace {

constexpr std::array<std::array<int, 2>, 3> kPairs{{{1, 2}, {2, 0}, {0, 1}}};

}  // namespace

TransitionMatrix lambda2_transition(const ThreefoldSpec& spec, Direction dir) {
  auto images = coordinate_transition(spec, dir);
  std::array<std::array<ChartPoly, 3>, 3> jac;
  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < 3; ++i) jac[a][i] = partial_derivative(images[a], static_cast<Var>(i));
  }
  TransitionMatrix out;
  out.direction = dir;
  for (int alpha = 0; alpha < 3; ++alpha) {
    const auto [a, b] = kPairs[alpha];
    for (int beta = 0; beta < 3; ++beta) {
      const auto [i, j] = kPairs[beta];
      out.entries[alpha][beta] = jac[a][i] * jac[b][j] - jac[a][j] * jac[b][i];
    }
  }
  return out;
}

ChartPoly jacobian_determinant(const ThreefoldSpec& spec, Direction dir) {
  auto images = coordinate_transition(spec, dir);
  std::array<std::array<ChartPoly, 3>, 3> j;
  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < 3; ++i) j[a][i] = partial_derivative(images[a], static_cast<Var>(i));
  }
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

std::vector<ChartMonomial> global_function_monomials(const ThreefoldSpec& spec, int max_fiber_degree) {
  std::vector<ChartMonomial> out;
  for (int s = 0; s <= max_fiber_degree; ++s) {
    for (int t = 0; s + t <= max_fiber_degree; ++t) {
      for (int r = 0; r <= spec.k1 * s + spec.k2 * t; ++r) out.emplace_back(r, s, t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ChartMonomial> first_nonglobal_monomial(const ThreefoldSpec& spec, const ChartPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.ez < 0 || m.ez > spec.k1 * m.eu1 + spec.k2 * m.eu2) return m;
  }
  return std::nullopt;
}

bool is_global_function(const ThreefoldSpec& spec, const ChartPoly& p) {
  return !first_nonglobal_monomial(spec, p).has_value();
}

bool is_chart_polynomial(const ChartPoly& p) {
  auto m = p.min_base_exponent();
  return !m || *m >= 0;
}

}  // namespace cybiv
