#pragma once

#include <array>
#include <vector>

#include "cybiv/bivector.hpp"
#include "cybiv/exact_linalg.hpp"

namespace cybiv {

/// Coefficient f of f * d0^d1^d2 in the U chart.
struct TrivectorDensity {
  ThreefoldSpec spec;
  ChartPoly coeff;

  /// Coefficient with respect to dxi^dv1^dv2, in V variables.
  [[nodiscard]] ChartPoly v_coefficient() const;
};

/// Vector field X^0 d0 + X^1 d1 + X^2 d2 in the U chart.
struct VectorField {
  ThreefoldSpec spec;
  std::array<ChartPoly, 3> x;
  [[nodiscard]] bool is_zero() const { return x[0].is_zero() && x[1].is_zero() && x[2].is_zero(); }
};

/// Coordinate expression of the self-bracket of a coefficient triple:
/// q1 q2_0 - q2 q1_0 + q2 q0_1 - q0 q2_1 + q0 q1_2 - q1 q0_2, where _i is d/dx^i.
/// The Schouten-Nijenhuis bracket [q,q] equals twice this density.
ChartPoly self_bracket_density(const CoefficientTriple& q);

TrivectorDensity self_bracket(const BivectorField& q);

/// Schouten-Nijenhuis bracket of two bivector fields on the same threefold,
/// assembled term by term from the bracket of basis bivectors.
TrivectorDensity sn_bracket(const BivectorField& q, const BivectorField& p);

/// True iff the self-bracket vanishes identically.
bool is_integrable(const BivectorField& q);

/// Hamiltonian-type bracket [f, q] = sum q^{ij} f_i d_j with q = sum q^{ij} d_i^d_j.
VectorField function_bracket(const ChartPoly& f, const BivectorField& q);

/// The four module generators of the global bivector fields on W(1,1):
/// (0,1,0), (0,0,1), (u1,z,0), (u2,0,z).
const std::array<BivectorField, 4>& w11_generators();

using CoefficientQuadruple = std::array<ChartPoly, 4>;

/// sum_h p_h e_h over the generators of W(1,1).
BivectorField w11_combination(const CoefficientQuadruple& p);

/// First-order operator sum_k c_k d_k.
struct FirstOrderOperator {
  std::array<ChartPoly, 3> coeff;
  [[nodiscard]] ChartPoly apply(const ChartPoly& f) const;
};

/// Antisymmetric 4x4 operator matrix Q with p^T Q p equal to the self-bracket
/// density of sum_h p_h e_h on W(1,1).
const std::array<std::array<FirstOrderOperator, 4>, 4>& w11_operator_matrix();

/// B(p) = p^T Q p.  Throws std::invalid_argument if some p_h is not a global
/// function on W(1,1).
ChartPoly b_operator(const CoefficientQuadruple& p);

/// Linearization of B at a solution p: dp -> dp^T Q p + p^T Q dp.
class LinearizedB {
 public:
  /// Throws std::invalid_argument if p is not global or B(p) != 0.
  explicit LinearizedB(CoefficientQuadruple p);

  [[nodiscard]] ChartPoly apply(const CoefficientQuadruple& dp) const;

  /// Exact matrix of the map restricted to global coefficients of fiber degree
  /// <= max_fiber_degree.  Columns are (h, monomial) pairs in that order.
  struct Truncation {
    std::vector<std::pair<int, ChartMonomial>> columns;
    std::vector<ChartMonomial> rows;
    std::vector<SparseVector> matrix;  ///< one sparse row per output monomial
  };
  [[nodiscard]] Truncation truncate(int max_fiber_degree) const;

  /// Kernel of the truncated map, as coefficient quadruples.
  [[nodiscard]] std::vector<CoefficientQuadruple> kernel(int max_fiber_degree) const;

 private:
  CoefficientQuadruple p_;
};

}  // namespace cybiv
