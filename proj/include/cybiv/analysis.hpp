#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cybiv/bivector.hpp"
#include "cybiv/poly_text.hpp"

namespace cybiv {

/// Irreducible component of the vanishing locus inside one chart, cut out by
/// the vanishing of a set of chart variables (indices 0..2).
struct ChartComponent {
  Chart chart = Chart::U;
  std::vector<int> variables;
  [[nodiscard]] std::string to_string() const;  ///< e.g. "{xi=v1=0}"
  friend bool operator==(const ChartComponent&, const ChartComponent&) = default;
};

/// Component of the locus in the threefold: either glued from matching pieces
/// in both charts, or contained in a single chart (over z = 0 or xi = 0).
struct LocusComponent {
  std::vector<ChartComponent> pieces;
  /// "Z_k" (surface isomorphic to the total space of O(-k)), "P1xC" (the case
  /// k = 0), "P1" (zero section), "C2", "C", "point", or "W" (everything).
  std::string type;
};

struct VanishingLocus {
  ThreefoldSpec spec;
  std::vector<ChartPoly> u_ideal;  ///< nonzero U-coefficients
  std::vector<ChartPoly> v_ideal;  ///< nonzero V-coefficients
  /// False if some coefficient has a non-monomial factor; the components are then
  /// not computed and the ideal generators are the only output.
  bool decomposed = true;
  std::vector<ChartComponent> chart_components;  ///< U pieces then V pieces
  std::vector<LocusComponent> components;
  [[nodiscard]] bool is_empty() const { return decomposed && components.empty(); }
  /// Types joined by " u ", or "empty" / "undecomposed".
  [[nodiscard]] std::string type_summary() const;
};

/// Degeneracy locus {q = 0} of a bivector field, per chart and glued.
VanishingLocus degeneracy_locus(const BivectorField& q);

/// Local Casimir functions of an integrable bivector field.
struct CasimirSpace {
  int degree_bound = 4;
  /// Global functions f of fiber degree <= bound with [f, q] = 0.
  std::vector<ChartPoly> global_basis;
  /// U-chart polynomials with z-degree and fiber degree <= bound and [f, q] = 0.
  std::vector<ChartPoly> local_basis;
  /// Set when the local Casimirs are exactly the polynomials in these U variables.
  std::optional<std::vector<int>> independent_variables;
  /// "f(u2)", "f(z)", "constants", or a list of local generators.
  [[nodiscard]] std::string description() const;
};

/// Throws std::invalid_argument if q is not integrable.
CasimirSpace casimirs(const BivectorField& q, int degree_bound = 4);

struct CasimirClass {
  std::string description;
  std::vector<std::string> labels;
};

/// Groups structures by their local Casimir description, in order of first appearance.
std::vector<CasimirClass> classify_by_casimir(const std::vector<BivectorField>& structures, int degree_bound = 4);

struct LocusVerdict {
  bool distinguished = false;
  std::string reason;
};

/// Compares the glued loci (component count and types): different answers show
/// that no automorphism of the threefold maps one structure to the other.
LocusVerdict distinguish_by_locus(const BivectorField& a, const BivectorField& b);

struct FoliationReport {
  VanishingLocus locus;
  CasimirSpace casimir;
  std::string leaves;
};

FoliationReport foliation_report(const BivectorField& q, int degree_bound = 4);

}  // namespace cybiv
