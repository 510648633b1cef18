#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cybiv/bivector.hpp"
#include "cybiv/exact_linalg.hpp"

namespace cybiv {

/// Highest z-exponent considered for an unknown coefficient monomial with fiber
/// exponents (s, t).  No slot can carry a higher power in a global section
/// (the largest admissible one is k1 s + k2 t + max(k1, k2)); the margin only
/// adds unknowns that the holomorphy constraints then eliminate.
int z_exponent_bound(const ThreefoldSpec& spec, int s, int t, int margin = 2);

/// Basis of global bivector fields whose U-coefficients have fiber degree <= n,
/// in reduced row echelon form with respect to the columns (slot, monomial).
/// Every basis vector is homogeneous for the torus weight.
std::vector<BivectorField> section_basis(const ThreefoldSpec& spec, int n, int z_margin = 2);

/// Basis of the global sections of a single torus weight (at most 3-dimensional).
std::vector<BivectorField> homogeneous_sections(const ThreefoldSpec& spec, const Multidegree& d);

/// Coordinates of a homogeneous bivector of weight d in the (slot 0, 1, 2) monomials of d.
DenseVector weight_coordinates(const BivectorField& b, const Multidegree& d);

/// Weight of a homogeneous nonzero bivector; throws if b is not homogeneous.
Multidegree weight_of(const BivectorField& b);

/// Relation sum_h c_h e_h = 0 with global-function coefficients.
struct Relation {
  std::vector<ChartPoly> coefficients;
  Multidegree weight;
};

/// Minimal multigraded presentation of the module of global bivector fields,
/// truncated at weights of fiber degree s + t <= degree_bound.
struct ModulePresentation {
  ThreefoldSpec spec;
  std::vector<BivectorField> generators;
  std::vector<Multidegree> generator_weights;
  std::vector<Relation> relations;
  int degree_bound = 0;
  /// True if no new minimal relation appears at fiber degree degree_bound + 1.
  bool relations_stable = false;
};

/// Raised when generators still appear one fiber degree above the bound.
class DegreeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default presentation bound for a section neighborhood of fiber degree n.
inline int default_degree_bound(int n) { return n + 2; }

/// Computes minimal generators, preferring candidates (in order, keeping their
/// labels) over internally chosen basis vectors, then minimal relations.
/// Generators not taken from candidates are labelled g1, g2, ...
/// Throws DegreeBoundError if the generating set is not certified at
/// degree_bound + 1, and std::invalid_argument if a candidate is not global.
ModulePresentation module_presentation(const ThreefoldSpec& spec, const std::vector<BivectorField>& candidates,
                                       int degree_bound);

enum class ExpressFailure { None, NotGlobal, DegreeBoundExceeded, NotInSpan };

struct ExpressResult {
  std::vector<ChartPoly> coefficients;
  ExpressFailure failure = ExpressFailure::None;
  std::string message;
  [[nodiscard]] bool ok() const { return failure == ExpressFailure::None; }
};

/// Writes q as sum_h p_h e_h with global p_h (free choices set to zero).
ExpressResult express_in_generators(const BivectorField& q, const ModulePresentation& pres);

/// Verifies that coefficients are global functions and that sum_h c_h e_h = 0.
bool is_relation(const std::vector<BivectorField>& generators, const std::vector<ChartPoly>& coefficients);

/// Combination sum_h c_h e_h.
BivectorField combine(const std::vector<BivectorField>& generators, const std::vector<ChartPoly>& coefficients);

/// True if q lies in the linear span of the given sections.
bool in_linear_span(const std::vector<BivectorField>& basis, const BivectorField& q);

}  // namespace cybiv
