#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cybiv/symmetries.hpp"

namespace cybiv {

/// Reference catalog: expected data for the three
/// Calabi-Yau threefolds W(1,1), W(2,0) and W(3,-1).  Everything is stored as
/// text in the polynomial grammar so that it can be compared with computed
/// output without going through the code under test.

/// The three threefolds the catalog covers, in order.
std::vector<ThreefoldSpec> reference_specs();
/// "W1", "W2", "W3" for the catalogued specs; throws std::out_of_range otherwise.
std::string reference_name(const ThreefoldSpec& spec);

struct ReferenceTriple {
  std::string label;
  Chart chart = Chart::U;
  std::array<std::string, 3> q;
};

/// One term "coefficient * generator" of a relation.
struct ReferenceRelation {
  std::string text;  ///< as catalogued
  std::vector<std::pair<std::string, std::string>> terms;
};

struct ReferenceLocus {
  std::string label;
  std::vector<std::string> pieces;  ///< chart components, e.g. "{xi=v2=0}"
};

struct ReferenceWitness {
  std::string generator;
  EmbeddingSlot slot = EmbeddingSlot::J1;
  int structure = 0;         ///< index into surface_catalog (J1/J2)
  int multiplier_power = 0;  ///< power of the surface fiber coordinate u
  std::string plane_coeff;   ///< J0 only, in variables u, v
};

/// Module generators e1, e2, ... as listed (U chart).
std::vector<ReferenceTriple> reference_generators(const ThreefoldSpec& spec);
/// Catalog terms claimed to span the sections of the section neighborhood.
std::vector<ReferenceTriple> reference_section_terms(const ThreefoldSpec& spec);
/// The neighborhood those terms belong to and the claimed number of terms.
int reference_neighborhood(const ThreefoldSpec& spec);
int reference_claimed_term_count(const ThreefoldSpec& spec);
/// Catalog relations among the generators.
std::vector<ReferenceRelation> reference_relations(const ThreefoldSpec& spec);
/// Auxiliary relations and equations (for W3 these are the
/// equations before multiplication by u1, with non-global coefficients).
std::vector<ReferenceRelation> reference_auxiliary_relations(const ThreefoldSpec& spec);
/// Claimed number of minimal relations.
int reference_claimed_relation_count(const ThreefoldSpec& spec);
/// Catalog Lambda^2 transition matrix (U to V, entries in U variables).
std::array<std::array<std::string, 3>, 3> reference_lambda2_matrix(const ThreefoldSpec& spec);
/// Catalog generators of the global function ring (U chart).
std::vector<std::string> reference_global_functions(const ThreefoldSpec& spec);
/// Catalog V-chart coefficients of generators.
std::vector<ReferenceTriple> reference_v_displays(const ThreefoldSpec& spec);
/// Chart-wise degeneracy components (W1: e2; W3: the ten Poisson generators).
std::vector<ReferenceLocus> reference_loci(const ThreefoldSpec& spec);
/// Glued locus types for W2 (e1..e4): pairs (label, type summary).
std::vector<std::pair<std::string, std::string>> reference_locus_types(const ThreefoldSpec& spec);
/// Casimir variables: pairs (label, variable) with the Casimirs the functions of that variable.
std::vector<std::pair<std::string, std::string>> reference_casimirs(const ThreefoldSpec& spec);
/// Generic leaves "surfaces of constant <variable>" as listed in the catalog.
std::vector<std::pair<std::string, std::string>> reference_leaf_variables(const ThreefoldSpec& spec);
/// Isomorphic pairs.
std::vector<std::pair<std::string, std::string>> reference_isomorphisms(const ThreefoldSpec& spec);
/// Catalog pushforward witnesses.
std::vector<ReferenceWitness> reference_witnesses(const ThreefoldSpec& spec);
/// Fiber point of the fiber-plane embedding j0 (z = 1 for W2, z = 0 otherwise).
ExactScalar reference_fiber_point(const ThreefoldSpec& spec);

/// Parses a reference triple into a bivector field (no globality check).
BivectorField to_bivector(const ThreefoldSpec& spec, const ReferenceTriple& t);
/// Parses reference generators.
std::vector<BivectorField> reference_generator_fields(const ThreefoldSpec& spec);
/// Coefficient vector of a relation against the given generator labels.
std::vector<ChartPoly> relation_coefficients(const ReferenceRelation& r, const std::vector<BivectorField>& generators);

}  // namespace cybiv
