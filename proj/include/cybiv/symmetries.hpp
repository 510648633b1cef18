#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cybiv/bivector.hpp"

namespace cybiv {

enum class MapKind { FiberSwap, ChartSwap };

/// Automorphism of a threefold built from the fiber swap s0 (u1 <-> u2, only
/// when k1 = k2) and the chart swap s1 (U <-> V).  A composition lists its
/// steps in the order they are applied to a bivector.
class ThreefoldMap {
 public:
  static ThreefoldMap fiber_swap(const ThreefoldSpec& spec);  ///< throws if k1 != k2
  static ThreefoldMap chart_swap(const ThreefoldSpec& spec);
  /// Apply this map's pullback first, then next's.
  [[nodiscard]] ThreefoldMap then(const ThreefoldMap& next) const;

  [[nodiscard]] const ThreefoldSpec& spec() const { return spec_; }
  [[nodiscard]] const std::vector<MapKind>& steps() const { return steps_; }
  /// Step names in application order, e.g. {"s0", "s1"}.
  [[nodiscard]] std::vector<std::string> step_names() const;

 private:
  ThreefoldMap(ThreefoldSpec spec, std::vector<MapKind> steps) : spec_(spec), steps_(std::move(steps)) {}
  ThreefoldSpec spec_;
  std::vector<MapKind> steps_;
};

/// Pullback of a bivector field.  For the chart swap the U-data of the result is
/// the V-data of the input with (xi, v1, v2) renamed (z, u1, u2); for the fiber
/// swap q(z,u1,u2) -> (-q0, -q2, -q1)(z, u2, u1).
BivectorField pullback(const ThreefoldMap& map, const BivectorField& q);

/// The maps tried when certifying isomorphisms: s0, s1 and their two-step
/// compositions (s0 only when k1 = k2).
std::vector<ThreefoldMap> symmetry_maps(const ThreefoldSpec& spec);

/// pullback(map, from) == scale * to.
struct IsoCertificate {
  std::string from;
  std::string to;
  std::vector<std::string> map;
  ExactScalar scale;
};

/// Certified isomorphic pairs among the given structures (each unordered pair at most once).
std::vector<IsoCertificate> isomorphism_catalog(const std::vector<BivectorField>& structures);

/// Poisson structure g d_z ^ d_u on Z_k = Tot(O(-k)), given by its coefficients
/// in the charts (z, u) and (xi, v) with xi = 1/z, v = z^k u.  Polynomials use
/// variable slot 0 for z / xi and slot 1 for u / v.
struct SurfacePoissonStructure {
  int k = 0;
  std::string name;
  ChartPoly u_coeff;
  ChartPoly v_coeff;
};

enum class SurfaceValidity { Exact, SignFlipped, Invalid };
std::string to_string(SurfaceValidity v);

/// V-coefficient forced by the surface transition: -z^(k-2) g written in (xi, v).
ChartPoly surface_v_coefficient(int k, const ChartPoly& u_coeff);

/// Compares the stored V coefficient with the transition rule.
SurfaceValidity check_surface_structure(const SurfacePoissonStructure& s);

/// True if both chart coefficients are polynomial (a global structure on Z_k).
bool is_global_surface_structure(const SurfacePoissonStructure& s);

/// Generators of the Poisson structures on Z_k as catalogued for k in
/// {-1, 0, 1, 2} and k >= 3 (pairs exactly as listed, possibly sign_flipped).
/// Throws std::out_of_range for other k.
std::vector<SurfacePoissonStructure> surface_catalog(int k);

/// The same catalog with every V coefficient recomputed from the U coefficient.
std::vector<SurfacePoissonStructure> corrected_surface_catalog(int k);

/// Function on Z_k given chart-wise; global when both expressions are
/// polynomial and agree on the overlap.
struct SurfaceFunction {
  ChartPoly u_expr;
  ChartPoly v_expr;
};
bool is_global_surface_function(int k, const SurfaceFunction& g);
/// g * s, with V coefficient g_V * s_V.
SurfacePoissonStructure scale_surface_structure(const SurfaceFunction& g, const SurfacePoissonStructure& s);

enum class EmbeddingSlot { J0, J1, J2 };
std::string to_string(EmbeddingSlot s);

/// Surface inside a threefold: J0 the fiber plane over z = fiber_point with
/// d_u ^ d_v -> b0; J1 the surface u2 = v2 = 0 (Z_k1) with d_z ^ d_u -> b2; J2 the
/// surface u1 = v1 = 0 (Z_k2) with d_z ^ d_u -> b1 in both charts.
struct SurfaceEmbedding {
  ThreefoldSpec target;
  EmbeddingSlot slot = EmbeddingSlot::J1;
  ExactScalar fiber_point;  ///< only used by J0
  [[nodiscard]] int surface_k() const;
  [[nodiscard]] std::string name() const;
};

class NoExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global bivector field on the threefold restricting to the pushed-forward
/// surface structure.  For J1/J2 the input is a surface structure on Z_k1 /
/// Z_k2 (its u_coeff is used); for J0 it is a polynomial in (u, v) stored in
/// variable slots 1 and 2.  Each torus-weight piece is extended by the global
/// section of that weight with the prescribed coefficient and the other free
/// coefficients set to zero.  Throws NoExtensionError if none exists.
BivectorField embedding_pushforward(const SurfaceEmbedding& emb, const ChartPoly& surface_coeff);

/// Checks q restricted to the embedded surface equals the pushforward of the
/// given structure in every chart the surface meets (for J0 only U).
bool restricts_to(const SurfaceEmbedding& emb, const SurfacePoissonStructure& s, const BivectorField& q);
bool restricts_to_plane(const SurfaceEmbedding& emb, const ChartPoly& plane_coeff, const BivectorField& q);

struct EmbeddingWitness {
  std::string generator;
  std::string construction;        ///< e.g. "j2(Z_-1, u^2*pi0)"
  std::vector<std::string> map;    ///< symmetry applied afterwards, if any
  ExactScalar scale;               ///< generator == scale * constructed field
};

struct EmbeddingReport {
  ThreefoldSpec spec;
  std::vector<BivectorField> generators;
  std::vector<std::vector<EmbeddingWitness>> witnesses;  ///< per generator
  [[nodiscard]] bool all_witnessed() const;
  [[nodiscard]] std::vector<std::string> unwitnessed() const;
};

/// Searches pushforwards of catalog structures (times powers of the fiber
/// coordinate), plane structures u^a v^b on the fiber over fiber_point, and their
/// transports by s0 / s1, for every generator.
EmbeddingReport verify_generation_by_embeddings(const ThreefoldSpec& spec, const std::vector<BivectorField>& generators,
                                                const ExactScalar& fiber_point = ExactScalar(0));

}  // namespace cybiv
