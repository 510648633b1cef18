#include "cybiv/symmetries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cybiv/sections.hpp"

namespace cybiv {

namespace {

ChartPoly swap_fibers(const ChartPoly& p) {
  ChartPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(ChartMonomial(m.ez, m.eu2, m.eu1), c);
  return out;
}

/// Moves the surface fiber variable (slot 1) into the threefold slot 2.
ChartPoly fiber_to_second(const ChartPoly& p) { return swap_fibers(p); }

ChartPoly surface_function_in_v(int k, const ChartPoly& p) { return monomial_transform(p, -1, k, 0); }

bool is_polynomial(const ChartPoly& p) { return is_chart_polynomial(p); }

std::string surface_name(int k) { return "Z_" + std::to_string(k); }

}  // namespace

ThreefoldMap ThreefoldMap::fiber_swap(const ThreefoldSpec& spec) {
  if (spec.k1 != spec.k2) throw std::invalid_argument("fiber swap requires k1 == k2 on " + spec.name());
  return ThreefoldMap(spec, {MapKind::FiberSwap});
}

ThreefoldMap ThreefoldMap::chart_swap(const ThreefoldSpec& spec) { return ThreefoldMap(spec, {MapKind::ChartSwap}); }

ThreefoldMap ThreefoldMap::then(const ThreefoldMap& next) const {
  if (!(next.spec_ == spec_)) throw std::invalid_argument("composing maps of different threefolds");
  std::vector<MapKind> steps = steps_;
  steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
  return ThreefoldMap(spec_, std::move(steps));
}

std::vector<std::string> ThreefoldMap::step_names() const {
  std::vector<std::string> out;
  for (MapKind k : steps_) out.push_back(k == MapKind::FiberSwap ? "s0" : "s1");
  return out;
}

BivectorField pullback(const ThreefoldMap& map, const BivectorField& q) {
  if (!(map.spec() == q.spec)) throw std::invalid_argument("map and bivector live on different threefolds");
  BivectorField cur = q;
  for (MapKind k : map.steps()) {
    if (k == MapKind::ChartSwap) {
      cur = BivectorField(cur.spec, cur.v_coefficients(), cur.label);
    } else {
      cur = BivectorField(cur.spec, {-swap_fibers(cur.q[0]), -swap_fibers(cur.q[2]), -swap_fibers(cur.q[1])},
                          cur.label);
    }
  }
  return cur;
}

std::vector<ThreefoldMap> symmetry_maps(const ThreefoldSpec& spec) {
  auto s1 = ThreefoldMap::chart_swap(spec);
  if (spec.k1 != spec.k2) return {s1};
  auto s0 = ThreefoldMap::fiber_swap(spec);
  return {s0, s1, s0.then(s1), s1.then(s0)};
}

std::vector<IsoCertificate> isomorphism_catalog(const std::vector<BivectorField>& structures) {
  std::vector<IsoCertificate> out;
  for (size_t i = 0; i < structures.size(); ++i) {
    for (size_t j = i + 1; j < structures.size(); ++j) {
      const auto& a = structures[i];
      const auto& b = structures[j];
      if (!(a.spec == b.spec) || a.is_zero() || b.is_zero()) continue;
      for (const auto& map : symmetry_maps(a.spec)) {
        if (auto c = proportionality(pullback(map, a), b)) {
          out.push_back({a.label, b.label, map.step_names(), *c});
          break;
        }
      }
    }
  }
  return out;
}

std::string to_string(SurfaceValidity v) {
  switch (v) {
    case SurfaceValidity::Exact: return "exact";
    case SurfaceValidity::SignFlipped: return "sign_flipped";
    case SurfaceValidity::Invalid: return "invalid";
  }
  return "invalid";
}

ChartPoly surface_v_coefficient(int k, const ChartPoly& u_coeff) {
  return -surface_function_in_v(k, u_coeff).shifted(ChartMonomial(2 - k, 0, 0));
}

SurfaceValidity check_surface_structure(const SurfacePoissonStructure& s) {
  ChartPoly expected = surface_v_coefficient(s.k, s.u_coeff);
  if (expected == s.v_coeff) return SurfaceValidity::Exact;
  if (expected == -s.v_coeff) return SurfaceValidity::SignFlipped;
  return SurfaceValidity::Invalid;
}

bool is_global_surface_structure(const SurfacePoissonStructure& s) {
  return is_polynomial(s.u_coeff) && is_polynomial(s.v_coeff) && check_surface_structure(s) == SurfaceValidity::Exact;
}

std::vector<SurfacePoissonStructure> surface_catalog(int k) {
  auto m = [](int ez, int eu, long c = 1) { return ChartPoly::monomial(ez, eu, 0, ExactScalar(c)); };
  std::vector<std::pair<ChartPoly, ChartPoly>> pairs;
  if (k == 1) {
    pairs = {{m(0, 0), m(1, 0, -1)}, {m(1, 0), m(0, 0, -1)}};
  } else if (k == 2) {
    pairs = {{m(0, 0), m(0, 0, -1)}};
  } else if (k >= 3) {
    pairs = {{m(0, 1), m(2, 1, -1)}, {m(1, 1), m(1, 1, -1)}, {m(2, 1), m(0, 1, -1)}};
  } else if (k == 0) {
    pairs = {{m(0, 0), m(2, 0, -1)}, {m(1, 0), m(1, 0, -1)}, {m(2, 0), m(0, 0, -1)}};
  } else if (k == -1) {
    pairs = {{m(0, 0), m(3, 0, -1)}, {m(1, 0), m(2, 0, -1)}, {m(2, 0), m(1, 0, -1)}, {m(3, 0), m(0, 0, 1)}};
  } else {
    throw std::out_of_range("no catalogued Poisson structures on Z_" + std::to_string(k));
  }
  std::vector<SurfacePoissonStructure> out;
  for (size_t i = 0; i < pairs.size(); ++i) {
    out.push_back({k, "pi" + std::to_string(i), pairs[i].first, pairs[i].second});
  }
  return out;
}

std::vector<SurfacePoissonStructure> corrected_surface_catalog(int k) {
  auto out = surface_catalog(k);
  for (auto& s : out) s.v_coeff = surface_v_coefficient(k, s.u_coeff);
  return out;
}

bool is_global_surface_function(int k, const SurfaceFunction& g) {
  return is_polynomial(g.u_expr) && is_polynomial(g.v_expr) && surface_function_in_v(k, g.u_expr) == g.v_expr;
}

SurfacePoissonStructure scale_surface_structure(const SurfaceFunction& g, const SurfacePoissonStructure& s) {
  SurfacePoissonStructure out = s;
  out.u_coeff = g.u_expr * s.u_coeff;
  out.v_coeff = g.v_expr * s.v_coeff;
  return out;
}

std::string to_string(EmbeddingSlot s) {
  switch (s) {
    case EmbeddingSlot::J0: return "j0";
    case EmbeddingSlot::J1: return "j1";
    case EmbeddingSlot::J2: return "j2";
  }
  return "j?";
}

int SurfaceEmbedding::surface_k() const {
  switch (slot) {
    case EmbeddingSlot::J1: return target.k1;
    case EmbeddingSlot::J2: return target.k2;
    case EmbeddingSlot::J0: break;
  }
  throw std::logic_error("the fiber plane is not a surface Z_k");
}

std::string SurfaceEmbedding::name() const {
  if (slot == EmbeddingSlot::J0) return "j0(z=" + fiber_point.to_string() + ")";
  return to_string(slot) + "(" + surface_name(surface_k()) + ")";
}

namespace {

/// Global section of weight d satisfying the linear conditions sum_j rows[i][j] * coord_j = rhs[i]
/// on its weight coordinates (slot 0, 1, 2), with free choices set to zero.
std::optional<BivectorField> solve_in_weight(const ThreefoldSpec& spec, const Multidegree& d,
                                             const DenseMatrix& conditions, const DenseVector& rhs) {
  auto basis = homogeneous_sections(spec, d);
  if (basis.empty()) return std::nullopt;
  std::vector<DenseVector> coords;
  for (const auto& b : basis) coords.push_back(weight_coordinates(b, d));
  DenseMatrix m;
  for (const auto& cond : conditions) {
    DenseVector row(basis.size(), ExactScalar(0));
    for (size_t j = 0; j < basis.size(); ++j) {
      for (size_t slot = 0; slot < 3; ++slot) row[j] += cond[slot] * coords[j][slot];
    }
    m.push_back(std::move(row));
  }
  auto sol = solve_linear(m, rhs, basis.size());
  if (!sol) return std::nullopt;
  BivectorField out(spec, {ChartPoly(), ChartPoly(), ChartPoly()});
  for (size_t j = 0; j < basis.size(); ++j) {
    if (!(*sol)[j].is_zero()) out += (*sol)[j] * basis[j];
  }
  return out;
}

ExactScalar power(const ExactScalar& c, int e) {
  ExactScalar out(1);
  for (int i = 0; i < e; ++i) out *= c;
  return out;
}

}  // namespace

BivectorField embedding_pushforward(const SurfaceEmbedding& emb, const ChartPoly& surface_coeff) {
  const ThreefoldSpec& spec = emb.target;
  BivectorField out(spec, {ChartPoly(), ChartPoly(), ChartPoly()});
  const ExactScalar one(1);
  const ExactScalar zero(0);
  for (const auto& [m, c] : surface_coeff.terms()) {
    std::optional<BivectorField> piece;
    if (emb.slot == EmbeddingSlot::J1 || emb.slot == EmbeddingSlot::J2) {
      if (m.eu2 != 0 || m.ez < 0) {
        throw std::invalid_argument("surface coefficient must be a polynomial in (z, u)");
      }
      int slot = emb.slot == EmbeddingSlot::J1 ? 2 : 1;
      ChartMonomial tm = emb.slot == EmbeddingSlot::J1 ? ChartMonomial(m.ez, m.eu1, 0) : ChartMonomial(m.ez, 0, m.eu1);
      Multidegree d = slot_multidegree(slot, tm);
      DenseVector cond(3, zero);
      cond[static_cast<size_t>(slot)] = one;
      piece = solve_in_weight(spec, d, {cond}, {c});
    } else {
      if (m.ez != 0) throw std::invalid_argument("fiber plane coefficient must be a polynomial in (u, v)");
      const ExactScalar& p = emb.fiber_point;
      // Look for a weight (r, s, t) whose section restricts to c u^s v^t on the fiber z = p.
      int r_max = p.is_zero() ? 0 : z_exponent_bound(spec, m.eu1, m.eu2);
      for (int r = 0; r <= r_max && !piece; ++r) {
        Multidegree d{r, m.eu1, m.eu2};
        DenseMatrix conds{{power(p, r), zero, zero}};
        DenseVector rhs{c};
        if (!p.is_zero()) {
          conds.push_back({zero, one, zero});
          conds.push_back({zero, zero, one});
          rhs.push_back(zero);
          rhs.push_back(zero);
        }
        piece = solve_in_weight(spec, d, conds, rhs);
      }
    }
    if (!piece) {
      std::ostringstream msg;
      msg << "no global extension of the term " << c << "*" << format_monomial(m) << " pushed forward by "
          << emb.name() << " on " << spec.name();
      throw NoExtensionError(msg.str());
    }
    out += *piece;
  }
  return out;
}

bool restricts_to(const SurfaceEmbedding& emb, const SurfacePoissonStructure& s, const BivectorField& q) {
  if (emb.slot == EmbeddingSlot::J0) throw std::invalid_argument("use restricts_to_plane for the fiber plane");
  if (s.k != emb.surface_k()) return false;
  const bool first = emb.slot == EmbeddingSlot::J1;
  const Var normal = first ? Var::Fiber2 : Var::Fiber1;
  const size_t tangent = first ? 2 : 1;
  const ExactScalar zero(0);
  auto check = [&](const CoefficientTriple& c, const ChartPoly& expected) {
    for (size_t slot = 0; slot < 3; ++slot) {
      ChartPoly r = evaluate_variable(c[slot], normal, zero);
      if (slot == tangent ? !(r == expected) : !r.is_zero()) return false;
    }
    return true;
  };
  ChartPoly eu = first ? s.u_coeff : fiber_to_second(s.u_coeff);
  ChartPoly ev = first ? s.v_coeff : fiber_to_second(s.v_coeff);
  return check(q.q, eu) && check(q.v_coefficients(), ev);
}

bool restricts_to_plane(const SurfaceEmbedding& emb, const ChartPoly& plane_coeff, const BivectorField& q) {
  if (emb.slot != EmbeddingSlot::J0) throw std::invalid_argument("not a fiber plane embedding");
  for (size_t slot = 0; slot < 3; ++slot) {
    ChartPoly r = evaluate_variable(q.q[slot], Var::Base, emb.fiber_point);
    if (slot == 0 ? !(r == plane_coeff) : !r.is_zero()) return false;
  }
  return true;
}

bool EmbeddingReport::all_witnessed() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return !w.empty(); });
}

std::vector<std::string> EmbeddingReport::unwitnessed() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < generators.size(); ++i) {
    if (witnesses[i].empty()) out.push_back(generators[i].label);
  }
  return out;
}

namespace {

struct Construction {
  std::string name;
  BivectorField field;
};

std::string multiplier_text(int power, const std::string& base) {
  if (power == 0) return base;
  std::string u = power == 1 ? "u" : "u^" + std::to_string(power);
  return u + "*" + base;
}

void add_surface_constructions(const SurfaceEmbedding& emb, std::vector<Construction>& out) {
  const int k = emb.surface_k();
  std::vector<SurfacePoissonStructure> catalog;
  try {
    catalog = corrected_surface_catalog(k);
  } catch (const std::out_of_range&) {
    return;
  }
  for (const auto& s : catalog) {
    for (int e = 0; e <= 3; ++e) {
      ChartPoly u = ChartPoly::monomial(0, e, 0, ExactScalar(1));
      SurfaceFunction g{u, surface_function_in_v(k, u)};
      SurfacePoissonStructure gs = scale_surface_structure(g, s);
      gs.v_coeff = surface_v_coefficient(k, gs.u_coeff);
      if (!is_polynomial(gs.v_coeff)) continue;
      try {
        BivectorField q = embedding_pushforward(emb, gs.u_coeff);
        if (!restricts_to(emb, gs, q)) continue;
        std::string name = to_string(emb.slot) + "(" + surface_name(k) + ", " + multiplier_text(e, s.name) + ")";
        q.label = name;
        out.push_back({name, q});
      } catch (const NoExtensionError&) {
      }
    }
  }
}

}  // namespace

EmbeddingReport verify_generation_by_embeddings(const ThreefoldSpec& spec, const std::vector<BivectorField>& generators,
                                                const ExactScalar& fiber_point) {
  std::vector<Construction> base;
  add_surface_constructions({spec, EmbeddingSlot::J1, ExactScalar(0)}, base);
  if (spec.k1 != spec.k2) add_surface_constructions({spec, EmbeddingSlot::J2, ExactScalar(0)}, base);
  SurfaceEmbedding plane{spec, EmbeddingSlot::J0, fiber_point};
  for (int total = 0; total <= 2; ++total) {
    for (int a = total; a >= 0; --a) {
      int b = total - a;
      ChartPoly p = ChartPoly::monomial(0, a, b, ExactScalar(1));
      try {
        BivectorField q = embedding_pushforward(plane, p);
        if (!restricts_to_plane(plane, p, q)) continue;
        std::string name = plane.name() + "[" + format_monomial(ChartMonomial(0, a, b), plane_variable_names()) + "]";
        q.label = name;
        base.push_back({name, q});
      } catch (const NoExtensionError&) {
      }
    }
  }

  EmbeddingReport report{spec, generators, std::vector<std::vector<EmbeddingWitness>>(generators.size())};
  auto maps = symmetry_maps(spec);
  for (size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].is_zero()) continue;
    for (const auto& c : base) {
      if (auto s = proportionality(generators[g], c.field)) {
        report.witnesses[g].push_back({generators[g].label, c.name, {}, *s});
      }
      for (const auto& map : maps) {
        if (auto s = proportionality(generators[g], pullback(map, c.field))) {
          report.witnesses[g].push_back({generators[g].label, c.name, map.step_names(), *s});
        }
      }
    }
  }
  return report;
}

}  // namespace cybiv
