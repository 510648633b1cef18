#include "cybiv/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cybiv/exact_linalg.hpp"
#include "cybiv/schouten.hpp"

namespace cybiv {

std::string ChartComponent::to_string() const {
  const auto& names = chart_variable_names(chart);
  if (variables.empty()) return "{" + chart_name(chart) + "}";
  std::string s = "{";
  for (size_t i = 0; i < variables.size(); ++i) {
    if (i) s += "=";
    s += names[variables[i]];
  }
  return s + "=0}";
}

std::string VanishingLocus::type_summary() const {
  if (!decomposed) return "undecomposed";
  if (components.empty()) return "empty";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += " u ";
    s += components[i].type;
  }
  return s;
}

namespace {

// Minimal sets of variables meeting the support of every generator, provided all
// generators are monomials times constants; nullopt otherwise.
std::optional<std::vector<std::vector<int>>> chart_components(const std::vector<ChartPoly>& ideal) {
  std::vector<unsigned> edges;
  for (const auto& g : ideal) {
    // Strip the monomial content; the remainder must be a constant.
    if (g.size() != 1) return std::nullopt;
    const ChartMonomial& m = g.terms().begin()->first;
    unsigned mask = 0;
    for (int v = 0; v < 3; ++v) {
      if (m.exponent(static_cast<Var>(v)) > 0) mask |= 1U << v;
    }
    edges.push_back(mask);
  }
  std::vector<unsigned> covers;
  for (unsigned s = 0; s < 8; ++s) {
    bool hits = std::all_of(edges.begin(), edges.end(), [&](unsigned e) { return (e & s) != 0; });
    if (hits) covers.push_back(s);
  }
  std::vector<unsigned> minimal;
  for (unsigned s : covers) {
    bool is_min = std::none_of(covers.begin(), covers.end(), [&](unsigned o) { return o != s && (o & s) == o; });
    if (is_min) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::vector<int>> out;
  for (unsigned s : minimal) {
    std::vector<int> vars;
    for (int v = 0; v < 3; ++v) {
      if (s & (1U << v)) vars.push_back(v);
    }
    out.push_back(vars);
  }
  return out;
}

std::string surface_type(int k) { return k == 0 ? "P1xC" : "Z_" + std::to_string(k); }

std::string chart_only_type(size_t codim) {
  switch (codim) {
    case 1: return "C2";
    case 2: return "C";
    default: return "point";
  }
}

}  // namespace

VanishingLocus degeneracy_locus(const BivectorField& q) {
  if (auto why = q.nonglobal_reason()) throw std::invalid_argument("degeneracy locus of a non-global field: " + *why);
  VanishingLocus locus;
  locus.spec = q.spec;
  for (const auto& c : q.q) {
    if (!c.is_zero()) locus.u_ideal.push_back(c);
  }
  for (const auto& c : q.v_coefficients()) {
    if (!c.is_zero()) locus.v_ideal.push_back(c);
  }
  auto u = chart_components(locus.u_ideal);
  auto v = chart_components(locus.v_ideal);
  if (!u || !v) {
    locus.decomposed = false;
    return locus;
  }
  for (const auto& vars : *u) locus.chart_components.push_back({Chart::U, vars});
  for (const auto& vars : *v) locus.chart_components.push_back({Chart::V, vars});

  std::vector<bool> v_used(v->size(), false);
  for (const auto& uvars : *u) {
    LocusComponent comp;
    comp.pieces.push_back({Chart::U, uvars});
    bool over_zero = std::find(uvars.begin(), uvars.end(), 0) != uvars.end();
    if (over_zero) {
      comp.type = chart_only_type(uvars.size());
    } else {
      auto it = std::find(v->begin(), v->end(), uvars);
      if (it == v->end()) throw std::logic_error("U component " + comp.pieces[0].to_string() + " has no V partner");
      v_used[it - v->begin()] = true;
      comp.pieces.push_back({Chart::V, uvars});
      if (uvars.empty()) {
        comp.type = "W";
      } else if (uvars.size() == 1) {
        int other = uvars[0] == 1 ? q.spec.k2 : q.spec.k1;
        comp.type = surface_type(other);
      } else {
        comp.type = "P1";
      }
    }
    locus.components.push_back(std::move(comp));
  }
  for (size_t i = 0; i < v->size(); ++i) {
    if (v_used[i]) continue;
    const auto& vvars = (*v)[i];
    if (std::find(vvars.begin(), vvars.end(), 0) == vvars.end()) {
      throw std::logic_error("V component " + ChartComponent{Chart::V, vvars}.to_string() + " has no U partner");
    }
    LocusComponent comp;
    comp.pieces.push_back({Chart::V, vvars});
    comp.type = chart_only_type(vvars.size());
    locus.components.push_back(std::move(comp));
  }
  return locus;
}

namespace {

// Kernel of f -> [f, q] over the given monomials.
std::vector<ChartPoly> casimir_kernel(const BivectorField& q, const std::vector<ChartMonomial>& monos) {
  std::map<std::pair<int, ChartMonomial>, SparseVector> rows;
  for (size_t j = 0; j < monos.size(); ++j) {
    VectorField x = function_bracket(ChartPoly(monos[j]), q);
    for (int i = 0; i < 3; ++i) {
      for (const auto& [m, c] : x.x[i].terms()) rows[{i, m}][j] = c;
    }
  }
  std::vector<SparseVector> r;
  for (auto& [k, row] : rows) r.push_back(std::move(row));
  std::vector<ChartPoly> out;
  for (const auto& v : sparse_kernel_basis(r, monos.size())) {
    ChartPoly f;
    for (const auto& [j, c] : v) f.add_term(monos[j], c);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::string CasimirSpace::description() const {
  if (independent_variables) {
    if (independent_variables->empty()) return "constants";
    std::string s = "f(";
    for (size_t i = 0; i < independent_variables->size(); ++i) {
      if (i) s += ",";
      s += chart_variable_names(Chart::U)[(*independent_variables)[i]];
    }
    return s + ")";
  }
  std::string s = "span{";
  for (size_t i = 0; i < local_basis.size(); ++i) {
    if (i) s += ", ";
    s += format_poly(local_basis[i]);
  }
  return s + "}";
}

CasimirSpace casimirs(const BivectorField& q, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  if (!is_integrable(q)) throw std::invalid_argument("Casimir functions requested for a non-integrable field");
  CasimirSpace out;
  out.degree_bound = degree_bound;
  out.global_basis = casimir_kernel(q, global_function_monomials(q.spec, degree_bound));
  std::vector<ChartMonomial> box;
  for (int r = 0; r <= degree_bound; ++r) {
    for (int s = 0; s <= degree_bound; ++s) {
      for (int t = 0; s + t <= degree_bound; ++t) box.emplace_back(r, s, t);
    }
  }
  std::sort(box.begin(), box.end());
  out.local_basis = casimir_kernel(q, box);
  unsigned used = 0;
  for (const auto& f : out.local_basis) {
    for (int v = 0; v < 3; ++v) {
      if (f.uses(static_cast<Var>(v))) used |= 1U << v;
    }
  }
  size_t count = 0;
  bool all_in = true;
  for (const auto& m : box) {
    bool only_used = true;
    for (int v = 0; v < 3; ++v) {
      if (m.exponent(static_cast<Var>(v)) > 0 && !(used & (1U << v))) only_used = false;
    }
    if (!only_used) continue;
    ++count;
    if (!function_bracket(ChartPoly(m), q).is_zero()) all_in = false;
  }
  if (all_in && count == out.local_basis.size()) {
    std::vector<int> vars;
    for (int v = 0; v < 3; ++v) {
      if (used & (1U << v)) vars.push_back(v);
    }
    out.independent_variables = vars;
  }
  return out;
}

std::vector<CasimirClass> classify_by_casimir(const std::vector<BivectorField>& structures, int degree_bound) {
  std::vector<CasimirClass> classes;
  for (const auto& s : structures) {
    std::string key = casimirs(s, degree_bound).description();
    auto it = std::find_if(classes.begin(), classes.end(), [&](const CasimirClass& c) { return c.description == key; });
    if (it == classes.end()) {
      classes.push_back({key, {s.label}});
    } else {
      it->labels.push_back(s.label);
    }
  }
  return classes;
}

namespace {

std::multiset<std::string> type_multiset(const VanishingLocus& l) {
  std::multiset<std::string> out;
  for (const auto& c : l.components) out.insert(c.type);
  return out;
}

}  // namespace

LocusVerdict distinguish_by_locus(const BivectorField& a, const BivectorField& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("comparing structures on different threefolds");
  VanishingLocus la = degeneracy_locus(a);
  VanishingLocus lb = degeneracy_locus(b);
  LocusVerdict v;
  std::ostringstream os;
  if (!la.decomposed || !lb.decomposed) {
    v.distinguished = false;
    v.reason = "locus not decomposed";
    return v;
  }
  os << a.label << ": " << la.type_summary() << " (" << la.components.size() << " components, "
     << la.chart_components.size() << " chart pieces); " << b.label << ": " << lb.type_summary() << " ("
     << lb.components.size() << " components, " << lb.chart_components.size() << " chart pieces)";
  v.distinguished = type_multiset(la) != type_multiset(lb);
  v.reason = os.str();
  return v;
}

FoliationReport foliation_report(const BivectorField& q, int degree_bound) {
  FoliationReport r{degeneracy_locus(q), casimirs(q, degree_bound), {}};
  std::ostringstream os;
  os << "0-dimensional leaves: ";
  if (r.locus.is_empty()) {
    os << "none";
  } else {
    os << "the points of " << r.locus.type_summary();
  }
  os << "; 2-dimensional leaves: ";
  const auto& vars = r.casimir.independent_variables;
  if (vars && vars->size() == 1) {
    int v = (*vars)[0];
    os << "open subsets of the level sets " << chart_variable_names(Chart::U)[v] << " = const";
    if (v == 0) {
      os << " (fibers over the base)";
    } else {
      int kv = v == 1 ? q.spec.k1 : q.spec.k2;
      int other = v == 1 ? q.spec.k2 : q.spec.k1;
      if (kv == 0) os << ", each level set isomorphic to " << (other == 0 ? "P1xC" : "Z_" + std::to_string(other));
    }
  } else {
    os << "Casimirs " << r.casimir.description();
  }
  r.leaves = os.str();
  return r;
}

}  // namespace cybiv
