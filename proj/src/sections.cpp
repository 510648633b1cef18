#include "cybiv/sections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "cybiv/poly_text.hpp"

namespace cybiv {

namespace {

using Unknown = std::pair<int, ChartMonomial>;  // (slot, monomial)

// One linear constraint per (V-row, U-monomial whose V image has a negative xi power).
std::vector<SparseVector> holomorphy_constraints(const ThreefoldSpec& spec, const std::vector<Unknown>& unknowns) {
  const TransitionMatrix m = lambda2_transition(spec, Direction::UtoV);
  std::map<std::pair<int, ChartMonomial>, SparseVector> rows;
  for (size_t col = 0; col < unknowns.size(); ++col) {
    const auto& [slot, mono] = unknowns[col];
    for (int alpha = 0; alpha < 3; ++alpha) {
      ChartPoly contribution = m.entries[alpha][slot].shifted(mono);
      for (const auto& [um, c] : contribution.terms()) {
        int xi_exp = spec.k1 * um.eu1 + spec.k2 * um.eu2 - um.ez;
        if (xi_exp >= 0) continue;
        SparseVector& row = rows[{alpha, um}];
        auto [it, inserted] = row.emplace(col, c);
        if (!inserted) it->second += c;
      }
    }
  }
  std::vector<SparseVector> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) {
    for (auto it = row.begin(); it != row.end();) {
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

std::vector<BivectorField> solve_sections(const ThreefoldSpec& spec, const std::vector<Unknown>& unknowns) {
  auto rows = holomorphy_constraints(spec, unknowns);
  auto kernel = sparse_kernel_basis(rows, unknowns.size());
  std::vector<BivectorField> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    BivectorField b(spec, {});
    for (const auto& [col, c] : v) b.q[unknowns[col].first].add_term(unknowns[col].second, c);
    out.push_back(std::move(b));
  }
  return out;
}

bool is_global_monomial(const ThreefoldSpec& spec, const Multidegree& m) {
  return m.s >= 0 && m.t >= 0 && m.r >= 0 && m.r <= spec.k1 * m.s + spec.k2 * m.t;
}

Multidegree minus(const Multidegree& a, const Multidegree& b) { return {a.r - b.r, a.s - b.s, a.t - b.t}; }
Multidegree plus(const Multidegree& a, const Multidegree& b) { return {a.r + b.r, a.s + b.s, a.t + b.t}; }

ChartMonomial as_monomial(const Multidegree& m) { return ChartMonomial(m.r, m.s, m.t); }

// All weights of fiber degree exactly f that can carry a nonzero section.
std::vector<Multidegree> weights_of_fiber_degree(const ThreefoldSpec& spec, int f) {
  std::vector<Multidegree> out;
  for (int s = 0; s <= f; ++s) {
    int t = f - s;
    int top = z_exponent_bound(spec, s, t);
    for (int r = -1; r <= top; ++r) out.push_back({r, s, t});
  }
  return out;
}

// Columns (generator index, multiplier) contributing to weight d.
std::vector<std::pair<size_t, Multidegree>> multiplier_columns(const ThreefoldSpec& spec,
                                                               const std::vector<Multidegree>& gen_weights,
                                                               const Multidegree& d) {
  std::vector<std::pair<size_t, Multidegree>> cols;
  for (size_t h = 0; h < gen_weights.size(); ++h) {
    Multidegree m = minus(d, gen_weights[h]);
    if (is_global_monomial(spec, m)) cols.emplace_back(h, m);
  }
  return cols;
}

DenseMatrix multiplier_matrix(const std::vector<BivectorField>& gens, const Multidegree& d,
                              const std::vector<std::pair<size_t, Multidegree>>& cols) {
  DenseMatrix mat(3, DenseVector(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    const auto& [h, m] = cols[j];
    DenseVector v = weight_coordinates(ChartPoly(as_monomial(m)) * gens[h], d);
    for (int i = 0; i < 3; ++i) mat[i][j] = v[i];
  }
  return mat;
}

}  // namespace

int z_exponent_bound(const ThreefoldSpec& spec, int s, int t, int margin) {
  return spec.k1 * s + spec.k2 * t + std::max({0, spec.k1, spec.k2}) + margin;
}

std::vector<BivectorField> section_basis(const ThreefoldSpec& spec, int n, int z_margin) {
  if (n < 0) throw std::invalid_argument("neighborhood degree must be non-negative");
  std::vector<Unknown> unknowns;
  for (int slot = 0; slot < 3; ++slot) {
    for (int s = 0; s <= n; ++s) {
      for (int t = 0; s + t <= n; ++t) {
        for (int l = 0; l <= z_exponent_bound(spec, s, t, z_margin); ++l) unknowns.emplace_back(slot, ChartMonomial(l, s, t));
      }
    }
  }
  std::sort(unknowns.begin(), unknowns.end());
  return solve_sections(spec, unknowns);
}

std::vector<BivectorField> homogeneous_sections(const ThreefoldSpec& spec, const Multidegree& d) {
  std::vector<Unknown> unknowns;
  for (int slot = 0; slot < 3; ++slot) {
    auto m = slot_monomial(slot, d);
    if (m && m->ez >= 0) unknowns.emplace_back(slot, *m);
  }
  return solve_sections(spec, unknowns);
}

DenseVector weight_coordinates(const BivectorField& b, const Multidegree& d) {
  DenseVector v(3);
  size_t used = 0;
  for (int slot = 0; slot < 3; ++slot) {
    auto m = slot_monomial(slot, d);
    if (m) v[slot] = b.q[slot].coefficient(*m);
    used += m && !v[slot].is_zero() ? 1 : 0;
  }
  size_t total = b.q[0].size() + b.q[1].size() + b.q[2].size();
  if (used != total) throw std::invalid_argument("bivector is not homogeneous of the requested weight");
  return v;
}

Multidegree weight_of(const BivectorField& b) {
  auto comps = b.homogeneous_components();
  if (comps.size() != 1) throw std::invalid_argument("bivector is zero or not homogeneous");
  return comps.begin()->first;
}

ModulePresentation module_presentation(const ThreefoldSpec& spec, const std::vector<BivectorField>& candidates,
                                       int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  // Split candidates into homogeneous pieces; a homogeneous candidate keeps its label.
  std::map<Multidegree, std::vector<BivectorField>> by_weight;
  for (const auto& c : candidates) {
    if (!(c.spec == spec)) throw std::invalid_argument("candidate lives on a different threefold");
    if (auto why = c.nonglobal_reason()) throw std::invalid_argument("candidate " + c.label + " is not global: " + *why);
    auto comps = c.homogeneous_components();
    for (auto& [d, piece] : comps) {
      piece.label = comps.size() == 1 ? c.label : std::string();
      by_weight[d].push_back(piece);
    }
  }

  ModulePresentation pres;
  pres.spec = spec;
  pres.degree_bound = degree_bound;
  std::vector<BivectorField> chosen;
  std::vector<Multidegree> chosen_weights;
  std::vector<bool> from_candidate;

  for (int f = 0; f <= degree_bound + 1; ++f) {
    for (const auto& d : weights_of_fiber_degree(spec, f)) {
      auto piece = homogeneous_sections(spec, d);
      if (piece.empty()) continue;
      SpanTracker span(3);
      for (const auto& [h, m] : multiplier_columns(spec, chosen_weights, d)) {
        span.add(weight_coordinates(ChartPoly(as_monomial(m)) * chosen[h], d));
      }
      if (span.dimension() == piece.size()) continue;
      if (f == degree_bound + 1) {
        throw DegreeBoundError("degree bound " + std::to_string(degree_bound) +
                               " too small: a new generator appears at fiber degree " + std::to_string(f));
      }
      std::vector<std::pair<BivectorField, bool>> pool;
      for (const auto& c : by_weight[d]) pool.emplace_back(c, true);
      for (const auto& b : piece) pool.emplace_back(b, false);
      for (auto& [b, is_candidate] : pool) {
        if (span.dimension() == piece.size()) break;
        if (b.is_zero()) continue;
        if (span.add(weight_coordinates(b, d))) {
          chosen.push_back(b);
          chosen_weights.push_back(d);
          from_candidate.push_back(is_candidate && !b.label.empty());
        }
      }
    }
  }

  // Order: labelled candidates in candidate order, then the rest by weight.
  std::vector<size_t> order;
  for (const auto& c : candidates) {
    for (size_t i = 0; i < chosen.size(); ++i) {
      if (from_candidate[i] && chosen[i].label == c.label && std::find(order.begin(), order.end(), i) == order.end()) {
        order.push_back(i);
        break;
      }
    }
  }
  int fresh = 0;
  for (size_t i = 0; i < chosen.size(); ++i) {
    if (std::find(order.begin(), order.end(), i) != order.end()) continue;
    chosen[i].label = "g" + std::to_string(++fresh);
    order.push_back(i);
  }
  for (size_t i : order) {
    pres.generators.push_back(chosen[i]);
    pres.generator_weights.push_back(chosen_weights[i]);
  }

  // Minimal relations, weight by weight.
  const size_t ngen = pres.generators.size();
  bool stable = true;
  for (int f = 0; f <= degree_bound + 1; ++f) {
    for (const auto& d : weights_of_fiber_degree(spec, f)) {
      auto cols = multiplier_columns(spec, pres.generator_weights, d);
      if (cols.empty()) continue;
      DenseMatrix mat = multiplier_matrix(pres.generators, d, cols);
      DenseMatrix kernel = kernel_basis(mat, cols.size());
      if (kernel.empty()) continue;
      std::map<std::pair<size_t, Multidegree>, size_t> col_index;
      for (size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = j;
      SpanTracker span(cols.size());
      for (const auto& rel : pres.relations) {
        Multidegree shift = minus(d, rel.weight);
        if (!is_global_monomial(spec, shift) || (shift.r == 0 && shift.s == 0 && shift.t == 0)) continue;
        DenseVector v(cols.size());
        for (size_t h = 0; h < ngen; ++h) {
          for (const auto& [m, c] : rel.coefficients[h].terms()) {
            Multidegree mm = plus({m.ez, m.eu1, m.eu2}, shift);
            v[col_index.at({h, mm})] = c;
          }
        }
        span.add(v);
      }
      for (const auto& k : kernel) {
        if (!span.add(k)) continue;
        if (f == degree_bound + 1) {
          stable = false;
          continue;
        }
        Relation rel;
        rel.weight = d;
        rel.coefficients.assign(ngen, ChartPoly());
        for (size_t j = 0; j < cols.size(); ++j) {
          if (!k[j].is_zero()) rel.coefficients[cols[j].first].add_term(as_monomial(cols[j].second), k[j]);
        }
        pres.relations.push_back(std::move(rel));
      }
    }
  }
  pres.relations_stable = stable;
  return pres;
}

ExpressResult express_in_generators(const BivectorField& q, const ModulePresentation& pres) {
  ExpressResult result;
  if (!(q.spec == pres.spec)) {
    result.failure = ExpressFailure::NotGlobal;
    result.message = "bivector lives on a different threefold";
    return result;
  }
  if (auto why = q.nonglobal_reason()) {
    result.failure = ExpressFailure::NotGlobal;
    result.message = *why;
    return result;
  }
  result.coefficients.assign(pres.generators.size(), ChartPoly());
  for (const auto& [d, piece] : q.homogeneous_components()) {
    if (d.fiber_degree() > pres.degree_bound) {
      result.failure = ExpressFailure::DegreeBoundExceeded;
      result.message = "component of fiber degree " + std::to_string(d.fiber_degree()) + " exceeds the bound " +
                       std::to_string(pres.degree_bound);
      result.coefficients.clear();
      return result;
    }
    auto cols = multiplier_columns(pres.spec, pres.generator_weights, d);
    DenseMatrix mat = multiplier_matrix(pres.generators, d, cols);
    auto x = solve_linear(mat, weight_coordinates(piece, d), cols.size());
    if (!x) {
      result.failure = ExpressFailure::NotInSpan;
      result.message = "component " + format_triple(piece.q) + " is not generated";
      result.coefficients.clear();
      return result;
    }
    for (size_t j = 0; j < cols.size(); ++j) {
      if (!(*x)[j].is_zero()) result.coefficients[cols[j].first].add_term(as_monomial(cols[j].second), (*x)[j]);
    }
  }
  return result;
}

BivectorField combine(const std::vector<BivectorField>& generators, const std::vector<ChartPoly>& coefficients) {
  if (generators.size() != coefficients.size()) throw std::invalid_argument("coefficient count mismatch");
  if (generators.empty()) throw std::invalid_argument("no generators");
  BivectorField sum(generators.front().spec, {});
  for (size_t h = 0; h < generators.size(); ++h) sum += coefficients[h] * generators[h];
  return sum;
}

bool is_relation(const std::vector<BivectorField>& generators, const std::vector<ChartPoly>& coefficients) {
  if (generators.empty()) return false;
  for (const auto& c : coefficients) {
    if (!is_global_function(generators.front().spec, c)) return false;
  }
  return combine(generators, coefficients).is_zero();
}

bool in_linear_span(const std::vector<BivectorField>& basis, const BivectorField& q) {
  std::map<Unknown, size_t> index;
  auto collect = [&](const BivectorField& b) {
    for (int slot = 0; slot < 3; ++slot) {
      for (const auto& [m, c] : b.q[slot].terms()) index.try_emplace({slot, m}, index.size());
    }
  };
  for (const auto& b : basis) collect(b);
  collect(q);
  auto coords = [&](const BivectorField& b) {
    DenseVector v(index.size());
    for (int slot = 0; slot < 3; ++slot) {
      for (const auto& [m, c] : b.q[slot].terms()) v[index.at({slot, m})] = c;
    }
    return v;
  };
  SpanTracker span(index.size());
  for (const auto& b : basis) span.add(coords(b));
  return span.contains(coords(q));
}

}  // namespace cybiv
