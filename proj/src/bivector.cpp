#include "cybiv/bivector.hpp"

#include <sstream>
#include <stdexcept>

#include "cybiv/poly_text.hpp"

namespace cybiv {

Multidegree slot_multidegree(int slot, const ChartMonomial& m) {
  switch (slot) {
    case 0: return {m.ez, m.eu1, m.eu2};
    case 1: return {m.ez - 1, m.eu1 + 1, m.eu2};
    case 2: return {m.ez - 1, m.eu1, m.eu2 + 1};
    default: throw std::out_of_range("bivector slot out of range");
  }
}

std::optional<ChartMonomial> slot_monomial(int slot, const Multidegree& d) {
  switch (slot) {
    case 0:
      if (d.s < 0 || d.t < 0) return std::nullopt;
      return ChartMonomial(d.r, d.s, d.t);
    case 1:
      if (d.s < 1 || d.t < 0) return std::nullopt;
      return ChartMonomial(d.r + 1, d.s - 1, d.t);
    case 2:
      if (d.s < 0 || d.t < 1) return std::nullopt;
      return ChartMonomial(d.r + 1, d.s, d.t - 1);
    default: throw std::out_of_range("bivector slot out of range");
  }
}

CoefficientTriple apply_matrix(const TransitionMatrix& m, const CoefficientTriple& q) {
  CoefficientTriple out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) out[a] += m.entries[a][b] * q[b];
  }
  return out;
}

BivectorField BivectorField::from_v_coefficients(const ThreefoldSpec& s, const CoefficientTriple& qv,
                                                 std::string name) {
  CoefficientTriple rows = apply_matrix(lambda2_transition(s, Direction::VtoU), qv);
  CoefficientTriple qu;
  for (int i = 0; i < 3; ++i) qu[i] = express_in_u(s, rows[i]);
  return BivectorField(s, std::move(qu), std::move(name));
}

CoefficientTriple BivectorField::v_coefficients() const {
  CoefficientTriple rows = apply_matrix(lambda2_transition(spec, Direction::UtoV), q);
  CoefficientTriple qv;
  for (int i = 0; i < 3; ++i) qv[i] = express_in_v(spec, rows[i]);
  return qv;
}

bool BivectorField::is_global() const { return !nonglobal_reason().has_value(); }

std::optional<std::string> BivectorField::nonglobal_reason() const {
  for (int i = 0; i < 3; ++i) {
    if (auto m = q[i].min_base_exponent(); m && *m < 0) {
      return "coefficient q" + std::to_string(i) + " has a negative power of z";
    }
  }
  CoefficientTriple rows = apply_matrix(lambda2_transition(spec, Direction::UtoV), q);
  for (int a = 0; a < 3; ++a) {
    for (const auto& [m, c] : rows[a].terms()) {
      if (m.ez > spec.k1 * m.eu1 + spec.k2 * m.eu2) {
        std::ostringstream os;
        os << "term " << format_monomial(m) << " of V-row " << a << " (" << format_poly(rows[a])
           << ") violates r <= " << spec.k1 << "*s + " << spec.k2 << "*t (r=" << m.ez << ", s=" << m.eu1
           << ", t=" << m.eu2 << ") and becomes xi^" << (spec.k1 * m.eu1 + spec.k2 * m.eu2 - m.ez);
        return os.str();
      }
    }
  }
  return std::nullopt;
}

bool BivectorField::is_zero() const { return q[0].is_zero() && q[1].is_zero() && q[2].is_zero(); }

int BivectorField::max_fiber_degree() const {
  return std::max({q[0].max_fiber_degree(), q[1].max_fiber_degree(), q[2].max_fiber_degree()});
}

std::map<Multidegree, BivectorField> BivectorField::homogeneous_components() const {
  std::map<Multidegree, BivectorField> out;
  for (int slot = 0; slot < 3; ++slot) {
    for (const auto& [m, c] : q[slot].terms()) {
      Multidegree d = slot_multidegree(slot, m);
      auto [it, inserted] = out.try_emplace(d, BivectorField(spec, {}, {}));
      it->second.q[slot].add_term(m, c);
    }
  }
  return out;
}

BivectorField& BivectorField::operator+=(const BivectorField& o) {
  if (!(spec == o.spec)) throw std::invalid_argument("adding bivectors on different threefolds");
  for (int i = 0; i < 3; ++i) q[i] += o.q[i];
  return *this;
}

BivectorField& BivectorField::operator-=(const BivectorField& o) {
  if (!(spec == o.spec)) throw std::invalid_argument("subtracting bivectors on different threefolds");
  for (int i = 0; i < 3; ++i) q[i] -= o.q[i];
  return *this;
}

BivectorField operator*(const ChartPoly& f, const BivectorField& b) {
  BivectorField out(b.spec, {f * b.q[0], f * b.q[1], f * b.q[2]});
  return out;
}

BivectorField operator*(const ExactScalar& c, const BivectorField& b) {
  BivectorField out(b.spec, {b.q[0] * c, b.q[1] * c, b.q[2] * c}, b.label);
  return out;
}

std::optional<ExactScalar> proportionality(const BivectorField& a, const BivectorField& b) {
  if (!(a.spec == b.spec)) return std::nullopt;
  if (b.is_zero()) throw std::invalid_argument("proportionality to the zero bivector");
  for (int i = 0; i < 3; ++i) {
    if (b.q[i].is_zero()) continue;
    auto c = proportionality(a.q[i], b.q[i]);
    if (!c) return std::nullopt;
    if (a == *c * b) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

std::string format_triple(const CoefficientTriple& q, Chart chart) {
  return "(" + format_poly(q[0], chart) + ", " + format_poly(q[1], chart) + ", " + format_poly(q[2], chart) + ")";
}

}  // namespace cybiv
