#include "cybiv/chart_poly.hpp"

#include <stdexcept>
#include <string>

namespace cybiv {

ChartMonomial::ChartMonomial(int z, int u1, int u2) : ez(z), eu1(u1), eu2(u2) {
  if (u1 < 0 || u2 < 0) {
    throw std::invalid_argument("negative fiber exponent in monomial (" + std::to_string(z) + "," +
                                std::to_string(u1) + "," + std::to_string(u2) + ")");
  }
}

int ChartMonomial::exponent(Var v) const {
  switch (v) {
    case Var::Base: return ez;
    case Var::Fiber1: return eu1;
    case Var::Fiber2: return eu2;
  }
  return 0;
}

std::strong_ordering operator<=>(const ChartMonomial& a, const ChartMonomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  if (auto c = a.eu2 <=> b.eu2; c != 0) return c;
  if (auto c = a.eu1 <=> b.eu1; c != 0) return c;
  return a.ez <=> b.ez;
}

ChartPoly::ChartPoly(const ExactScalar& c) {
  if (!c.is_zero()) terms_.emplace(ChartMonomial{}, c);
}

ChartPoly::ChartPoly(const ChartMonomial& m, const ExactScalar& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

ChartPoly ChartPoly::variable(Var v) {
  switch (v) {
    case Var::Base: return monomial(1, 0, 0);
    case Var::Fiber1: return monomial(0, 1, 0);
    case Var::Fiber2: return monomial(0, 0, 1);
  }
  return {};
}

ExactScalar ChartPoly::coefficient(const ChartMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

bool ChartPoly::is_constant() const {
  return terms_.size() == 1 && terms_.begin()->first == ChartMonomial{};
}

std::optional<int> ChartPoly::min_base_exponent() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_) {
    if (!best || m.ez < *best) best = m.ez;
  }
  return best;
}

int ChartPoly::max_fiber_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.fiber_degree());
  return best;
}

bool ChartPoly::uses(Var v) const {
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != 0) return true;
  }
  return false;
}

const std::pair<const ChartMonomial, ExactScalar>& ChartPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void ChartPoly::add_term(const ChartMonomial& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ChartPoly& ChartPoly::operator+=(const ChartPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ChartPoly& ChartPoly::operator-=(const ChartPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ChartPoly operator*(const ChartPoly& a, const ChartPoly& b) {
  ChartPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

ChartPoly& ChartPoly::operator*=(const ChartPoly& o) {
  *this = *this * o;
  return *this;
}

ChartPoly& ChartPoly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ChartPoly ChartPoly::operator-() const {
  ChartPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

ChartPoly ChartPoly::shifted(const ChartMonomial& m) const {
  ChartPoly out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
  return out;
}

ChartPoly ChartPoly::pow(unsigned e) const {
  ChartPoly result(1);
  ChartPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

ChartPoly partial_derivative(const ChartPoly& p, Var v) {
  ChartPoly out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    if (e == 0) continue;
    ChartMonomial d = m;
    switch (v) {
      case Var::Base: d.ez -= 1; break;
      case Var::Fiber1: d.eu1 -= 1; break;
      case Var::Fiber2: d.eu2 -= 1; break;
    }
    out.add_term(d, c * ExactScalar(e));
  }
  return out;
}

namespace {

ChartPoly invert_monomial(const ChartPoly& p) {
  if (!p.is_monomial()) throw std::invalid_argument("negative power of a non-monomial base image");
  const auto& [m, c] = *p.terms().begin();
  if (m.eu1 != 0 || m.eu2 != 0) {
    throw std::invalid_argument("negative power of a base image involving fiber variables");
  }
  return ChartPoly(ChartMonomial(-m.ez, 0, 0), ExactScalar(1) / c);
}

}  // namespace

ChartPoly substitute(const ChartPoly& p, const std::array<ChartPoly, 3>& images) {
  ChartPoly out;
  std::optional<ChartPoly> inverse_z;
  for (const auto& [m, c] : p.terms()) {
    ChartPoly term(c);
    if (m.ez >= 0) {
      term *= images[0].pow(static_cast<unsigned>(m.ez));
    } else {
      if (!inverse_z) inverse_z = invert_monomial(images[0]);
      term *= inverse_z->pow(static_cast<unsigned>(-m.ez));
    }
    term *= images[1].pow(static_cast<unsigned>(m.eu1));
    term *= images[2].pow(static_cast<unsigned>(m.eu2));
    out += term;
  }
  return out;
}

ChartPoly monomial_transform(const ChartPoly& p, int a, int b, int c) {
  ChartPoly out;
  for (const auto& [m, v] : p.terms()) {
    out.add_term(ChartMonomial(a * m.ez + b * m.eu1 + c * m.eu2, m.eu1, m.eu2), v);
  }
  return out;
}

ChartPoly evaluate_variable(const ChartPoly& p, Var v, const ExactScalar& value) {
  ChartPoly out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    ExactScalar factor(1);
    if (e < 0) {
      if (value.is_zero()) throw std::domain_error("evaluating a negative power at zero");
      for (int i = 0; i < -e; ++i) factor /= value;
    } else {
      for (int i = 0; i < e; ++i) factor *= value;
    }
    ChartMonomial rest = m;
    switch (v) {
      case Var::Base: rest.ez = 0; break;
      case Var::Fiber1: rest.eu1 = 0; break;
      case Var::Fiber2: rest.eu2 = 0; break;
    }
    out.add_term(rest, c * factor);
  }
  return out;
}

std::optional<ExactScalar> proportionality(const ChartPoly& a, const ChartPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("proportionality to the zero polynomial");
  if (a.size() != b.size()) return std::nullopt;
  if (a.is_zero()) return ExactScalar(0);
  const auto& [mb, cb] = *b.terms().begin();
  ExactScalar scale = a.coefficient(mb) / cb;
  if (scale.is_zero()) return std::nullopt;
  if (a != b * scale) return std::nullopt;
  return scale;
}

}  // namespace cybiv
