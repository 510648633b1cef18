#include "cybiv/schouten.hpp"

#include <map>
#include <stdexcept>

namespace cybiv {

namespace {

constexpr std::array<std::array<int, 2>, 3> kPairs{{{1, 2}, {2, 0}, {0, 1}}};

ChartPoly d(const ChartPoly& f, int i) { return partial_derivative(f, static_cast<Var>(i)); }

// Sign of d_a ^ d_b ^ d_c relative to d_0 ^ d_1 ^ d_2.
int wedge_sign(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  int inversions = (a > b) + (a > c) + (b > c);
  return inversions % 2 == 0 ? 1 : -1;
}

ChartPoly x(int i) { return ChartPoly::variable(static_cast<Var>(i)); }

}  // namespace

ChartPoly TrivectorDensity::v_coefficient() const {
  return express_in_v(spec, jacobian_determinant(spec, Direction::UtoV) * coeff);
}

ChartPoly self_bracket_density(const CoefficientTriple& q) {
  return q[1] * d(q[2], 0) - q[2] * d(q[1], 0) + q[2] * d(q[0], 1) - q[0] * d(q[2], 1) + q[0] * d(q[1], 2) -
         q[1] * d(q[0], 2);
}

TrivectorDensity self_bracket(const BivectorField& q) { return {q.spec, self_bracket_density(q.q)}; }

TrivectorDensity sn_bracket(const BivectorField& q, const BivectorField& p) {
  if (!(q.spec == p.spec)) throw std::invalid_argument("bracket of bivectors on different threefolds");
  ChartPoly out;
  // [f dj^dk, g dm^dn] = f g_j dm^dk^dn - g f_m dj^dk^dn + g f_n dj^dk^dm - f g_k dm^dj^dn
  for (int a = 0; a < 3; ++a) {
    const ChartPoly& f = q.q[a];
    if (f.is_zero()) continue;
    const auto [j, k] = kPairs[a];
    for (int b = 0; b < 3; ++b) {
      const ChartPoly& g = p.q[b];
      if (g.is_zero()) continue;
      const auto [m, n] = kPairs[b];
      out += f * d(g, j) * ExactScalar(wedge_sign(m, k, n));
      out -= g * d(f, m) * ExactScalar(wedge_sign(j, k, n));
      out += g * d(f, n) * ExactScalar(wedge_sign(j, k, m));
      out -= f * d(g, k) * ExactScalar(wedge_sign(m, j, n));
    }
  }
  return {q.spec, out};
}

bool is_integrable(const BivectorField& q) { return self_bracket(q).coeff.is_zero(); }

VectorField function_bracket(const ChartPoly& f, const BivectorField& q) {
  // q = q0 d1^d2 + q1 d2^d0 + q2 d0^d1 and [f, di^dj] = f_i dj - f_j di.
  VectorField out{q.spec, {}};
  out.x[0] = q.q[1] * d(f, 2) - q.q[2] * d(f, 1);
  out.x[1] = q.q[2] * d(f, 0) - q.q[0] * d(f, 2);
  out.x[2] = q.q[0] * d(f, 1) - q.q[1] * d(f, 0);
  return out;
}

const std::array<BivectorField, 4>& w11_generators() {
  static const std::array<BivectorField, 4> gens = [] {
    const ThreefoldSpec w{1, 1};
    return std::array<BivectorField, 4>{
        BivectorField(w, {ChartPoly(), ChartPoly(1), ChartPoly()}, "e1"),
        BivectorField(w, {ChartPoly(), ChartPoly(), ChartPoly(1)}, "e2"),
        BivectorField(w, {x(1), x(0), ChartPoly()}, "e3"),
        BivectorField(w, {x(2), ChartPoly(), x(0)}, "e4"),
    };
  }();
  return gens;
}

BivectorField w11_combination(const CoefficientQuadruple& p) {
  const auto& e = w11_generators();
  BivectorField sum(e[0].spec, {});
  for (int h = 0; h < 4; ++h) sum += p[h] * e[h];
  return sum;
}

ChartPoly FirstOrderOperator::apply(const ChartPoly& f) const {
  ChartPoly out;
  for (int k = 0; k < 3; ++k) {
    if (!coeff[k].is_zero()) out += coeff[k] * d(f, k);
  }
  return out;
}

const std::array<std::array<FirstOrderOperator, 4>, 4>& w11_operator_matrix() {
  static const auto q = [] {
    std::array<std::array<FirstOrderOperator, 4>, 4> m{};
    const ChartPoly z = x(0), u1 = x(1), u2 = x(2);
    auto op = [](ChartPoly a, ChartPoly b, ChartPoly c) { return FirstOrderOperator{{std::move(a), std::move(b), std::move(c)}}; };
    m[0][1] = op(1, 0, 0);
    m[0][2] = op(0, 0, -u1);
    m[0][3] = op(z, 0, -u2);
    m[1][2] = op(-z, u1, 0);
    m[1][3] = op(0, u2, 0);
    m[2][3] = op(z * z, -(z * u1), -(z * u2));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < i; ++j) {
        for (int k = 0; k < 3; ++k) m[i][j].coeff[k] = -m[j][i].coeff[k];
      }
    }
    return m;
  }();
  return q;
}

namespace {

void require_global_w11(const CoefficientQuadruple& p) {
  const ThreefoldSpec w{1, 1};
  for (int h = 0; h < 4; ++h) {
    if (auto m = first_nonglobal_monomial(w, p[h])) {
      throw std::invalid_argument("coefficient p" + std::to_string(h + 1) + " is not a global function on W(1,1)");
    }
  }
}

ChartPoly bilinear(const CoefficientQuadruple& a, const CoefficientQuadruple& b) {
  const auto& q = w11_operator_matrix();
  ChartPoly out;
  for (int i = 0; i < 4; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (i == j || b[j].is_zero()) continue;
      out += a[i] * q[i][j].apply(b[j]);
    }
  }
  return out;
}

}  // namespace

ChartPoly b_operator(const CoefficientQuadruple& p) {
  require_global_w11(p);
  return bilinear(p, p);
}

LinearizedB::LinearizedB(CoefficientQuadruple p) : p_(std::move(p)) {
  if (!b_operator(p_).is_zero()) throw std::invalid_argument("linearization point is not a solution of B(p) = 0");
}

ChartPoly LinearizedB::apply(const CoefficientQuadruple& dp) const { return bilinear(dp, p_) + bilinear(p_, dp); }

LinearizedB::Truncation LinearizedB::truncate(int max_fiber_degree) const {
  Truncation t;
  const auto monos = global_function_monomials(ThreefoldSpec{1, 1}, max_fiber_degree);
  std::map<ChartMonomial, size_t> row_index;
  std::vector<SparseVector> columns;
  for (int h = 0; h < 4; ++h) {
    for (const auto& m : monos) {
      CoefficientQuadruple dp;
      dp[h] = ChartPoly(m);
      ChartPoly image = apply(dp);
      SparseVector col;
      for (const auto& [om, c] : image.terms()) {
        auto [it, inserted] = row_index.try_emplace(om, row_index.size());
        col[it->second] = c;
      }
      t.columns.emplace_back(h, m);
      columns.push_back(std::move(col));
    }
  }
  t.rows.resize(row_index.size());
  for (const auto& [m, i] : row_index) t.rows[i] = m;
  t.matrix.assign(row_index.size(), {});
  for (size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [i, c] : columns[j]) t.matrix[i][j] = c;
  }
  return t;
}

std::vector<CoefficientQuadruple> LinearizedB::kernel(int max_fiber_degree) const {
  Truncation t = truncate(max_fiber_degree);
  std::vector<CoefficientQuadruple> out;
  for (const auto& v : sparse_kernel_basis(t.matrix, t.columns.size())) {
    CoefficientQuadruple dp;
    for (const auto& [j, c] : v) dp[t.columns[j].first].add_term(t.columns[j].second, c);
    out.push_back(std::move(dp));
  }
  return out;
}

}  // namespace cybiv
