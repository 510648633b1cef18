#include "cybiv/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cybiv {

namespace {

using IntRow = std::vector<mpz_class>;

IntRow to_integer_row(const DenseVector& row) {
  mpz_class l = 1;
  for (const auto& x : row) {
    if (!x.is_zero()) l = lcm(l, x.denominator());
  }
  IntRow out(row.size());
  for (size_t j = 0; j < row.size(); ++j) {
    mpq_class scaled = row[j].value() * l;
    out[j] = scaled.get_num();
  }
  return out;
}

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) g = gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

// target <- pivot_value * target - factor * pivot_row, then primitive.
void eliminate(IntRow& target, const IntRow& pivot_row, size_t col) {
  if (target[col] == 0) return;
  mpz_class a = pivot_row[col];
  mpz_class b = target[col];
  mpz_class g = gcd(a, b);
  a /= g;
  b /= g;
  for (size_t j = 0; j < target.size(); ++j) {
    target[j] = a * target[j] - b * pivot_row[j];
  }
  make_primitive(target);
}

}  // namespace

EchelonForm rref(const DenseMatrix& m, size_t cols) {
  std::vector<IntRow> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    if (r.size() != cols) throw std::invalid_argument("row length mismatch in rref");
    rows.push_back(to_integer_row(r));
    make_primitive(rows.back());
  }
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][col] != 0 && (sel == rows.size() || abs(rows[i][col]) < abs(rows[sel][col]))) sel = i;
    }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != rank) eliminate(rows[i], rows[rank], col);
    }
    pivots.push_back(col);
    ++rank;
  }
  EchelonForm out;
  out.cols = cols;
  out.pivots = pivots;
  for (size_t i = 0; i < rank; ++i) {
    DenseVector r(cols);
    const mpz_class& p = rows[i][pivots[i]];
    for (size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != 0) r[j] = ExactScalar(mpq_class(rows[i][j], p));
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

size_t rank(const DenseMatrix& m, size_t cols) { return rref(m, cols).rows.size(); }

DenseMatrix kernel_basis(const DenseMatrix& m, size_t cols) {
  EchelonForm e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  DenseMatrix basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    DenseVector v(cols);
    v[f] = ExactScalar(1);
    for (size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<SparseVector> sparse_kernel_basis(const std::vector<SparseVector>& rows, size_t cols) {
  std::vector<size_t> parent(cols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : rows) {
    if (r.empty()) continue;
    size_t first = find(r.begin()->first);
    for (const auto& [c, v] : r) {
      if (c >= cols) throw std::invalid_argument("column index out of range");
      size_t root = find(c);
      if (root != first) parent[root] = first;
    }
  }
  std::map<size_t, std::vector<size_t>> block_cols;
  for (size_t c = 0; c < cols; ++c) block_cols[find(c)].push_back(c);
  std::map<size_t, std::vector<const SparseVector*>> block_rows;
  for (const auto& r : rows) {
    if (!r.empty()) block_rows[find(r.begin()->first)].push_back(&r);
  }
  std::map<size_t, SparseVector> by_free_column;
  for (const auto& [root, bcols] : block_cols) {
    std::map<size_t, size_t> local;
    for (size_t i = 0; i < bcols.size(); ++i) local[bcols[i]] = i;
    DenseMatrix dense;
    for (const SparseVector* r : block_rows[root]) {
      DenseVector d(bcols.size());
      for (const auto& [c, v] : *r) d[local[c]] = v;
      dense.push_back(std::move(d));
    }
    DenseMatrix k = kernel_basis(dense, bcols.size());
    for (const auto& v : k) {
      SparseVector s;
      size_t free_col = cols;
      for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        s[bcols[i]] = v[i];
      }
      // The free column is the unique column whose entry is 1 and that is not a pivot;
      // in kernel_basis order it is the largest column with nonzero entry.
      free_col = s.rbegin()->first;
      by_free_column[free_col] = std::move(s);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(by_free_column.size());
  for (auto& [c, v] : by_free_column) out.push_back(std::move(v));
  return out;
}

std::optional<DenseVector> solve_linear(const DenseMatrix& m, const DenseVector& b, size_t cols) {
  if (b.size() != m.size()) throw std::invalid_argument("right-hand side length mismatch");
  DenseMatrix aug;
  aug.reserve(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    DenseVector r = m[i];
    r.push_back(b[i]);
    aug.push_back(std::move(r));
  }
  EchelonForm e = rref(aug, cols + 1);
  DenseVector x(cols);
  for (size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

DenseVector SpanTracker::reduce(DenseVector v) const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    const ExactScalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < cols_; ++j) {
      if (!basis_[i][j].is_zero()) v[j] -= f * basis_[i][j];
    }
  }
  return v;
}

bool SpanTracker::contains(const DenseVector& v) const {
  DenseVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

bool SpanTracker::add(const DenseVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch in span");
  DenseVector r = reduce(v);
  size_t p = cols_;
  for (size_t j = 0; j < cols_; ++j) {
    if (!r[j].is_zero()) {
      p = j;
      break;
    }
  }
  if (p == cols_) return false;
  ExactScalar inv = ExactScalar(1) / r[p];
  for (auto& x : r) x *= inv;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const ExactScalar f = basis_[i][p];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < cols_; ++j) basis_[i][j] -= f * r[j];
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace cybiv
