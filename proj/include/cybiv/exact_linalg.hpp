#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cybiv/exact_scalar.hpp"

namespace cybiv {

using DenseVector = std::vector<ExactScalar>;
using DenseMatrix = std::vector<DenseVector>;
/// Sparse vector keyed by column index; absent entries are zero.
using SparseVector = std::map<size_t, ExactScalar>;

/// Reduced row echelon form of a dense matrix, computed by fraction-free
/// elimination over the integers (rows are cleared of denominators and kept
/// primitive) and normalized to rational pivots of 1 at the end.
struct EchelonForm {
  DenseMatrix rows;               ///< nonzero rows of the RREF
  std::vector<size_t> pivots;     ///< pivot column of each row
  size_t cols = 0;
};

EchelonForm rref(const DenseMatrix& m, size_t cols);
size_t rank(const DenseMatrix& m, size_t cols);

/// Basis of the right kernel {x : m x = 0}.  One vector per free column, with
/// a 1 in that column and 0 in the other free columns; ordered by free column.
DenseMatrix kernel_basis(const DenseMatrix& m, size_t cols);

/// Kernel basis of a sparse system.  Columns are split into connected blocks
/// (columns sharing a row) which are eliminated independently; the result
/// matches kernel_basis on the dense matrix.
std::vector<SparseVector> sparse_kernel_basis(const std::vector<SparseVector>& rows, size_t cols);

/// Particular solution of m x = b with all free variables set to zero.
std::optional<DenseVector> solve_linear(const DenseMatrix& m, const DenseVector& b, size_t cols);

/// Incrementally maintained span of vectors of fixed length.
class SpanTracker {
 public:
  explicit SpanTracker(size_t cols) : cols_(cols) {}
  /// Adds v if it is independent of the current span; returns whether it was added.
  bool add(const DenseVector& v);
  [[nodiscard]] bool contains(const DenseVector& v) const;
  [[nodiscard]] size_t dimension() const { return basis_.size(); }

 private:
  [[nodiscard]] DenseVector reduce(DenseVector v) const;
  size_t cols_;
  std::vector<DenseVector> basis_;
  std::vector<size_t> pivots_;
};

}  // namespace cybiv
