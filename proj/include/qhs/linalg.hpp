#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhs/matrix.hpp"

namespace qhs {

/// Exact affine solution set of A x = b.  `particular` is absent when the
/// system is inconsistent; `kernel` is a canonical (reduced-echelon) basis
/// of the homogeneous solutions.
struct LinearSolution {
  std::optional<Vec> particular;
  std::vector<Vec> kernel;
  /// Row index of a residual contradiction when inconsistent.
  std::optional<int> inconsistent_row;

  bool consistent() const { return particular.has_value(); }
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Matrix& m);

/// Canonicalizes a list of row vectors: RREF basis of their span.
std::vector<Vec> rref_basis(const std::vector<Vec>& rows, int ambient_dim);

LinearSolution solve_linear(const Matrix& a, const Vec& b);

/// Canonical basis of the null space of a; empty iff a is injective.
std::vector<Vec> kernel(const Matrix& a);

int rank(const Matrix& a);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Matrix& a);

/// (negative, zero, positive) inertia of a symmetric matrix, computed by
/// exact congruence diagonalization.
struct Inertia {
  int negative = 0, zero = 0, positive = 0;
};
Inertia signature(const Matrix& sym);

/// Coordinates of v in the span of the given vectors, if it lies there.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v);

class SparseRationalRREF;

/// Kernel of a sparse homogeneous system (rows over ncols unknowns).
std::vector<Vec> kernel_sparse(const std::vector<std::vector<std::pair<int, Rational>>>& rows,
                               int ncols);

/// Sparse affine solve: each row carries its right-hand side at column
/// index `nunknowns`.
LinearSolution solve_sparse(const std::vector<std::vector<std::pair<int, Rational>>>& rows,
                            int nunknowns);

/// Sparse exact Gaussian elimination: rows are inserted one at a time and
/// reduced against the pivot rows found so far.  Intended for the large,
/// very sparse constraint systems produced by tensor-equivariance
/// conditions, where dense elimination would be wasteful.
class SparseRationalRREF {
 public:
  using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

  explicit SparseRationalRREF(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

  /// Returns true when the row contributed a new pivot.
  bool insert(SparseRow row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  /// Canonical reduced-echelon kernel basis of the inserted row system.
  std::vector<Vec> kernel_basis();

  /// Fully reduces the pivot rows (idempotent).
  void reduce() { back_substitute(); }
  const std::vector<SparseRow>& pivot_rows() const { return rows_; }
  int pivot_row_of_col(int c) const { return pivot_of_col_[c]; }

 private:
  void back_substitute();

  int ncols_;
  std::vector<SparseRow> rows_;       // normalized, leading coefficient 1
  std::vector<int> pivot_of_col_;     // column -> row index, or -1
  bool reduced_ = false;
};

}  // namespace qhs
