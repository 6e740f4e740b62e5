#include "qhs/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhs {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
    Rational inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vec> rref_basis(const std::vector<Vec>& rows, int ambient_dim) {
  if (rows.empty()) return {};
  Matrix m(static_cast<int>(rows.size()), ambient_dim);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != ambient_dim)
      throw std::invalid_argument("rref_basis: row dimension mismatch");
    for (int j = 0; j < ambient_dim; ++j) m(i, j) = rows[i][j];
  }
  auto pivots = rref(m);
  std::vector<Vec> out;
  out.reserve(pivots.size());
  for (size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(static_cast<int>(i)));
  return out;
}

namespace {

std::vector<Vec> kernel_from_rref(const Matrix& m, const std::vector<int>& pivots) {
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  // Re-echelonize so the returned basis is the canonical one.
  return rref_basis(basis, m.cols());
}

}  // namespace

LinearSolution solve_linear(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: rhs size");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == a.cols()) {
    // A pivot landed in the b-column: contradiction in that echelon row.
    sol.inconsistent_row = static_cast<int>(pivots.size()) - 1;
    Matrix acopy = a;
    auto p2 = rref(acopy);
    sol.kernel = kernel_from_rref(acopy, p2);
    return sol;
  }
  Vec part(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) part[pivots[r]] = aug(static_cast<int>(r), a.cols());
  sol.particular = std::move(part);
  Matrix acopy(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) acopy(i, j) = aug(i, j);
  // aug is already reduced; reuse its A-part.
  std::vector<int> apivots = pivots;
  sol.kernel = kernel_from_rref(acopy, apivots);
  return sol;
}

std::vector<Vec> kernel(const Matrix& a) {
  Matrix m = a;
  auto pivots = rref(m);
  return kernel_from_rref(m, pivots);
}

int rank(const Matrix& a) {
  Matrix m = a;
  return static_cast<int>(rref(m).size());
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Inertia signature(const Matrix& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("signature: not square");
  int n = sym.rows();
  Matrix m = sym;
  // Congruence diagonalization: at each step find a nonzero diagonal entry
  // (after a symmetric fix-up when only off-diagonal entries remain).
  Inertia sig;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !m(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) {
      // Look for a nonzero off-diagonal pair among the remaining block.
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          if (!m(i, j).is_zero()) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a < 0) break;  // remaining block is zero
      // Row/col operation: e_a += e_b makes the (a,a) entry 2*m(a,b) != 0.
      for (int j = 0; j < n; ++j) m(a, j) += m(b, j);
      for (int i = 0; i < n; ++i) m(i, a) += m(i, b);
      p = a;
    }
    Rational d = m(p, p);
    if (d.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
    // Clear row/column p against the rest.
    for (int i = 0; i < n; ++i) {
      if (i == p || done[i] || m(i, p).is_zero()) continue;
      Rational f = m(i, p) / d;
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(p, j);
      for (int j = 0; j < n; ++j) m(j, i) -= f * m(j, p);
    }
    done[p] = true;
  }
  sig.zero = n - sig.negative - sig.positive;
  return sig;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v) {
  if (span.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Matrix a = Matrix::from_columns(span);
  auto sol = solve_linear(a, v);
  if (!sol.consistent()) return std::nullopt;
  return sol.particular;
}

namespace {

// row -= v * piv, both sorted sparse; zeros are dropped.
void sparse_axpy(SparseRationalRREF::SparseRow& row, const Rational& v,
                 const SparseRationalRREF::SparseRow& piv) {
  SparseRationalRREF::SparseRow merged;
  merged.reserve(row.size() + piv.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      merged.push_back(std::move(row[i]));
      ++i;
    } else if (i >= row.size() || piv[j].first < row[i].first) {
      merged.emplace_back(piv[j].first, -v * piv[j].second);
      ++j;
    } else {
      Rational nv = row[i].second - v * piv[j].second;
      if (!nv.is_zero()) merged.emplace_back(row[i].first, std::move(nv));
      ++i;
      ++j;
    }
  }
  row = std::move(merged);
}

}  // namespace

bool SparseRationalRREF::insert(SparseRow row) {
  if (reduced_) throw std::logic_error("SparseRationalRREF: insert after kernel_basis");
  // Lazy echelon insertion: cancel the leading term until it is pivot-free.
  for (;;) {
    while (!row.empty() && row.front().second.is_zero()) row.erase(row.begin());
    if (row.empty()) return false;
    int c = row.front().first;
    int pr = pivot_of_col_[c];
    if (pr < 0) break;
    sparse_axpy(row, row.front().second, rows_[pr]);
  }
  Rational inv = row.front().second.inverse();
  for (auto& e : row) e.second *= inv;
  pivot_of_col_[row.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

void SparseRationalRREF::back_substitute() {
  if (reduced_) return;
  // Order pivot rows by pivot column and reduce each against the later ones.
  std::vector<int> order;
  for (int c = 0; c < ncols_; ++c)
    if (pivot_of_col_[c] >= 0) order.push_back(pivot_of_col_[c]);
  // Descending pivot-column order: each row is reduced only against rows
  // with a larger pivot column, which are already fully reduced, so every
  // cancellation removes one pivot-column entry and introduces none.
  for (int oi = static_cast<int>(order.size()) - 1; oi >= 0; --oi) {
    SparseRow& r = rows_[order[oi]];
    for (;;) {
      size_t hit = 0;
      for (size_t k = 1; k < r.size(); ++k)
        if (pivot_of_col_[r[k].first] >= 0) {
          hit = k;
          break;
        }
      if (hit == 0) break;
      Rational v = r[hit].second;
      int pr = pivot_of_col_[r[hit].first];
      sparse_axpy(r, v, rows_[pr]);
    }
  }
  reduced_ = true;
}

std::vector<Vec> SparseRationalRREF::kernel_basis() {
  back_substitute();
  std::vector<Vec> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (pivot_of_col_[f] >= 0) continue;
    Vec v(ncols_);
    v[f] = 1;
    for (int c = 0; c < ncols_; ++c) {
      int pr = pivot_of_col_[c];
      if (pr < 0) continue;
      for (const auto& [col, val] : rows_[pr])
        if (col == f) v[c] = -val;
    }
    basis.push_back(std::move(v));
  }
  return rref_basis(basis, ncols_);
}

std::vector<Vec> kernel_sparse(const std::vector<std::vector<std::pair<int, Rational>>>& rows,
                               int ncols) {
  SparseRationalRREF elim(ncols);
  for (const auto& r : rows) elim.insert(r);
  return elim.kernel_basis();
}

LinearSolution solve_sparse(const std::vector<std::vector<std::pair<int, Rational>>>& rows,
                            int nunknowns) {
  SparseRationalRREF elim(nunknowns + 1);
  LinearSolution sol;
  for (const auto& r : rows) {
    elim.insert(r);
    if (elim.pivot_row_of_col(nunknowns) >= 0) {
      sol.inconsistent_row = elim.pivot_row_of_col(nunknowns);
      return sol;
    }
  }
  elim.reduce();
  Vec part(nunknowns);
  std::vector<Vec> kbasis;
  for (int c = 0; c < nunknowns; ++c) {
    int pr = elim.pivot_row_of_col(c);
    if (pr < 0) continue;
    for (const auto& [col, val] : elim.pivot_rows()[pr])
      if (col == nunknowns) part[c] = val;
  }
  for (int f = 0; f < nunknowns; ++f) {
    if (elim.pivot_row_of_col(f) >= 0) continue;
    Vec v(nunknowns);
    v[f] = 1;
    for (int c = 0; c < nunknowns; ++c) {
      int pr = elim.pivot_row_of_col(c);
      if (pr < 0) continue;
      for (const auto& [col, val] : elim.pivot_rows()[pr])
        if (col == f) v[c] = -val;
    }
    kbasis.push_back(std::move(v));
  }
  sol.particular = std::move(part);
  sol.kernel = rref_basis(kbasis, nunknowns);
  return sol;
}

}  // namespace qhs
