#include "qhs/tensors.hpp"

#include <map>
#include <stdexcept>

#include "qhs/linalg.hpp"
#include "qhs/modp.hpp"

namespace qhs {

int alt_pair_index(int p, int q, int dim) {
  // (p,q), p < q, ordered lexicographically.
  return p * (2 * dim - p - 1) / 2 + (q - p - 1);
}

int alt_pair_count(int dim) { return dim * (dim - 1) / 2; }

namespace {

using SparseRow = SparseRationalRREF::SparseRow;

SparseRow row_from_map(const std::map<int, Rational>& m) {
  SparseRow r;
  r.reserve(m.size());
  for (const auto& [c, v] : m)
    if (!v.is_zero()) r.emplace_back(c, v);
  return r;
}

// Constraint rows of one generator on ⊗^3 V*:
//   sum_s alpha(e_i1, .., X e_is, .., e_i3) = 0 for every multi-index.
std::vector<SparseRow> cube_rows(const Matrix& x, int d) {
  std::vector<SparseRow> rows;
  rows.reserve(static_cast<size_t>(d) * d * d);
  // Sparse columns of X: X e_i = sum_j X(j,i) e_j.
  std::vector<std::vector<std::pair<int, Rational>>> xcols(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!x(j, i).is_zero()) xcols[i].emplace_back(j, x(j, i));
  for (int i1 = 0; i1 < d; ++i1)
    for (int i2 = 0; i2 < d; ++i2)
      for (int i3 = 0; i3 < d; ++i3) {
        std::map<int, Rational> m;
        for (const auto& [j, v] : xcols[i1]) m[(j * d + i2) * d + i3] += v;
        for (const auto& [j, v] : xcols[i2]) m[(i1 * d + j) * d + i3] += v;
        for (const auto& [j, v] : xcols[i3]) m[(i1 * d + i2) * d + j] += v;
        rows.push_back(row_from_map(m));
      }
  return rows;
}

// Constraint rows of one generator pair (X on V, Y on W) on Λ²V* ⊗ W:
//   Y beta(e_p,e_q) - beta(X e_p, e_q) - beta(e_p, X e_q) = 0.
std::vector<SparseRow> alt_map_rows(const Matrix& x, const Matrix& y, int dv, int dw) {
  std::vector<SparseRow> rows;
  rows.reserve(static_cast<size_t>(alt_pair_count(dv)) * dw);
  std::vector<std::vector<std::pair<int, Rational>>> xcols(dv);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dv; ++j)
      if (!x(j, i).is_zero()) xcols[i].emplace_back(j, x(j, i));
  auto beta_col = [&](int u, int v, int c) -> std::pair<int, int> {
    // Antisymmetric index: returns (column, sign); sign 0 when u == v.
    if (u == v) return {-1, 0};
    if (u < v) return {alt_pair_index(u, v, dv) * dw + c, 1};
    return {alt_pair_index(v, u, dv) * dw + c, -1};
  };
  for (int p = 0; p < dv; ++p)
    for (int q = p + 1; q < dv; ++q)
      for (int c = 0; c < dw; ++c) {
        std::map<int, Rational> m;
        for (int e = 0; e < dw; ++e)
          if (!y(c, e).is_zero()) m[alt_pair_index(p, q, dv) * dw + e] += y(c, e);
        for (const auto& [j, v] : xcols[p]) {
          auto [col, sgn] = beta_col(j, q, c);
          if (sgn) m[col] += Rational(-sgn) * v;
        }
        for (const auto& [j, v] : xcols[q]) {
          auto [col, sgn] = beta_col(p, j, c);
          if (sgn) m[col] += Rational(-sgn) * v;
        }
        rows.push_back(row_from_map(m));
      }
  return rows;
}

// Constraint rows of one generator on S²V*: g(X e_p, e_q) + g(e_p, X e_q) = 0.
std::vector<SparseRow> sym_rows(const Matrix& x, int d) {
  auto sym_index = [d](int p, int q) {
    if (p > q) std::swap(p, q);
    return p * (2 * d - p + 1) / 2 + (q - p);
  };
  std::vector<SparseRow> rows;
  for (int p = 0; p < d; ++p)
    for (int q = p; q < d; ++q) {
      std::map<int, Rational> m;
      for (int j = 0; j < d; ++j) {
        if (!x(j, p).is_zero()) m[sym_index(j, q)] += x(j, p);
        if (!x(j, q).is_zero()) m[sym_index(p, j)] += x(j, q);
      }
      rows.push_back(row_from_map(m));
    }
  return rows;
}

TensorSolveResult solve_blocks(std::vector<std::vector<SparseRow>> blocks, int cols,
                               const TensorSolveOptions& opt) {
  TensorSolveResult res{0, {}, false, cols};
  if (cols > opt.max_columns && !opt.force_exact) {
    if (!opt.modp_certificate)
      throw std::invalid_argument(
          "invariant_tensors: size budget exceeded (" + std::to_string(cols) +
          " unknowns); enable the mod-p certificate or force the exact path");
    for (modp::u32 p : modp::kPrimes) {
      std::vector<std::vector<modp::SparseRow>> mblocks;
      bool bad_prime = false;
      for (const auto& block : blocks) {
        std::vector<modp::SparseRow> mb;
        mb.reserve(block.size());
        for (const auto& row : block) {
          modp::SparseRow mr;
          mr.entries.reserve(row.size());
          try {
            for (const auto& [c, v] : row) {
              modp::u32 mv = v.mod_p(p);
              if (mv) mr.entries.emplace_back(c, mv);
            }
          } catch (const std::domain_error&) {
            bad_prime = true;
            break;
          }
          mb.push_back(std::move(mr));
        }
        if (bad_prime) break;
        mblocks.push_back(std::move(mb));
      }
      if (bad_prime) continue;
      if (modp::zero_kernel_certificate(mblocks, cols, p, opt.seed)) {
        res.dimension = 0;
        res.certificate_only = true;
        return res;
      }
      throw std::runtime_error(
          "invariant_tensors: mod-p kernel is nonzero; the certificate only proves "
          "dimension zero — run the exact path for a positive-dimensional space");
    }
    throw std::runtime_error("invariant_tensors: no usable prime for the mod-p certificate");
  }
  SparseRationalRREF elim(cols);
  for (const auto& block : blocks)
    for (const auto& row : block) elim.insert(row);
  res.basis = elim.kernel_basis();
  res.dimension = static_cast<int>(res.basis.size());
  return res;
}

}  // namespace

TensorSolveResult invariant_tensors(const Representation& r, TensorShape shape,
                                    const TensorSolveOptions& opt) {
  int d = r.module_dim;
  std::vector<std::vector<SparseRow>> blocks;
  int cols = 0;
  switch (shape) {
    case TensorShape::TensorCubeDual:
      cols = d * d * d;
      for (const auto& x : r.action) blocks.push_back(cube_rows(x, d));
      break;
    case TensorShape::AltSquareDualTimesV:
      cols = alt_pair_count(d) * d;
      for (const auto& x : r.action) blocks.push_back(alt_map_rows(x, x, d, d));
      break;
    case TensorShape::SymSquareDual:
      cols = d * (d + 1) / 2;
      for (const auto& x : r.action) blocks.push_back(sym_rows(x, d));
      break;
  }
  return solve_blocks(std::move(blocks), cols, opt);
}

TensorSolveResult equivariant_alternating_maps(const Representation& source,
                                               const Representation& target,
                                               const TensorSolveOptions& opt) {
  if (source.algebra.dim() != target.algebra.dim())
    throw std::invalid_argument("equivariant_alternating_maps: algebras differ");
  int dv = source.module_dim, dw = target.module_dim;
  std::vector<std::vector<SparseRow>> blocks;
  for (int g = 0; g < source.algebra.dim(); ++g)
    blocks.push_back(alt_map_rows(source.action[g], target.action[g], dv, dw));
  return solve_blocks(std::move(blocks), alt_pair_count(dv) * dw, opt);
}

}  // namespace qhs
