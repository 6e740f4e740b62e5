#include "qhs/lie.hpp"

#include <set>
#include <stdexcept>

namespace qhs {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names)
    : dim_(static_cast<int>(basis_names.size())),
      names_(std::move(basis_names)),
      c_(static_cast<size_t>(dim_) * dim_ * dim_) {
  std::set<std::string> uniq(names_.begin(), names_.end());
  if (static_cast<int>(uniq.size()) != dim_)
    throw std::invalid_argument("LieAlgebra: basis names not pairwise distinct");
}

void LieAlgebra::set_bracket(int i, int j, const Vec& value) {
  if (i == j) throw std::invalid_argument("set_bracket: diagonal bracket is forced to zero");
  if (static_cast<int>(value.size()) != dim_)
    throw std::invalid_argument("set_bracket: value dimension mismatch");
  for (int k = 0; k < dim_; ++k) {
    c_mut(i, j, k) = value[k];
    c_mut(j, i, k) = -value[k];
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Rational f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Rational& cc = c(i, j, k);
        if (!cc.is_zero()) r[k] += f * cc;
      }
    }
  }
  return r;
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec r(dim_);
  for (int k = 0; k < dim_; ++k) r[k] = c(i, j, k);
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec ej(dim_);
    ej[j] = 1;
    Vec col = bracket(x, ej);
    for (int i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(int i) const {
  Vec x(dim_);
  x[i] = 1;
  return ad(x);
}

JacobiReport jacobi_defect(const LieAlgebra& l) {
  int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (l.c(i, j, k) != -l.c(j, i, k))
          throw std::invalid_argument("jacobi_defect: structure tensor is not antisymmetric");
  JacobiReport rep;
  rep.max_defect = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec jac = l.bracket(l.bracket_basis(i, j), basis_vec(n, k));
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        Vec t2 = l.bracket(l.bracket_basis(j, k), basis_vec(n, i));
        Vec t3 = l.bracket(l.bracket_basis(k, i), basis_vec(n, j));
        Vec sum = jac + t2 + t3;
        Rational m = max_abs(sum);
        if (!m.is_zero()) {
          rep.violations.push_back({i, j, k});
          if (m > rep.max_defect) rep.max_defect = m;
        }
      }
  return rep;
}

bool is_subalgebra(const Subspace& s, const LieAlgebra& l) {
  if (s.ambient_dim() != l.dim()) throw std::invalid_argument("is_subalgebra: ambient mismatch");
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (!s.contains(l.bracket(s.basis()[i], s.basis()[j]))) return false;
  return true;
}

bool is_ideal(const Subspace& s, const LieAlgebra& l) {
  if (s.ambient_dim() != l.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < l.dim(); ++j) {
      Vec ej(l.dim());
      ej[j] = 1;
      if (!s.contains(l.bracket(s.basis()[i], ej))) return false;
    }
  return true;
}

bool is_ideal_in(const Subspace& s, const Subspace& ambient, const LieAlgebra& l) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < ambient.dim(); ++j)
      if (!s.contains(l.bracket(s.basis()[i], ambient.basis()[j]))) return false;
  return true;
}

Subspace center(const LieAlgebra& l) {
  // x central iff [x, e_j] = 0 for all j: sum_i x_i c(i,j,k) = 0.
  int n = l.dim();
  Matrix m(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec br = l.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) m(j * n + k, i) = br[k];
    }
  return Subspace::span(n, kernel(m));
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  std::vector<Vec> gens;
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j) gens.push_back(l.bracket_basis(i, j));
  return Subspace::span(l.dim(), gens);
}

LieAlgebra algebra_from_matrices(const std::vector<std::string>& names,
                                 const std::vector<Matrix>& basis) {
  if (names.size() != basis.size())
    throw std::invalid_argument("algebra_from_matrices: names/basis size mismatch");
  int n = static_cast<int>(basis.size());
  std::vector<Vec> flat;
  for (const auto& m : basis) {
    Vec v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    flat.push_back(std::move(v));
  }
  if (!flat.empty() &&
      static_cast<int>(rref_basis(flat, static_cast<int>(flat[0].size())).size()) != n)
    throw std::invalid_argument("algebra_from_matrices: basis matrices are dependent");
  LieAlgebra l(names);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix comm = Matrix::commutator(basis[i], basis[j]);
      Vec v;
      v.reserve(flat[0].size());
      for (int r = 0; r < comm.rows(); ++r)
        for (int c = 0; c < comm.cols(); ++c) v.push_back(comm(r, c));
      auto coords = coordinates_in_span(flat, v);
      if (!coords)
        throw std::invalid_argument("algebra_from_matrices: span is not closed under commutators");
      l.set_bracket(i, j, *coords);
    }
  return l;
}

}  // namespace qhs
