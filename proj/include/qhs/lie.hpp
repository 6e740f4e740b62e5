#pragma once

#include <array>
#include <string>
#include <vector>

#include "qhs/matrix.hpp"
#include "qhs/subspace.hpp"

namespace qhs {

/// Finite-dimensional Lie algebra given by exact structure constants over a
/// named basis: [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::vector<std::string> basis_names);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Rational& c(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// Sets [e_i, e_j] (i != j) and the antisymmetric partner.
  void set_bracket(int i, int j, const Vec& value);

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(int i, int j) const;

  /// ad(x) as a matrix: columns [x, e_j].
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(int i) const;

 private:
  Rational& c_mut(int i, int j, int k) {
    return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  int dim_;
  std::vector<std::string> names_;
  std::vector<Rational> c_;
};

struct JacobiReport {
  Rational max_defect;
  std::vector<std::array<int, 3>> violations;  // basis triples i<j<k with nonzero defect
  bool holds() const { return violations.empty(); }
};

/// Checks the Jacobi identity over all i<j<k basis triples. Throws
/// std::invalid_argument if the structure tensor is not antisymmetric.
JacobiReport jacobi_defect(const LieAlgebra& l);

bool is_subalgebra(const Subspace& s, const LieAlgebra& l);
bool is_ideal(const Subspace& s, const LieAlgebra& l);
/// S is an ideal of the subalgebra spanned by `ambient` (all inside l).
bool is_ideal_in(const Subspace& s, const Subspace& ambient, const LieAlgebra& l);

Subspace center(const LieAlgebra& l);
Subspace derived_subalgebra(const LieAlgebra& l);

/// Structure constants read off from a list of matrices that span a matrix
/// Lie algebra (commutators must close into the span; throws otherwise).
LieAlgebra algebra_from_matrices(const std::vector<std::string>& names,
                                 const std::vector<Matrix>& basis);

}  // namespace qhs
