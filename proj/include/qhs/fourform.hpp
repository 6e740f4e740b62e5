#pragma once

#include <array>
#include <map>

#include "qhs/geo.hpp"

namespace qhs {

/// Alternating 4-form stored sparsely on strictly increasing index tuples.
struct FourForm {
  int dim = 0;
  std::map<std::array<int, 4>, Rational> coeff;

  /// Signed evaluation on arbitrary (not necessarily increasing) indices.
  Rational eval(int a, int b, int c, int d) const;
};

/// omega_A(x, y) = G(Ax, y) as an antisymmetric matrix A^T G.
Matrix two_form(const Matrix& a, const Matrix& g);

/// Omega = sum over A in {I,J,K} of omega_A ∧ omega_A, where the wedge of
/// two 2-forms is summed over the three (2,2)-shuffle classes with no 1/k!
/// factor: (α∧β)(x1..x4) = α12 β34 − α13 β24 + α14 β23 + (α <-> β).
FourForm fundamental_4form(const geo::QuaternionicModule& q);

/// Max over increasing tuples of |sum_slot Omega(.., X e_slot, ..)|.
Rational four_form_invariance_defect(const FourForm& omega, const Matrix& x);

}  // namespace qhs
