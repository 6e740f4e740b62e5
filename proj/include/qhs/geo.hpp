#pragma once

#include <vector>

#include "qhs/rep.hpp"

namespace qhs::geo {

/// diag(-1 x p, +1 x q), negative entries first.
Matrix minkowski_metric(int p, int q);

/// Lorentzian cross product on R^{1,2}: (u x v)^a = eta^{ab} eps_{bcd} u^c v^d
/// with eps_{012} = +1 and eta = diag(-1,1,1).
Vec lorentz_cross(const Vec& u, const Vec& v);

/// K(u) v = u x v; a Lie algebra isomorphism R^{1,2} -> so(1,2).
Matrix k_iso(const Vec& u);

/// Standard Euclidean cross product in Im H, coordinates (i,j,k).
Vec euclid_cross(const Vec& p, const Vec& q);

// Quaternions in real coordinates (1, i, j, k).
Vec quat_mul(const Vec& p, const Vec& q);
Matrix quat_left(const Vec& q);   // 4x4 matrix of x -> q x
Matrix quat_right(const Vec& q);  // 4x4 matrix of x -> x q

/// The diagonal algebra c with basis C_m = iota(e_m): quaternion-commutator
/// brackets [C1,C2] = 2 C3 (cyclically).
LieAlgebra c_algebra();
/// iota: Im H -> c is the identity on coordinates in the C-basis.
Vec iota(const Vec& x);
/// Abstract sp(1) = Im H with quaternion-commutator brackets (same constants
/// as c_algebra, separate basis names).
LieAlgebra sp1_algebra();
/// so(3) with cross-product brackets [e1,e2] = e3.
LieAlgebra so3_algebra();

/// Action of C_m on H^{n+1}: componentwise q -> e_m q - q e_m.
Matrix c_action(int m, int n);

struct AlgebraRep {
  LieAlgebra algebra;
  Representation rep;
};

/// so(p,q) with its defining representation on R^{p+q}.
AlgebraRep so_pq(int p, int q);

/// Real forms inside gl(4(n+1), R), acting on H^{1,n} with scalars on the
/// left; I, J, K below act by right multiplication and commute with them.
AlgebraRep sp1n(int n);
AlgebraRep su1n(int n);
AlgebraRep u1n(int n);
AlgebraRep u1_scalar(int n);   // i * identity
AlgebraRep sp1_scalar(int n);  // {i,j,k} * identity
/// so(1,n) acting on H^{1,n} = R^{1,n} ⊗ R^4 through the first factor.
AlgebraRep so1n_on_quaternionic(int n);

struct QuaternionicModule {
  int n;
  int dim;  // 4(n+1)
  Matrix I, J, K;
  Matrix G;  // real part of the signature-(1,n) quaternionic Hermitian form
};

QuaternionicModule quaternionic_module(int n);

/// Right multiplications by i, j, k on H^{n+1} (the right sp(1) action).
std::vector<Matrix> right_sp1_matrices(int n);

}  // namespace qhs::geo
