#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhs/lie.hpp"
#include "qhs/subspace.hpp"

namespace qhs {

/// A Lie algebra together with one exact action matrix per basis element.
struct Representation {
  LieAlgebra algebra;
  int module_dim;
  std::vector<Matrix> action;

  Matrix act(const Vec& x) const;
};

/// Max-norm of rho([x,y]) - [rho(x),rho(y)] over all basis pairs; zero iff
/// the matrices define a genuine representation.
Rational rep_defect(const Representation& r);

/// Canonical basis of all matrices commuting with every action matrix and
/// every extra matrix.
std::vector<Matrix> commutant(const Representation& r, const std::vector<Matrix>& extra = {});

/// Canonical basis of intertwiners phi with phi rho1(e_i) = rho2(e_i) phi.
/// The two representations must be of the same algebra (same basis).
std::vector<Matrix> equivariant_homs(const Representation& r1, const Representation& r2);

/// Smallest invariant subspace containing the seeds.
Subspace spin_up(const Representation& r, const std::vector<Vec>& seeds);

/// Restriction of the action to an invariant subspace, in its basis
/// coordinates. Throws if the subspace is not invariant.
Representation restrict_to(const Representation& r, const Subspace& s);

struct ModuleDecomposition {
  std::vector<Subspace> pieces;
  bool multiplicity_free;
};

/// Splits the module into invariant pieces by spectral splitting along
/// rational eigenvalues of commutant elements. Throws std::runtime_error
/// ("non-rational splitting") when a reducible piece admits no rational
/// split by any commutant basis element or pairwise sum.
ModuleDecomposition decompose(const Representation& r);

bool quaternionic_stable(const Subspace& s, const Matrix& i, const Matrix& j, const Matrix& k);

struct IrreducibilityReport {
  enum class Verdict { HIrreducible, NotHIrreducible, Undecided };
  Verdict verdict;
  std::optional<Subspace> witness;  // a proper nonzero invariant I,J,K-stable subspace
  std::string note;
  std::vector<int> piece_dims;
  bool multiplicity_free = false;
};

/// Decides quaternionic irreducibility for multiplicity-free modules by
/// enumerating all sums of pieces; anything else is reported undecided.
IrreducibilityReport h_irreducibility_report(const Representation& r, const Matrix& i,
                                             const Matrix& j, const Matrix& k);

/// One ad(H)-invariant complement of the subalgebra H together with the
/// affine family of all of them, parametrized by intertwiners from the
/// base complement into H.
struct ComplementFamily {
  Subspace base;                // the base complement
  Matrix sigma0;                // ambient_dim x quot_dim equivariant splitting
  std::vector<Matrix> deltas;   // kernel directions, columns lie in H
  std::vector<Matrix> phis;     // the same directions in H-coordinates (h_dim x quot_dim)
  std::vector<int> chart_cols;  // quotient chart: ambient coordinates not pivotal for H
};

std::optional<ComplementFamily> invariant_complements(const LieAlgebra& l, const Subspace& h);

}  // namespace qhs
