#pragma once

#include <cstdint>
#include <vector>

#include "qhs/lie.hpp"

namespace qhs {

/// Direct sum g1 ⊕ g2 on the concatenated basis, with block projections.
struct SumAlgebra {
  LieAlgebra g1, g2, sum;
  int dim1() const { return g1.dim(); }
  int dim2() const { return g2.dim(); }

  Vec embed1(const Vec& x) const;
  Vec embed2(const Vec& y) const;
  Vec project1(const Vec& v) const;
  Vec project2(const Vec& v) const;
};

SumAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

/// The quintuple datum classifying a subalgebra of a direct sum: projections
/// A, B, the ideal slices A0, B0, and the quotient isomorphism theta in the
/// echelon-complement charts of A/A0 and B/B0.
struct GoursatQuintuple {
  Subspace A, A0;  // subspaces of g1
  Subspace B, B0;  // subspaces of g2
  std::vector<Vec> chartA;  // lifts of the A/A0 chart directions (in g1)
  std::vector<Vec> chartB;  // lifts of the B/B0 chart directions (in g2)
  Matrix theta;             // chart coordinates of A/A0 -> B/B0
};

/// Chart of a quotient A/A0: the A-basis directions away from the pivots of
/// A0 written in A-coordinates ("first non-pivot directions").
std::vector<Vec> quotient_chart(const Subspace& a, const Subspace& a0);

/// Coordinates of the class of x in A/A0 in the given chart (x must lie in
/// span(lifts) + A0, and the lifts must be independent modulo A0).
Vec quotient_class(const Subspace& a0, const std::vector<Vec>& lifts, const Vec& x);

/// Extraction: A = pi1(h), B = pi2(h), A0 = ker(pi2|h), B0 = ker(pi1|h),
/// theta from completion of chart lifts inside h. Throws when h is not a
/// subalgebra, and verifies (rather than assumes) that theta is well
/// defined.
GoursatQuintuple extract(const SumAlgebra& s, const Subspace& h);

/// Reconstruction: the subalgebra {X + Y : theta(class X) = class Y}.
/// Validates the quintuple invariants first; throws naming the failed
/// condition.
Subspace reconstruct(const SumAlgebra& s, const GoursatQuintuple& q);

/// Validates subalgebra/ideal/iso invariants of a quintuple; throws
/// std::invalid_argument naming the first failed condition.
void validate(const SumAlgebra& s, const GoursatQuintuple& q);

/// Bracket-closure of random integer seed vectors; deterministic per seed.
Subspace random_subalgebra(const SumAlgebra& s, int seedcount, std::uint64_t rng_seed);

}  // namespace qhs
