#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qhs/poly.hpp"
#include "qhs/rep.hpp"
#include "qhs/tensors.hpp"

namespace qhs::family {

// The 18-dimensional bracket family on so(1,2) ⊕ c ⊕ R^{1,2}⊗H.
// Frozen basis order: L0,L1,L2 (the image of the Lorentzian cross product
// under K), C1,C2,C3 (the diagonal algebra), then e_u⊗q for u in {0,1,2}
// and q in {1,i,j,k}.
inline constexpr int kDim = 18;
inline constexpr int kHDim = 6;
inline constexpr int kMDim = 12;
inline constexpr std::array<const char*, 7> kParamNames = {"a", "b", "c", "d",
                                                           "a1", "a2", "a3"};

inline int m_index(int u, int beta) { return kHDim + 4 * u + beta; }

/// Parameter-free part (h-h brackets and the h-action on m) plus the seven
/// unit-coefficient direction tensors of the m-m bracket.
struct FamilyTensors {
  std::vector<Rational> base;                 // kDim^3
  std::array<std::vector<Rational>, 7> dirs;  // kDim^3 each
};
const FamilyTensors& family_tensors();

struct FamilyAlgebra {
  LieAlgebra algebra;
  std::array<Rational, 7> params;
  Subspace h, m;
  Representation h_on_m;
};

FamilyAlgebra build(const std::array<Rational, 7>& params);

/// The full structure tensor with formal coefficients a..a3.
std::vector<MultiPoly> build_formal();

/// All coefficient polynomials of the Jacobi residuals of the formal
/// family, linearly reduced to a canonical generating list.
std::vector<MultiPoly> jacobi_constraint_ideal();

/// The five displayed constraint polynomials (the unnumbered linear one
/// plus the four quadratic equations).
std::vector<MultiPoly> paper_system();

/// Solution of a polynomial system that is linear with constant
/// coefficients in the designated variables; the remaining equations are
/// checked by substitution.
struct Parametrization {
  std::map<std::string, MultiPoly> assignment;  // solved variable -> value
  std::vector<std::string> solved_vars;
  std::vector<std::string> free_vars;
  std::vector<MultiPoly> substituted;  // the input system after substitution
  bool residuals_vanish;               // all substituted polynomials are zero
  bool exhaustive;                     // every designated variable was pivoted
};

Parametrization parametrize_semilinear(const std::vector<MultiPoly>& sys,
                                       const std::vector<std::string>& solve_vars);

/// d = 0, a = a3^2/4 - a1 a3/2, b = a2 a3/2 - a1 a2, c = a1 a2/2 - a2 a3/2,
/// with the machine-checked certificate that the substitution kills the
/// whole system and that the solved variables are uniquely determined.
Parametrization solve_paper_system();

std::array<Rational, 7> complete_params(const Rational& a1, const Rational& a2,
                                        const Rational& a3);

struct EquivalenceReport {
  bool forward_exact;   // solutions of s2 satisfy s1, by exact substitution
  bool backward_exact;  // solutions of s1 satisfy s2
  int samples;
  int mismatches;
  std::string verdict;
  std::optional<std::map<std::string, Rational>> counterexample;
};

EquivalenceReport constraints_equivalent(const std::vector<MultiPoly>& s1,
                                         const std::vector<MultiPoly>& s2, int samples = 1000,
                                         std::uint64_t seed = 1);

struct SymmetryVerdict {
  enum class Status { Symmetric, NonSymmetric, UndecidedOverQ };
  struct Branch {
    int i, j;        // m-basis indices (0..11) of the bracket pair
    int coord;       // offending m-coordinate (0..11)
    MultiPoly poly;  // residual in the complement parameter t
  };

  Status status;
  int complement_family_dim;
  std::optional<Rational> closing_parameter;   // symmetric case
  std::optional<Subspace> closing_complement;  // symmetric case
  std::vector<Branch> witnesses;               // non-symmetric certificate
  bool universal_single_pair;  // first witness alone rules out every t
  bool imaginary_block_in_every_complement;
  std::string note;
};

/// Classifies the pair (g(params), h): symmetric iff some invariant
/// complement brackets into h. Parameters must satisfy the constraint
/// system (throws "not a Lie algebra" otherwise).
SymmetryVerdict symmetry_status(const std::array<Rational, 7>& params);

/// Residual polynomial (in the complement parameter) of the m-component
/// `coord` of the bracket of complement lifts of m-basis elements i and j.
MultiPoly complement_bracket_residual(const std::array<Rational, 7>& params, int i, int j,
                                      int coord);

/// Ad-equivariance of the bracket tensor over h-basis x m-basis x m-basis
/// triples; identically zero for every parameter value.
Rational ad_equivariance_defect(const FamilyAlgebra& fam);

struct BracketSpaceReport {
  int dimension;
  int m_part_dimension;
  bool family_in_span;
  bool span_in_family;
  bool example_in_span;
  std::optional<std::array<Rational, 7>> example_coefficients;
};

/// Hom_h(Λ²m, g) computed by the tensor solver, cross-checked against the
/// seven direction tensors, with coefficient recovery of the specialized
/// example bracket.
BracketSpaceReport equivariant_bracket_space();

struct SweepRow {
  std::array<Rational, 3> free_values;  // (a1, a2, a3)
  std::array<Rational, 7> params;
  bool jacobi_zero;
  std::string verdict;
  std::string witness_summary;
};

std::vector<SweepRow> classify_sweep(const std::vector<std::array<Rational, 3>>& grid);

}  // namespace qhs::family
