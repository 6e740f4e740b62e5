#pragma once

#include <cstdint>
#include <vector>

#include "qhs/rep.hpp"

namespace qhs {

enum class TensorShape {
  TensorCubeDual,        // invariants in V* ⊗ V* ⊗ V*
  AltSquareDualTimesV,   // equivariant antisymmetric bilinear maps V x V -> V
  SymSquareDual,         // invariant symmetric bilinear forms
};

struct TensorSolveOptions {
  int max_columns = 2500;          // exact-path size budget
  bool modp_certificate = false;   // permit the mod-p zero-kernel shortcut
  bool force_exact = false;        // exact elimination regardless of budget
  std::uint64_t seed = 20240901;
};

struct TensorSolveResult {
  int dimension;
  std::vector<Vec> basis;   // flattened tensors; empty on the certificate path
  bool certificate_only;    // dimension proven zero mod p (sound over Q)
  int columns;
};

/// Exact basis of the invariants of the generator-derivation action on the
/// requested tensor shape. When the unknown count exceeds the budget the
/// mod-p zero-kernel certificate can stand in for exact elimination (a zero
/// kernel mod p implies a zero kernel over Q); a nonzero mod-p kernel is
/// not a certificate and raises an error instead.
TensorSolveResult invariant_tensors(const Representation& r, TensorShape shape,
                                    const TensorSolveOptions& opt = {});

/// Equivariant antisymmetric bilinear maps V x V -> W for two modules of
/// the same algebra. Unknown layout: beta(e_p, e_q) target coordinate c at
/// column (pair_index(p,q) * dim W + c), p < q.
TensorSolveResult equivariant_alternating_maps(const Representation& source,
                                               const Representation& target,
                                               const TensorSolveOptions& opt = {});

int alt_pair_index(int p, int q, int dim);
int alt_pair_count(int dim);

}  // namespace qhs
