#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qhs::modp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Primes below 2^16 so that delayed-reduction accumulation in 64 bits never
/// overflows. Any prime gives a sound one-sided certificate (the kernel can
/// only grow under reduction mod p), so small primes are fine.
inline constexpr u32 kPrimes[] = {65521, 65519, 65497, 65479};

struct SparseRow {
  std::vector<std::pair<int, u32>> entries;  // sorted by column, values < p
};

/// Incremental row-echelon eliminator over Z/p with dense pivot rows and a
/// 64-bit working row (reduction deferred until the row is finished).
class Eliminator {
 public:
  Eliminator(int ncols, u32 p);

  /// Returns true when the row contributed a new pivot.
  bool insert(const SparseRow& row);

  int rank() const { return nrows_; }
  bool full_rank() const { return nrows_ == ncols_; }

 private:
  int ncols_;
  u32 p_;
  int nrows_ = 0;
  std::vector<std::vector<u32>> rows_;  // normalized pivot rows (suffix from pivot col)
  std::vector<int> pivot_of_col_;
  std::vector<u64> work_;
};

u32 pow_mod(u32 base, u32 exp, u32 p);
inline u32 inv_mod(u32 x, u32 p) { return pow_mod(x, p - 2, p); }

/// Kernel dimension over Z/p of the stacked blocks (rows of all blocks
/// appended). `early_exit_full_rank` stops as soon as the rank hits ncols.
int kernel_dim_stacked(const std::vector<std::vector<SparseRow>>& blocks, int ncols, u32 p);

/// One-sided zero-kernel certificate: eliminates a random Z/p-linear
/// combination of the blocks (whose kernel contains the joint kernel) and,
/// if that fails, the full stacked system. Returns true iff the joint
/// kernel over Z/p is zero, which certifies a zero kernel over Q.
bool zero_kernel_certificate(const std::vector<std::vector<SparseRow>>& blocks, int ncols, u32 p,
                             std::uint64_t seed);

}  // namespace qhs::modp
