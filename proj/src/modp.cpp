#include "qhs/modp.hpp"

#include <random>

namespace qhs::modp {

u32 pow_mod(u32 base, u32 exp, u32 p) {
  u64 r = 1, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<u32>(r);
}

Eliminator::Eliminator(int ncols, u32 p)
    : ncols_(ncols), p_(p), pivot_of_col_(ncols, -1), work_(ncols) {}

bool Eliminator::insert(const SparseRow& row) {
  if (full_rank()) return false;
  std::fill(work_.begin(), work_.end(), 0);
  int first = ncols_;
  for (auto [c, v] : row.entries) {
    work_[c] = v % p_;
    if (v % p_ && c < first) first = c;
  }
  for (int c = first; c < ncols_; ++c) {
    u32 r = static_cast<u32>(work_[c] % p_);
    work_[c] = r;
    if (!r) continue;
    int pr = pivot_of_col_[c];
    if (pr < 0) {
      // New pivot: normalize the suffix and store it.
      u32 inv = inv_mod(r, p_);
      std::vector<u32> stored(ncols_ - c);
      for (int j = c; j < ncols_; ++j)
        stored[j - c] = static_cast<u32>(work_[j] % p_ * inv % p_);
      pivot_of_col_[c] = nrows_++;
      rows_.push_back(std::move(stored));
      return true;
    }
    // work += (p - r) * pivot row; afterwards work[c] == 0 (mod p).
    const u32 coef = p_ - r;
    const std::vector<u32>& piv = rows_[pr];
    u64* w = work_.data() + c;
    const u32* q = piv.data();
    const size_t len = piv.size();
    for (size_t j = 0; j < len; ++j) w[j] += static_cast<u64>(coef) * q[j];
  }
  return false;
}

int kernel_dim_stacked(const std::vector<std::vector<SparseRow>>& blocks, int ncols, u32 p) {
  Eliminator e(ncols, p);
  for (const auto& block : blocks)
    for (const auto& row : block) {
      e.insert(row);
      if (e.full_rank()) return 0;
    }
  return ncols - e.rank();
}

bool zero_kernel_certificate(const std::vector<std::vector<SparseRow>>& blocks, int ncols, u32 p,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  size_t total_rows = 0;
  for (const auto& b : blocks) total_rows = std::max(total_rows, b.size());
  // Random combination C = sum_g lambda_g B_g: ker C contains the joint
  // kernel, so full rank of C already settles the question.
  {
    Eliminator e(ncols, p);
    std::vector<u32> lambda(blocks.size());
    for (auto& l : lambda) l = static_cast<u32>(rng() % (p - 1)) + 1;
    std::vector<u64> acc(ncols);
    for (size_t r = 0; r < total_rows; ++r) {
      std::fill(acc.begin(), acc.end(), 0);
      for (size_t g = 0; g < blocks.size(); ++g) {
        if (r >= blocks[g].size()) continue;
        for (auto [c, v] : blocks[g][r].entries) acc[c] += static_cast<u64>(lambda[g]) * v;
      }
      SparseRow combined;
      for (int c = 0; c < ncols; ++c) {
        u32 v = static_cast<u32>(acc[c] % p);
        if (v) combined.entries.emplace_back(c, v);
      }
      e.insert(combined);
      if (e.full_rank()) return true;
    }
  }
  // The combination was singular: fall back to the stacked system, which
  // computes the joint kernel dimension mod p exactly.
  return kernel_dim_stacked(blocks, ncols, p) == 0;
}

}  // namespace qhs::modp
