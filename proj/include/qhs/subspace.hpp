#pragma once

#include <optional>
#include <vector>

#include "qhs/linalg.hpp"

namespace qhs {

/// Linear subspace with a canonical (reduced-echelon) basis, so that two
/// Subspace values are equal iff they are the same subspace.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span(int ambient_dim, const std::vector<Vec>& generators);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  std::vector<Vec> basis_;
};

}  // namespace qhs
