#include "qhs/subspace.hpp"

#include <stdexcept>

namespace qhs {

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& generators) {
  Subspace s(ambient_dim);
  s.basis_ = rref_basis(generators, ambient_dim);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<Vec> gens;
  for (int i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim);
    v[i] = 1;
    gens.push_back(std::move(v));
  }
  return span(ambient_dim, gens);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::coordinates: dimension mismatch");
  return coordinates_in_span(basis_, v);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  // Null space of [B1^T | -B2^T]: a combination of our basis equal to a
  // combination of the other basis is a vector of the intersection.
  int d1 = dim(), d2 = other.dim();
  Matrix m(ambient_, d1 + d2);
  for (int i = 0; i < ambient_; ++i) {
    for (int j = 0; j < d1; ++j) m(i, j) = basis_[j][i];
    for (int j = 0; j < d2; ++j) m(i, d1 + j) = -other.basis_[j][i];
  }
  std::vector<Vec> gens;
  for (const auto& k : kernel(m)) {
    Vec v(ambient_);
    for (int j = 0; j < d1; ++j)
      if (!k[j].is_zero()) v = v + k[j] * basis_[j];
    gens.push_back(std::move(v));
  }
  return span(ambient_, gens);
}

}  // namespace qhs
