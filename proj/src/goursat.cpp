#include "qhs/goursat.hpp"

#include <random>
#include <stdexcept>

namespace qhs {

Vec SumAlgebra::embed1(const Vec& x) const {
  Vec v(sum.dim());
  for (int i = 0; i < dim1(); ++i) v[i] = x[i];
  return v;
}

Vec SumAlgebra::embed2(const Vec& y) const {
  Vec v(sum.dim());
  for (int i = 0; i < dim2(); ++i) v[dim1() + i] = y[i];
  return v;
}

Vec SumAlgebra::project1(const Vec& v) const {
  return Vec(v.begin(), v.begin() + dim1());
}

Vec SumAlgebra::project2(const Vec& v) const {
  return Vec(v.begin() + dim1(), v.end());
}

SumAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  std::vector<std::string> names;
  for (const auto& n : g1.basis_names()) names.push_back("g1." + n);
  for (const auto& n : g2.basis_names()) names.push_back("g2." + n);
  LieAlgebra sum(names);
  int d1 = g1.dim(), d2 = g2.dim();
  for (int i = 0; i < d1; ++i)
    for (int j = i + 1; j < d1; ++j) {
      Vec br = g1.bracket_basis(i, j);
      Vec v(d1 + d2);
      for (int k = 0; k < d1; ++k) v[k] = br[k];
      sum.set_bracket(i, j, v);
    }
  for (int i = 0; i < d2; ++i)
    for (int j = i + 1; j < d2; ++j) {
      Vec br = g2.bracket_basis(i, j);
      Vec v(d1 + d2);
      for (int k = 0; k < d2; ++k) v[d1 + k] = br[k];
      sum.set_bracket(d1 + i, d1 + j, v);
    }
  return {g1, g2, sum};
}

std::vector<Vec> quotient_chart(const Subspace& a, const Subspace& a0) {
  // A0 in A-coordinates; its pivots mark the directions to drop.
  std::vector<Vec> a0_in_a;
  for (const auto& v : a0.basis()) {
    auto coords = a.coordinates(v);
    if (!coords) throw std::invalid_argument("quotient_chart: A0 is not inside A");
    a0_in_a.push_back(*coords);
  }
  auto reduced = rref_basis(a0_in_a, a.dim());
  std::vector<bool> is_pivot(a.dim(), false);
  for (const auto& row : reduced) {
    int lead = 0;
    while (lead < a.dim() && row[lead].is_zero()) ++lead;
    is_pivot[lead] = true;
  }
  std::vector<Vec> lifts;
  for (int i = 0; i < a.dim(); ++i)
    if (!is_pivot[i]) lifts.push_back(a.basis()[i]);
  return lifts;
}

Vec quotient_class(const Subspace& a0, const std::vector<Vec>& lifts, const Vec& x) {
  // Coordinates of x against [lifts | A0-basis]; the lift block is the class.
  std::vector<Vec> cols = lifts;
  for (const auto& v : a0.basis()) cols.push_back(v);
  if (cols.empty()) {
    if (!is_zero(x)) throw std::invalid_argument("quotient_class: element not in A");
    return {};
  }
  auto sol = solve_linear(Matrix::from_columns(cols), x);
  if (!sol.consistent()) throw std::invalid_argument("quotient_class: element not in A");
  if (!sol.kernel.empty())
    throw std::invalid_argument("quotient_class: chart lifts dependent modulo A0");
  return Vec(sol.particular->begin(), sol.particular->begin() + lifts.size());
}

GoursatQuintuple extract(const SumAlgebra& s, const Subspace& h) {
  if (!is_subalgebra(h, s.sum)) throw std::invalid_argument("extract: h is not a subalgebra");
  int d1 = s.dim1(), d2 = s.dim2();

  std::vector<Vec> p1, p2;
  for (const auto& v : h.basis()) {
    p1.push_back(s.project1(v));
    p2.push_back(s.project2(v));
  }
  Subspace A = Subspace::span(d1, p1);
  Subspace B = Subspace::span(d2, p2);

  // A0 = ker(pi2|h) = h ∩ (g1 ⊕ 0), sliced back to g1; B0 likewise.
  Subspace g1_block(d1 + d2), g2_block(d1 + d2);
  {
    std::vector<Vec> e1, e2;
    for (int i = 0; i < d1; ++i) e1.push_back(basis_vec(d1 + d2, i));
    for (int i = 0; i < d2; ++i) e2.push_back(basis_vec(d1 + d2, d1 + i));
    g1_block = Subspace::span(d1 + d2, e1);
    g2_block = Subspace::span(d1 + d2, e2);
  }
  std::vector<Vec> a0_gens, b0_gens;
  Subspace h_cap_g1 = h.intersect(g1_block);
  Subspace h_cap_g2 = h.intersect(g2_block);
  for (const auto& v : h_cap_g1.basis()) a0_gens.push_back(s.project1(v));
  for (const auto& v : h_cap_g2.basis()) b0_gens.push_back(s.project2(v));
  Subspace A0 = Subspace::span(d1, a0_gens);
  Subspace B0 = Subspace::span(d2, b0_gens);

  std::vector<Vec> cA = quotient_chart(A, A0);
  std::vector<Vec> cB = quotient_chart(B, B0);
  int qa = static_cast<int>(cA.size());
  int qb = static_cast<int>(cB.size());
  if (qa != qb)
    throw std::logic_error("extract: quotients differ in dimension");  // cannot happen for subalgebras

  // theta: for a chart lift X of A/A0 find any Y with X + Y in h; the class
  // of Y is independent of the choice exactly when ker(pi1|h) projects into
  // B0, which we verify.
  Matrix theta(qb, qa);
  for (int c = 0; c < qa; ++c) {
    const Vec& x = cA[c];
    // Solve for h-coordinates t with pi1(h_basis^T t) = x.
    Matrix sys(d1, h.dim());
    for (int r = 0; r < d1; ++r)
      for (int k = 0; k < h.dim(); ++k) sys(r, k) = h.basis()[k][r];
    auto sol = solve_linear(sys, x);
    if (!sol.consistent()) throw std::logic_error("extract: chart lift has no preimage");
    Vec member(d1 + d2);
    for (int k = 0; k < h.dim(); ++k)
      if (!(*sol.particular)[k].is_zero())
        member = member + (*sol.particular)[k] * h.basis()[k];
    Vec y = s.project2(member);
    Vec cls = quotient_class(B0, cB, y);
    for (int r = 0; r < qb; ++r) theta(r, c) = cls[r];
    // Well-definedness: every kernel direction's second block must fall
    // inside B0 (its class must vanish).
    for (const auto& k : sol.kernel) {
      Vec alt(d1 + d2);
      for (int t = 0; t < h.dim(); ++t)
        if (!k[t].is_zero()) alt = alt + k[t] * h.basis()[t];
      if (!is_zero(quotient_class(B0, cB, s.project2(alt))))
        throw std::logic_error("extract: theta is not well defined");
    }
  }
  return {A, A0, B, B0, cA, cB, theta};
}

void validate(const SumAlgebra& s, const GoursatQuintuple& q) {
  if (!is_subalgebra(q.A, s.g1)) throw std::invalid_argument("quintuple: A is not a subalgebra");
  if (!is_subalgebra(q.B, s.g2)) throw std::invalid_argument("quintuple: B is not a subalgebra");
  if (!q.A.contains(q.A0)) throw std::invalid_argument("quintuple: A0 not contained in A");
  if (!q.B.contains(q.B0)) throw std::invalid_argument("quintuple: B0 not contained in B");
  if (!is_ideal_in(q.A0, q.A, s.g1)) throw std::invalid_argument("quintuple: A0 is not an ideal of A");
  if (!is_ideal_in(q.B0, q.B, s.g2)) throw std::invalid_argument("quintuple: B0 is not an ideal of B");
  int qa = static_cast<int>(q.chartA.size());
  int qb = static_cast<int>(q.chartB.size());
  if (qa != qb || q.A0.dim() + qa != q.A.dim() || q.B0.dim() + qb != q.B.dim())
    throw std::invalid_argument("quintuple: chart dimensions inconsistent");
  if (q.theta.rows() != qa || q.theta.cols() != qa)
    throw std::invalid_argument("quintuple: theta shape mismatch");
  if (qa > 0 && rank(q.theta) != qa) throw std::invalid_argument("quintuple: theta is singular");
  // theta intertwines the quotient brackets.
  for (int i = 0; i < qa; ++i)
    for (int j = i + 1; j < qa; ++j) {
      Vec lhs_class = quotient_class(q.A0, q.chartA, s.g1.bracket(q.chartA[i], q.chartA[j]));
      Vec lhs = q.theta.apply(lhs_class);
      // [theta x_i, theta x_j] downstairs: lift theta columns through chartB.
      Vec yi(s.dim2()), yj(s.dim2());
      for (size_t r = 0; r < q.chartB.size(); ++r) {
        yi = yi + q.theta(static_cast<int>(r), i) * q.chartB[r];
        yj = yj + q.theta(static_cast<int>(r), j) * q.chartB[r];
      }
      Vec rhs = quotient_class(q.B0, q.chartB, s.g2.bracket(yi, yj));
      if (!is_zero(lhs - rhs))
        throw std::invalid_argument("quintuple: theta is not a quotient-bracket homomorphism");
    }
}

Subspace reconstruct(const SumAlgebra& s, const GoursatQuintuple& q) {
  validate(s, q);
  int d1 = s.dim1(), d2 = s.dim2();
  std::vector<Vec> gens;
  for (const auto& v : q.A0.basis()) gens.push_back(s.embed1(v));
  for (const auto& v : q.B0.basis()) gens.push_back(s.embed2(v));
  for (size_t c = 0; c < q.chartA.size(); ++c) {
    Vec y(d2);
    for (size_t r = 0; r < q.chartB.size(); ++r)
      y = y + q.theta(static_cast<int>(r), static_cast<int>(c)) * q.chartB[r];
    Vec pair(d1 + d2);
    for (int t = 0; t < d1; ++t) pair[t] = q.chartA[c][t];
    for (int t = 0; t < d2; ++t) pair[d1 + t] = y[t];
    gens.push_back(std::move(pair));
  }
  Subspace h = Subspace::span(d1 + d2, gens);
  if (static_cast<int>(h.dim()) != q.A0.dim() + q.B0.dim() + static_cast<int>(q.chartA.size()))
    throw std::logic_error("reconstruct: dimension mismatch");
  if (!is_subalgebra(h, s.sum)) throw std::logic_error("reconstruct: result is not a subalgebra");
  return h;
}

Subspace random_subalgebra(const SumAlgebra& s, int seedcount, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  int n = s.sum.dim();
  std::vector<Vec> seeds;
  for (int k = 0; k < seedcount; ++k) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = Rational(static_cast<long>(rng() % 5) - 2);
    seeds.push_back(std::move(v));
  }
  Subspace h = Subspace::span(n, seeds);
  for (;;) {
    std::vector<Vec> gens = h.basis();
    for (int i = 0; i < h.dim(); ++i)
      for (int j = i + 1; j < h.dim(); ++j)
        gens.push_back(s.sum.bracket(h.basis()[i], h.basis()[j]));
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == h.dim()) return next;
    h = std::move(next);
  }
}

}  // namespace qhs
