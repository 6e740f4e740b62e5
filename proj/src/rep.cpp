#include "qhs/rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qhs/poly.hpp"

namespace qhs {

Matrix Representation::act(const Vec& x) const {
  if (static_cast<int>(x.size()) != algebra.dim())
    throw std::invalid_argument("Representation::act: dimension mismatch");
  Matrix m(module_dim, module_dim);
  for (size_t i = 0; i < action.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * action[i];
  return m;
}

Rational rep_defect(const Representation& r) {
  int n = r.algebra.dim();
  Rational worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix lhs = r.act(r.algebra.bracket_basis(i, j));
      Matrix rhs = Matrix::commutator(r.action[i], r.action[j]);
      Rational d = (lhs - rhs).max_abs();
      if (d > worst) worst = d;
    }
  return worst;
}

namespace {

// Flattens the commutation conditions X*A - A*X = 0 for each A into rows of
// a homogeneous system over the n^2 entries of X, then reads the canonical
// kernel back as matrices.
std::vector<Matrix> matrices_from_kernel(const std::vector<Vec>& ker, int n) {
  std::vector<Matrix> out;
  for (const auto& v : ker) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<size_t>(i) * n + j];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Matrix> commutant(const Representation& r, const std::vector<Matrix>& extra) {
  int n = r.module_dim;
  std::vector<const Matrix*> gens;
  for (const auto& a : r.action) gens.push_back(&a);
  for (const auto& e : extra) {
    if (e.rows() != n || e.cols() != n)
      throw std::invalid_argument("commutant: extra matrix has wrong shape");
    gens.push_back(&e);
  }
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  for (const Matrix* a : gens) {
    // (X A - A X)(i,j) = sum_k X(i,k) A(k,j) - A(i,k) X(k,j)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::map<int, Rational> m;
        for (int k = 0; k < n; ++k) {
          if (!(*a)(k, j).is_zero()) m[i * n + k] += (*a)(k, j);
          if (!(*a)(i, k).is_zero()) m[k * n + j] -= (*a)(i, k);
        }
        std::vector<std::pair<int, Rational>> row(m.begin(), m.end());
        rows.push_back(std::move(row));
      }
  }
  return matrices_from_kernel(kernel_sparse(rows, n * n), n);
}

std::vector<Matrix> equivariant_homs(const Representation& r1, const Representation& r2) {
  if (r1.algebra.dim() != r2.algebra.dim())
    throw std::invalid_argument("equivariant_homs: algebras differ");
  int n1 = r1.module_dim, n2 = r2.module_dim;
  int gens = r1.algebra.dim();
  // phi: V1 -> V2 is n2 x n1; condition phi rho1 - rho2 phi = 0.
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  for (int g = 0; g < gens; ++g) {
    const Matrix& a1 = r1.action[g];
    const Matrix& a2 = r2.action[g];
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n1; ++j) {
        std::map<int, Rational> m;
        for (int k = 0; k < n1; ++k)
          if (!a1(k, j).is_zero()) m[i * n1 + k] += a1(k, j);
        for (int k = 0; k < n2; ++k)
          if (!a2(i, k).is_zero()) m[k * n1 + j] -= a2(i, k);
        std::vector<std::pair<int, Rational>> row(m.begin(), m.end());
        rows.push_back(std::move(row));
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel_sparse(rows, n2 * n1)) {
    Matrix m(n2, n1);
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n1; ++j) m(i, j) = v[static_cast<size_t>(i) * n1 + j];
    out.push_back(std::move(m));
  }
  return out;
}

Subspace spin_up(const Representation& r, const std::vector<Vec>& seeds) {
  Subspace s = Subspace::span(r.module_dim, seeds);
  for (;;) {
    std::vector<Vec> gens = s.basis();
    for (const auto& a : r.action)
      for (const auto& v : s.basis()) gens.push_back(a.apply(v));
    Subspace next = Subspace::span(r.module_dim, gens);
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

Representation restrict_to(const Representation& r, const Subspace& s) {
  Representation out{r.algebra, s.dim(), {}};
  for (const auto& a : r.action) {
    Matrix m(s.dim(), s.dim());
    for (int j = 0; j < s.dim(); ++j) {
      auto coords = s.coordinates(a.apply(s.basis()[j]));
      if (!coords) throw std::invalid_argument("restrict_to: subspace is not invariant");
      for (int i = 0; i < s.dim(); ++i) m(i, j) = (*coords)[i];
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

namespace {

// Expresses a subspace of the piece's coordinate space back in the ambient.
Subspace unrestrict(const Subspace& piece, const std::vector<Vec>& sub_basis, int ambient_dim) {
  std::vector<Vec> gens;
  for (const auto& c : sub_basis) {
    Vec v(ambient_dim);
    for (int i = 0; i < piece.dim(); ++i)
      if (!c[i].is_zero()) v = v + c[i] * piece.basis()[i];
    gens.push_back(std::move(v));
  }
  return Subspace::span(ambient_dim, gens);
}

// Tries to split one invariant piece along rational eigenvalues of a
// commutant element; returns the sub-pieces in piece coordinates.
std::optional<std::vector<std::vector<Vec>>> try_split(const Matrix& c, int dim) {
  MultiPoly mp = minimal_polynomial(c);
  auto roots = rational_roots(mp);
  if (roots.roots.empty()) return std::nullopt;
  bool has_cofactor = roots.cofactor.total_degree() > 0;
  if (roots.roots.size() == 1 && !has_cofactor) return std::nullopt;  // single primary block
  std::vector<std::vector<Vec>> parts;
  for (const auto& [r, mult] : roots.roots) {
    Matrix shifted = c;
    for (int i = 0; i < dim; ++i) shifted(i, i) -= r;
    Matrix power = Matrix::identity(dim);
    for (int e = 0; e < mult; ++e) power = power * shifted;
    auto ker = kernel(power);
    if (!ker.empty()) parts.push_back(std::move(ker));
  }
  if (has_cofactor) {
    auto ker = kernel(poly_at_matrix(roots.cofactor, c));
    if (!ker.empty()) parts.push_back(std::move(ker));
  }
  if (parts.size() < 2) return std::nullopt;
  return parts;
}

}  // namespace

ModuleDecomposition decompose(const Representation& r) {
  std::vector<Subspace> work = {Subspace::full(r.module_dim)};
  std::vector<Subspace> done;
  std::vector<Representation> done_restricted;
  while (!work.empty()) {
    Subspace piece = work.back();
    work.pop_back();
    Representation sub = restrict_to(r, piece);
    auto comm = commutant(sub);
    if (comm.size() <= 1) {
      done.push_back(piece);
      done_restricted.push_back(std::move(sub));
      continue;
    }
    // Candidate splitting elements: commutant basis, then pairwise sums.
    std::vector<Matrix> candidates = comm;
    for (size_t i = 0; i < comm.size(); ++i)
      for (size_t j = i + 1; j < comm.size(); ++j) candidates.push_back(comm[i] + comm[j]);
    bool split_done = false;
    for (const auto& cand : candidates) {
      if (auto parts = try_split(cand, piece.dim())) {
        for (auto& part : *parts) work.push_back(unrestrict(piece, part, r.module_dim));
        split_done = true;
        break;
      }
    }
    if (!split_done)
      throw std::runtime_error(
          "decompose: non-rational splitting (reducible piece with no rational eigenvalue)");
  }
  // Deterministic order: by dimension, then by basis.
  std::vector<size_t> order(done.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (done[x].dim() != done[y].dim()) return done[x].dim() < done[y].dim();
    return x < y;
  });
  ModuleDecomposition out;
  out.multiplicity_free = true;
  std::vector<Representation> restricted;
  for (size_t i : order) {
    out.pieces.push_back(done[i]);
    restricted.push_back(done_restricted[i]);
  }
  for (size_t i = 0; i < restricted.size() && out.multiplicity_free; ++i) {
    if (commutant(restricted[i]).size() != 1) out.multiplicity_free = false;
    for (size_t j = 0; j < restricted.size() && out.multiplicity_free; ++j)
      if (i != j && !equivariant_homs(restricted[i], restricted[j]).empty())
        out.multiplicity_free = false;
  }
  return out;
}

bool quaternionic_stable(const Subspace& s, const Matrix& i, const Matrix& j, const Matrix& k) {
  for (const Matrix* op : {&i, &j, &k})
    for (const auto& v : s.basis())
      if (!s.contains(op->apply(v))) return false;
  return true;
}

IrreducibilityReport h_irreducibility_report(const Representation& r, const Matrix& i,
                                             const Matrix& j, const Matrix& k) {
  IrreducibilityReport rep;
  if (r.module_dim == 4) {
    // A nonzero I,J,K-stable subspace is a module over the quaternions, so
    // its real dimension is a multiple of 4: no proper one can exist.
    Matrix minus_id = -Matrix::identity(4);
    if (i * i == minus_id && j * j == minus_id && k * k == minus_id && i * j == k) {
      rep.verdict = IrreducibilityReport::Verdict::HIrreducible;
      rep.note = "4-dimensional quaternionic module has no proper quaternionic subspace";
      rep.multiplicity_free = true;
      rep.piece_dims = {4};
      return rep;
    }
  }
  ModuleDecomposition dec{{}, false};
  try {
    dec = decompose(r);
  } catch (const std::runtime_error& e) {
    rep.verdict = IrreducibilityReport::Verdict::Undecided;
    rep.note = e.what();
    return rep;
  }
  for (const auto& p : dec.pieces) rep.piece_dims.push_back(p.dim());
  rep.multiplicity_free = dec.multiplicity_free;
  if (!dec.multiplicity_free) {
    rep.verdict = IrreducibilityReport::Verdict::Undecided;
    rep.note = "module is not multiplicity-free; invariant subspaces are not enumerable";
    return rep;
  }
  size_t np = dec.pieces.size();
  if (np > 20) throw std::invalid_argument("h_irreducibility_report: too many pieces");
  for (size_t mask = 1; mask + 1 < (size_t{1} << np); ++mask) {
    Subspace s(r.module_dim);
    for (size_t b = 0; b < np; ++b)
      if (mask & (size_t{1} << b)) s = s.sum(dec.pieces[b]);
    if (quaternionic_stable(s, i, j, k)) {
      rep.verdict = IrreducibilityReport::Verdict::NotHIrreducible;
      rep.witness = s;
      rep.note = "proper invariant quaternionic subspace found";
      return rep;
    }
  }
  rep.verdict = IrreducibilityReport::Verdict::HIrreducible;
  rep.note = "no proper invariant subspace is I,J,K-stable";
  return rep;
}

std::optional<ComplementFamily> invariant_complements(const LieAlgebra& l, const Subspace& h) {
  if (!is_subalgebra(h, l)) throw std::invalid_argument("invariant_complements: H not a subalgebra");
  int n = l.dim();
  int hd = h.dim();
  int qd = n - hd;

  // Quotient chart: coordinates away from the pivot columns of H.
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : h.basis()) {
    int lead = 0;
    while (lead < n && row[lead].is_zero()) ++lead;
    is_pivot[lead] = true;
  }
  std::vector<int> chart;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) chart.push_back(c);

  // q: ambient -> quotient coordinates (reduce modulo H, keep chart entries).
  auto project = [&](Vec v) {
    for (const auto& row : h.basis()) {
      int lead = 0;
      while (lead < n && row[lead].is_zero()) ++lead;
      if (!v[lead].is_zero()) {
        Rational f = v[lead];
        for (int t = 0; t < n; ++t) v[t] -= f * row[t];
      }
    }
    Vec q(qd);
    for (int t = 0; t < qd; ++t) q[t] = v[chart[t]];
    return q;
  };

  if (qd == 0) {
    ComplementFamily fam{Subspace(n), Matrix(n, 0), {}, {}, chart};
    return fam;
  }

  // ad matrices of the H basis and their induced quotient actions.
  std::vector<Matrix> ad_h, ad_quot;
  for (const auto& hb : h.basis()) {
    Matrix a = l.ad(hb);
    Matrix aq(qd, qd);
    for (int c = 0; c < qd; ++c) {
      Vec lift(n);
      lift[chart[c]] = 1;
      Vec img = project(a.apply(lift));
      for (int r2 = 0; r2 < qd; ++r2) aq(r2, c) = img[r2];
    }
    ad_h.push_back(std::move(a));
    ad_quot.push_back(std::move(aq));
  }

  // Unknown splitting sigma: quotient -> ambient (n x qd), subject to
  // q(sigma) = id and sigma adQ(h) = ad(h) sigma for every h-basis element.
  int unknowns = n * qd;
  std::vector<std::vector<std::pair<int, Rational>>> srows;
  // q(sigma . e_c) = e_c: the chart entries of the reduced column.
  // Reduction mod H is linear; build it as a matrix once.
  Matrix qmat(qd, n);
  for (int t = 0; t < n; ++t) {
    Vec e(n);
    e[t] = 1;
    Vec img = project(e);
    for (int r2 = 0; r2 < qd; ++r2) qmat(r2, t) = img[r2];
  }
  for (int r2 = 0; r2 < qd; ++r2)
    for (int c = 0; c < qd; ++c) {
      std::map<int, Rational> m;
      for (int t = 0; t < n; ++t)
        if (!qmat(r2, t).is_zero()) m[t * qd + c] += qmat(r2, t);
      if (r2 == c) m[unknowns] = 1;  // right-hand side
      srows.emplace_back(m.begin(), m.end());
    }
  for (int g = 0; g < hd; ++g) {
    const Matrix& a = ad_h[g];
    const Matrix& aq = ad_quot[g];
    // (sigma aq - a sigma)(i,c) = 0
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < qd; ++c) {
        std::map<int, Rational> m;
        for (int k = 0; k < qd; ++k)
          if (!aq(k, c).is_zero()) m[i * qd + k] += aq(k, c);
        for (int k = 0; k < n; ++k)
          if (!a(i, k).is_zero()) m[k * qd + c] -= a(i, k);
        srows.emplace_back(m.begin(), m.end());
      }
  }
  auto sol = solve_sparse(srows, unknowns);
  if (!sol.consistent()) return std::nullopt;

  auto to_matrix = [&](const Vec& v) {
    Matrix m(n, qd);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < qd; ++c) m(i, c) = v[static_cast<size_t>(i) * qd + c];
    return m;
  };

  ComplementFamily fam{Subspace(n), Matrix(n, qd), {}, {}, chart};
  fam.sigma0 = to_matrix(*sol.particular);

  // Prefer the coordinate complement as the base when it is itself
  // invariant: it is the natural reference for the affine family.
  {
    Matrix natural(n, qd);
    for (int c = 0; c < qd; ++c) natural(chart[c], c) = 1;
    bool natural_ok = true;
    for (int g = 0; g < hd && natural_ok; ++g) {
      // sigma aq - a sigma must vanish and q(natural) = id holds by shape.
      Matrix resid = natural * ad_quot[g] - ad_h[g] * natural;
      // The residual must both vanish on the quotient and stay inside the
      // complement: equivariance as a map into the ambient.
      if (!resid.is_zero()) natural_ok = false;
    }
    if (natural_ok) fam.sigma0 = natural;
  }

  for (const auto& kv : sol.kernel) {
    Matrix d = to_matrix(kv);
    Matrix phi(hd, qd);
    for (int c = 0; c < qd; ++c) {
      auto coords = h.coordinates(d.col(c));
      if (!coords) throw std::logic_error("invariant_complements: kernel direction not in H");
      for (int r2 = 0; r2 < hd; ++r2) phi(r2, c) = (*coords)[r2];
    }
    fam.deltas.push_back(std::move(d));
    fam.phis.push_back(std::move(phi));
  }

  std::vector<Vec> cols;
  for (int c = 0; c < qd; ++c) cols.push_back(fam.sigma0.col(c));
  fam.base = Subspace::span(n, cols);
  return fam;
}

}  // namespace qhs
