#include "qhs/family.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhs/geo.hpp"

namespace qhs::family {

namespace {

size_t tidx(int i, int j, int k) {
  return (static_cast<size_t>(i) * kDim + j) * kDim + k;
}

Rational eta3(int u, int v) {
  if (u != v) return 0;
  return u == 0 ? -1 : 1;
}

std::vector<std::string> family_basis_names() {
  std::vector<std::string> names = {"L0", "L1", "L2", "C1", "C2", "C3"};
  const char* q[] = {"1", "i", "j", "k"};
  for (int u = 0; u < 3; ++u)
    for (int b = 0; b < 4; ++b) names.push_back("e" + std::to_string(u) + "x" + q[b]);
  return names;
}

FamilyTensors build_family_tensors() {
  FamilyTensors t;
  t.base.assign(static_cast<size_t>(kDim) * kDim * kDim, Rational(0));
  for (auto& d : t.dirs) d.assign(t.base.size(), Rational(0));

  auto add = [](std::vector<Rational>& ten, int i, int j, int k, const Rational& v) {
    if (!v.is_zero()) ten[tidx(i, j, k)] += v;
  };

  // [L_a, L_b] = K(e_a x e_b): L-coordinates of the Lorentzian cross product.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Vec cr = geo::lorentz_cross(basis_vec(3, a), basis_vec(3, b));
      for (int k = 0; k < 3; ++k) add(t.base, a, b, k, cr[k]);
    }
  // [C_m, C_n] = iota of the quaternion commutator [e_m, e_n] = 2 e_m x e_n.
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      Vec cr = geo::euclid_cross(basis_vec(3, m), basis_vec(3, n));
      for (int k = 0; k < 3; ++k) add(t.base, 3 + m, 3 + n, 3 + k, Rational(2) * cr[k]);
    }
  // [L_a, e_u⊗q] = (e_a x e_u)⊗q.
  for (int a = 0; a < 3; ++a)
    for (int u = 0; u < 3; ++u) {
      Vec cr = geo::lorentz_cross(basis_vec(3, a), basis_vec(3, u));
      for (int b = 0; b < 4; ++b)
        for (int w = 0; w < 3; ++w) {
          add(t.base, a, m_index(u, b), m_index(w, b), cr[w]);
          add(t.base, m_index(u, b), a, m_index(w, b), -cr[w]);
        }
    }
  // [C_m, e_u⊗q] = e_u⊗(e_m q - q e_m).
  for (int m = 0; m < 3; ++m) {
    Vec em = basis_vec(4, m + 1);
    for (int b = 0; b < 4; ++b) {
      Vec comm = geo::quat_mul(em, basis_vec(4, b)) - geo::quat_mul(basis_vec(4, b), em);
      for (int u = 0; u < 3; ++u)
        for (int g = 0; g < 4; ++g) {
          add(t.base, 3 + m, m_index(u, b), m_index(u, g), comm[g]);
          add(t.base, m_index(u, b), 3 + m, m_index(u, g), -comm[g]);
        }
    }
  }

  // Direction tensors: the seven coefficients of the m-m bracket, assembled
  // from the bilinear formula on decomposable pairs x = e_u⊗p, y = e_v⊗q
  // with p = p0 + p⃗ and q = q0 + q⃗.
  for (int u = 0; u < 3; ++u)
    for (int bp = 0; bp < 4; ++bp)
      for (int v = 0; v < 3; ++v)
        for (int bq = 0; bq < 4; ++bq) {
          int i = m_index(u, bp), j = m_index(v, bq);
          Vec cr_uv = geo::lorentz_cross(basis_vec(3, u), basis_vec(3, v));
          Rational p0 = bp == 0 ? 1 : 0;
          Rational q0 = bq == 0 ? 1 : 0;
          Rational dot = (bp >= 1 && bp == bq) ? 1 : 0;  // <p⃗, q⃗>
          Rational eta = eta3(u, v);

          // a: p0 q0 K(u x v)  |  b: <p⃗,q⃗> K(u x v)
          for (int k = 0; k < 3; ++k) {
            add(t.dirs[0], i, j, k, p0 * q0 * cr_uv[k]);
            add(t.dirs[1], i, j, k, dot * cr_uv[k]);
          }
          // c: eta(u,v) iota(p⃗ x q⃗)
          if (!eta.is_zero() && bp >= 1 && bq >= 1) {
            Vec cr_pq = geo::euclid_cross(basis_vec(3, bp - 1), basis_vec(3, bq - 1));
            for (int k = 0; k < 3; ++k) add(t.dirs[2], i, j, 3 + k, eta * cr_pq[k]);
          }
          // d: eta(u,v) iota(p0 q⃗ - q0 p⃗)
          if (!eta.is_zero()) {
            if (bp == 0 && bq >= 1) add(t.dirs[3], i, j, 3 + (bq - 1), eta);
            if (bq == 0 && bp >= 1) add(t.dirs[3], i, j, 3 + (bp - 1), -eta);
          }
          // a1: (u x v)⊗(p0 q0)  |  a2: (u x v)⊗<p⃗,q⃗>  — real-part valued
          for (int w = 0; w < 3; ++w) {
            add(t.dirs[4], i, j, m_index(w, 0), p0 * q0 * cr_uv[w]);
            add(t.dirs[5], i, j, m_index(w, 0), dot * cr_uv[w]);
          }
          // a3: (u x v)⊗((p0 q⃗ + q0 p⃗)/2)
          for (int w = 0; w < 3; ++w) {
            if (!cr_uv[w].is_zero()) {
              if (bp == 0 && bq >= 1)
                add(t.dirs[6], i, j, m_index(w, bq), Rational(1, 2) * cr_uv[w]);
              if (bq == 0 && bp >= 1)
                add(t.dirs[6], i, j, m_index(w, bp), Rational(1, 2) * cr_uv[w]);
            }
          }
        }
  return t;
}

LieAlgebra algebra_from_tensor(const std::vector<Rational>& c) {
  LieAlgebra l(family_basis_names());
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) {
      Vec v(kDim);
      for (int k = 0; k < kDim; ++k) v[k] = c[tidx(i, j, k)];
      l.set_bracket(i, j, v);
    }
  return l;
}

Representation h_representation_on_m() {
  // Abstract h = so(1,2) ⊕ c with the frozen generator order.
  LieAlgebra h({"L0", "L1", "L2", "C1", "C2", "C3"});
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Vec cr = geo::lorentz_cross(basis_vec(3, a), basis_vec(3, b));
      Vec v(6);
      for (int k = 0; k < 3; ++k) v[k] = cr[k];
      h.set_bracket(a, b, v);
    }
  for (int m = 0; m < 3; ++m)
    for (int n = m + 1; n < 3; ++n) {
      Vec cr = geo::euclid_cross(basis_vec(3, m), basis_vec(3, n));
      Vec v(6);
      for (int k = 0; k < 3; ++k) v[3 + k] = Rational(2) * cr[k];
      h.set_bracket(3 + m, 3 + n, v);
    }
  std::vector<Matrix> action;
  Matrix id4 = Matrix::identity(4);
  for (int a = 0; a < 3; ++a) action.push_back(geo::k_iso(basis_vec(3, a)).kron(id4));
  for (int m = 0; m < 3; ++m) action.push_back(geo::c_action(m, 2));
  return {h, 12, action};
}

}  // namespace

const FamilyTensors& family_tensors() {
  static const FamilyTensors t = build_family_tensors();
  return t;
}

FamilyAlgebra build(const std::array<Rational, 7>& params) {
  const FamilyTensors& t = family_tensors();
  std::vector<Rational> c = t.base;
  for (int al = 0; al < 7; ++al) {
    if (params[al].is_zero()) continue;
    for (size_t idx = 0; idx < c.size(); ++idx)
      if (!t.dirs[al][idx].is_zero()) c[idx] += params[al] * t.dirs[al][idx];
  }
  std::vector<Vec> hgens, mgens;
  for (int i = 0; i < kHDim; ++i) hgens.push_back(basis_vec(kDim, i));
  for (int i = kHDim; i < kDim; ++i) mgens.push_back(basis_vec(kDim, i));
  return {algebra_from_tensor(c), params, Subspace::span(kDim, hgens),
          Subspace::span(kDim, mgens), h_representation_on_m()};
}

std::vector<MultiPoly> build_formal() {
  const FamilyTensors& t = family_tensors();
  std::vector<MultiPoly> c(t.base.size());
  for (size_t idx = 0; idx < t.base.size(); ++idx) {
    MultiPoly p = MultiPoly::constant(t.base[idx]);
    for (int al = 0; al < 7; ++al)
      if (!t.dirs[al][idx].is_zero())
        p += t.dirs[al][idx] * MultiPoly::variable(kParamNames[al]);
    c[idx] = std::move(p);
  }
  return c;
}

namespace {

// Canonical monomial order for the reduction of coefficient polynomials:
// total degree first, then lexicographic in (a,b,c,d,a1,a2,a3).
std::vector<MultiPoly> reduce_poly_list(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> all_vars(kParamNames.begin(), kParamNames.end());
  auto full_exponents = [&](const MultiPoly& p,
                            const MultiPoly::Exponents& e) -> std::vector<int> {
    std::vector<int> full(all_vars.size(), 0);
    const auto& vars = p.variables();
    for (size_t i = 0; i < vars.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = std::find(all_vars.begin(), all_vars.end(), vars[i]);
      if (it == all_vars.end()) throw std::logic_error("reduce_poly_list: unexpected variable");
      full[it - all_vars.begin()] = e[i];
    }
    return full;
  };
  // Collect monomials.
  std::set<std::pair<int, std::vector<int>>> monos;
  for (const auto& p : polys)
    for (const auto& [e, coef] : p.terms()) {
      auto full = full_exponents(p, e);
      int deg = 0;
      for (int x : full) deg += x;
      monos.insert({deg, full});
    }
  std::map<std::vector<int>, int> col_of;
  std::vector<std::vector<int>> mono_of_col;
  for (const auto& [deg, e] : monos) {
    col_of[e] = static_cast<int>(mono_of_col.size());
    mono_of_col.push_back(e);
  }
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  for (const auto& p : polys) {
    std::map<int, Rational> m;
    for (const auto& [e, coef] : p.terms()) m[col_of[full_exponents(p, e)]] += coef;
    rows.emplace_back(m.begin(), m.end());
  }
  SparseRationalRREF elim(static_cast<int>(mono_of_col.size()));
  for (auto& r : rows) elim.insert(std::move(r));
  elim.reduce();
  std::vector<MultiPoly> out;
  for (const auto& row : elim.pivot_rows()) {
    MultiPoly p;
    for (const auto& [col, coef] : row) {
      MultiPoly term = MultiPoly::constant(coef);
      const auto& e = mono_of_col[col];
      for (size_t v = 0; v < all_vars.size(); ++v)
        if (e[v] > 0) term = term * MultiPoly::variable(all_vars[v]).pow(e[v]);
      p += term;
    }
    out.push_back(std::move(p));
  }
  // Deterministic ordering: by pivot column (the elimination kept them in
  // insertion order; sort by leading monomial).
  std::sort(out.begin(), out.end(), [](const MultiPoly& x, const MultiPoly& y) {
    return x.str() < y.str();
  });
  return out;
}

}  // namespace

std::vector<MultiPoly> jacobi_constraint_ideal() {
  std::vector<MultiPoly> c = build_formal();
  // Sparse view: for each (i,j) the list of l with c[i][j][l] != 0.
  std::vector<std::vector<int>> nz(kDim * kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int l = 0; l < kDim; ++l)
        if (!c[tidx(i, j, l)].is_zero()) nz[i * kDim + j].push_back(l);

  std::vector<MultiPoly> all;
  auto accumulate = [&](int x, int y, int z, std::vector<MultiPoly>& jac) {
    // [[e_x, e_y], e_z]
    for (int l : nz[x * kDim + y]) {
      const MultiPoly& cl = c[tidx(x, y, l)];
      for (int m : nz[l * kDim + z]) jac[m] += cl * c[tidx(l, z, m)];
    }
  };
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (int k = j + 1; k < kDim; ++k) {
        std::vector<MultiPoly> jac(kDim);
        accumulate(i, j, k, jac);
        accumulate(j, k, i, jac);
        accumulate(k, i, j, jac);
        for (auto& p : jac)
          if (!p.is_zero()) all.push_back(std::move(p));
      }
  return reduce_poly_list(all);
}

std::vector<MultiPoly> paper_system() {
  auto v = [](const char* n) { return MultiPoly::variable(n); };
  Rational half(1, 2), quarter(1, 4);
  std::vector<MultiPoly> sys;
  sys.push_back(v("d"));
  sys.push_back(v("a") + half * (v("a1") * v("a3")) - quarter * (v("a3") * v("a3")));
  sys.push_back(v("b") + Rational(2) * v("c") + half * (v("a2") * v("a3")));
  sys.push_back(v("b") + v("a1") * v("a2") - half * (v("a2") * v("a3")));
  sys.push_back(Rational(-1, 2) * (v("b") * v("a3")) + v("a") * v("a2"));
  return sys;
}

Parametrization parametrize_semilinear(const std::vector<MultiPoly>& sys,
                                       const std::vector<std::string>& solve_vars) {
  Parametrization out;
  auto solve_index = [&](const std::string& name) -> int {
    auto it = std::find(solve_vars.begin(), solve_vars.end(), name);
    return it == solve_vars.end() ? -1 : static_cast<int>(it - solve_vars.begin());
  };

  // Split the system into rows that are linear with rational coefficients
  // in the solve variables, and the rest.
  struct LinRow {
    Vec coeffs;     // over solve_vars
    MultiPoly rhs;  // minus the free-variable part
  };
  std::vector<LinRow> lin;
  std::vector<MultiPoly> rest;
  for (const auto& p : sys) {
    Vec coeffs(solve_vars.size(), Rational(0));
    MultiPoly free_part;
    bool semilinear = true;
    const auto& vars = p.variables();
    for (const auto& [e, coef] : p.terms()) {
      int solve_deg = 0, solve_var = -1;
      bool mixed = false;
      for (size_t t = 0; t < vars.size(); ++t) {
        if (e[t] == 0) continue;
        int si = solve_index(vars[t]);
        if (si >= 0) {
          solve_deg += e[t];
          solve_var = si;
          if (e[t] > 1) mixed = true;
        }
      }
      if (solve_deg == 0) {
        MultiPoly term = MultiPoly::constant(coef);
        for (size_t t = 0; t < vars.size(); ++t)
          if (e[t] > 0) term = term * MultiPoly::variable(vars[t]).pow(e[t]);
        free_part += term;
      } else if (solve_deg == 1 && !mixed) {
        // must be exactly coef * v: no free variables in the same term
        bool pure = true;
        for (size_t t = 0; t < vars.size(); ++t)
          if (e[t] > 0 && solve_index(vars[t]) < 0) pure = false;
        if (!pure) {
          semilinear = false;
          break;
        }
        coeffs[solve_var] += coef;
      } else {
        semilinear = false;
        break;
      }
    }
    if (semilinear)
      lin.push_back({std::move(coeffs), -free_part});
    else
      rest.push_back(p);
  }

  // Gauss-Jordan on the rational coefficient block, carrying the
  // polynomial right-hand sides along.
  size_t ns = solve_vars.size();
  std::vector<bool> row_used(lin.size(), false);
  std::vector<int> pivot_row(ns, -1);
  for (size_t col = 0; col < ns; ++col) {
    int pr = -1;
    for (size_t r = 0; r < lin.size(); ++r)
      if (!row_used[r] && !lin[r].coeffs[col].is_zero()) {
        pr = static_cast<int>(r);
        break;
      }
    if (pr < 0) continue;
    row_used[pr] = true;
    pivot_row[col] = pr;
    Rational inv = lin[pr].coeffs[col].inverse();
    for (auto& x : lin[pr].coeffs) x *= inv;
    lin[pr].rhs = inv * lin[pr].rhs;
    for (size_t r = 0; r < lin.size(); ++r) {
      if (static_cast<int>(r) == pr || lin[r].coeffs[col].is_zero()) continue;
      Rational f = lin[r].coeffs[col];
      for (size_t t = 0; t < ns; ++t) lin[r].coeffs[t] -= f * lin[pr].coeffs[t];
      lin[r].rhs -= f * lin[pr].rhs;
    }
  }
  // Unpivoted nonzero rows impose conditions purely on the free variables.
  for (size_t r = 0; r < lin.size(); ++r)
    if (!row_used[r] && !lin[r].rhs.is_zero()) rest.push_back(-lin[r].rhs);

  out.exhaustive = true;
  for (size_t col = 0; col < ns; ++col) {
    if (pivot_row[col] < 0) {
      out.exhaustive = false;
      continue;
    }
    const LinRow& row = lin[pivot_row[col]];
    MultiPoly value = row.rhs;
    for (size_t t = 0; t < ns; ++t)
      if (t != col && !row.coeffs[t].is_zero())
        value -= row.coeffs[t] * MultiPoly::variable(solve_vars[t]);
    out.assignment[solve_vars[col]] = value;
    out.solved_vars.push_back(solve_vars[col]);
  }
  std::set<std::string> free_set;
  for (const auto& p : sys)
    for (const auto& v2 : p.variables())
      if (out.assignment.find(v2) == out.assignment.end()) free_set.insert(v2);
  out.free_vars.assign(free_set.begin(), free_set.end());

  out.residuals_vanish = true;
  for (const auto& p : sys) {
    MultiPoly s = p.substitute(out.assignment);
    if (!s.is_zero()) out.residuals_vanish = false;
    out.substituted.push_back(std::move(s));
  }
  return out;
}

Parametrization solve_paper_system() {
  return parametrize_semilinear(paper_system(), {"a", "b", "c", "d"});
}

std::array<Rational, 7> complete_params(const Rational& a1, const Rational& a2,
                                        const Rational& a3) {
  static const Parametrization par = solve_paper_system();
  std::map<std::string, Rational> assign = {{"a1", a1}, {"a2", a2}, {"a3", a3}};
  std::array<Rational, 7> out;
  for (int i = 0; i < 7; ++i) {
    std::string name = kParamNames[i];
    auto it = par.assignment.find(name);
    if (it != par.assignment.end())
      out[i] = it->second.eval(assign);
    else
      out[i] = assign.at(name);
  }
  return out;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 25) - 12;
  long den = static_cast<long>(rng() % 4) + 1;
  return Rational(num, den);
}

std::map<std::string, Rational> point_from_parametrization(const Parametrization& par,
                                                           std::mt19937_64& rng) {
  std::map<std::string, Rational> pt;
  for (const auto& v : par.free_vars) pt[v] = random_rational(rng);
  // Guarantee every canonical variable has a value.
  for (const auto& name : kParamNames)
    if (pt.find(name) == pt.end() && par.assignment.find(name) == par.assignment.end())
      pt[name] = random_rational(rng);
  for (const auto& [v, poly] : par.assignment) pt[v] = poly.eval(pt);
  return pt;
}

bool satisfies(const std::vector<MultiPoly>& sys, const std::map<std::string, Rational>& pt) {
  for (const auto& p : sys)
    if (!p.eval(pt).is_zero()) return false;
  return true;
}

}  // namespace

EquivalenceReport constraints_equivalent(const std::vector<MultiPoly>& s1,
                                         const std::vector<MultiPoly>& s2, int samples,
                                         std::uint64_t seed) {
  std::vector<std::string> solve_vars = {"a", "b", "c", "d"};
  Parametrization p1 = parametrize_semilinear(s1, solve_vars);
  Parametrization p2 = parametrize_semilinear(s2, solve_vars);

  EquivalenceReport rep{};
  rep.samples = 0;
  rep.mismatches = 0;

  // Exact directions by substitution.
  auto exact_direction = [](const std::vector<MultiPoly>& target, const Parametrization& par,
                            bool par_valid) {
    if (!par_valid) return false;
    for (const auto& p : target)
      if (!p.substitute(par.assignment).is_zero()) return false;
    return true;
  };
  bool p1_valid = p1.residuals_vanish;
  bool p2_valid = p2.residuals_vanish;
  rep.forward_exact = exact_direction(s1, p2, p2_valid);
  rep.backward_exact = exact_direction(s2, p1, p1_valid);

  // Sampling both ways.
  std::mt19937_64 rng(seed);
  auto sample_side = [&](const Parametrization& par, bool par_valid,
                         const std::vector<MultiPoly>& own, const std::vector<MultiPoly>& other) {
    if (!par_valid) return;
    for (int s = 0; s < samples; ++s) {
      auto pt = point_from_parametrization(par, rng);
      if (!satisfies(own, pt)) continue;  // parametrization residual guard
      ++rep.samples;
      if (!satisfies(other, pt)) {
        ++rep.mismatches;
        if (!rep.counterexample) rep.counterexample = pt;
      }
    }
  };
  sample_side(p2, p2_valid, s2, s1);
  sample_side(p1, p1_valid, s1, s2);

  if (rep.forward_exact && rep.backward_exact && rep.mismatches == 0)
    rep.verdict = "equivalent (exact+sampled)";
  else {
    rep.verdict = "inequivalent";
    // Hunt a concrete witness if sampling has not found one yet.
    if (!rep.counterexample) {
      for (int attempt = 0; attempt < 4 * samples && !rep.counterexample; ++attempt) {
        const Parametrization& par = !rep.backward_exact && p1_valid ? p1 : p2;
        const std::vector<MultiPoly>& own = !rep.backward_exact && p1_valid ? s1 : s2;
        const std::vector<MultiPoly>& other = !rep.backward_exact && p1_valid ? s2 : s1;
        auto pt = point_from_parametrization(par, rng);
        if (satisfies(own, pt) && !satisfies(other, pt)) rep.counterexample = pt;
      }
    }
  }
  return rep;
}

namespace {

struct ComplementAnalysis {
  ComplementFamily comp;
  FamilyAlgebra fam;
  std::vector<SymmetryVerdict::Branch> branches;  // nonzero residual polynomials
};

// Residual polynomials of the m-projection of [m_t, m_t] in the complement
// parameter(s); one variable t per family direction.
ComplementAnalysis analyze_complements(const std::array<Rational, 7>& params) {
  ComplementAnalysis an{ComplementFamily{Subspace(kDim), Matrix(), {}, {}, {}}, build(params), {}};
  auto comp = invariant_complements(an.fam.algebra, an.fam.h);
  if (!comp) throw std::logic_error("symmetry_status: no invariant complement exists");
  an.comp = std::move(*comp);
  int f = static_cast<int>(an.comp.deltas.size());
  if (f > 1)
    throw std::logic_error("symmetry_status: complement family has more than one parameter");

  const LieAlgebra& g = an.fam.algebra;
  MultiPoly t = MultiPoly::variable("t");
  for (int i = 0; i < kMDim; ++i)
    for (int j = i + 1; j < kMDim; ++j) {
      Vec xi = an.comp.sigma0.col(i), xj = an.comp.sigma0.col(j);
      Vec p0 = g.bracket(xi, xj);
      Vec p1(kDim), p2(kDim);
      if (f == 1) {
        Vec di = an.comp.deltas[0].col(i), dj = an.comp.deltas[0].col(j);
        p1 = g.bracket(di, xj) + g.bracket(xi, dj);
        p2 = g.bracket(di, dj);
      }
      for (int r = 0; r < kMDim; ++r) {
        MultiPoly poly = MultiPoly::constant(p0[kHDim + r]);
        if (f == 1) {
          poly += p1[kHDim + r] * t;
          poly += p2[kHDim + r] * (t * t);
        }
        if (!poly.is_zero()) an.branches.push_back({i, j, r, std::move(poly)});
      }
    }
  return an;
}

}  // namespace

SymmetryVerdict symmetry_status(const std::array<Rational, 7>& params) {
  // Parameters must lie on the constraint variety.
  std::map<std::string, Rational> assign;
  for (int i = 0; i < 7; ++i) assign[kParamNames[i]] = params[i];
  for (const auto& p : paper_system())
    if (!p.eval(assign).is_zero())
      throw std::invalid_argument("symmetry_status: not a Lie algebra (constraint '" + p.str() +
                                  "' violated)");

  ComplementAnalysis an = analyze_complements(params);
  SymmetryVerdict v{};
  v.complement_family_dim = static_cast<int>(an.comp.deltas.size());
  v.universal_single_pair = false;

  // Every complement contains the imaginary block iff the family directions
  // vanish there and the base complement contains it.
  v.imaginary_block_in_every_complement = true;
  for (int u = 0; u < 3 && v.imaginary_block_in_every_complement; ++u)
    for (int b = 1; b < 4 && v.imaginary_block_in_every_complement; ++b) {
      int col = 4 * u + b;
      Vec base_col = an.comp.sigma0.col(col);
      if (base_col != basis_vec(kDim, m_index(u, b)))
        v.imaginary_block_in_every_complement = false;
      for (const auto& phi : an.comp.phis)
        if (!is_zero(phi.col(col))) v.imaginary_block_in_every_complement = false;
    }

  if (an.branches.empty()) {
    v.status = SymmetryVerdict::Status::Symmetric;
    v.closing_parameter = 0;
    v.closing_complement = an.comp.base;
    v.note = "every invariant complement brackets into h";
    return v;
  }

  if (v.complement_family_dim == 0) {
    v.status = SymmetryVerdict::Status::NonSymmetric;
    v.witnesses = an.branches;
    v.universal_single_pair = true;
    v.note = "the unique invariant complement does not bracket into h";
    return v;
  }

  // Common rational roots of all residual polynomials.
  bool first = true;
  std::set<Rational> common;
  bool some_rootfree = false;
  for (const auto& br : an.branches) {
    auto rr = rational_roots(br.poly);
    std::set<Rational> roots;
    for (const auto& [r, m] : rr.roots) roots.insert(r);
    if (roots.empty()) some_rootfree = true;
    if (first) {
      common = roots;
      first = false;
    } else {
      std::set<Rational> inter;
      for (const auto& r : common)
        if (roots.count(r)) inter.insert(r);
      common = std::move(inter);
    }
    if (common.empty() && some_rootfree) break;
  }

  if (!common.empty()) {
    Rational tstar = *common.begin();
    v.status = SymmetryVerdict::Status::Symmetric;
    v.closing_parameter = tstar;
    std::vector<Vec> cols;
    for (int c = 0; c < kMDim; ++c)
      cols.push_back(an.comp.sigma0.col(c) + tstar * an.comp.deltas[0].col(c));
    v.closing_complement = Subspace::span(kDim, cols);
    v.note = "complement at t = " + tstar.str() + " brackets into h";
    return v;
  }

  // No rational parameter closes. Look for a universal single-pair
  // certificate, preferring constant branches.
  auto is_constant_nonzero = [](const MultiPoly& p) { return p.is_constant() && !p.is_zero(); };
  const SymmetryVerdict::Branch* universal = nullptr;
  for (const auto& br : an.branches)
    if (is_constant_nonzero(br.poly)) {
      universal = &br;
      break;
    }
  if (!universal)
    for (const auto& br : an.branches)
      if (rational_roots(br.poly).roots.empty()) {
        universal = &br;
        break;
      }

  // gcd of all branch polynomials decides whether an irrational common zero
  // could exist at all.
  auto poly_gcd = [](MultiPoly x, MultiPoly y) {
    // Euclidean algorithm on univariate polynomials in t.
    while (!y.is_zero()) {
      std::vector<Rational> xc = x.univariate_coeffs();
      std::vector<Rational> yc = y.univariate_coeffs();
      while (xc.size() >= yc.size() && !(xc.size() == 1 && xc[0].is_zero())) {
        Rational f = xc.back() / yc.back();
        size_t shift = xc.size() - yc.size();
        for (size_t n2 = 0; n2 < yc.size(); ++n2) xc[n2 + shift] -= f * yc[n2];
        while (xc.size() > 1 && xc.back().is_zero()) xc.pop_back();
        if (xc.back().is_zero()) break;  // remainder vanished
      }
      x = y;
      y = MultiPoly::from_univariate_coeffs(xc, "t");
    }
    return x;
  };
  MultiPoly g;
  for (const auto& br : an.branches) g = g.is_zero() ? br.poly : poly_gcd(g, br.poly);

  if (universal || g.is_constant()) {
    v.status = SymmetryVerdict::Status::NonSymmetric;
    if (universal) {
      v.universal_single_pair = true;
      v.witnesses.push_back(*universal);
    }
    // Add covering branches: one branch plus a refuter per rational root.
    if (!universal) {
      const auto& first_br = an.branches.front();
      v.witnesses.push_back(first_br);
      for (const auto& [root, mult] : rational_roots(first_br.poly).roots) {
        std::map<std::string, Rational> at = {{"t", root}};
        for (const auto& br : an.branches)
          if (!br.poly.eval(at).is_zero()) {
            v.witnesses.push_back(br);
            break;
          }
      }
    }
    v.note = universal ? "witness pair obstructs every complement parameter"
                       : "no parameter value (in any field) closes all bracket residuals";
    return v;
  }

  v.status = SymmetryVerdict::Status::UndecidedOverQ;
  v.note = "residual system has a common irrational zero candidate: gcd = " + g.str();
  return v;
}

MultiPoly complement_bracket_residual(const std::array<Rational, 7>& params, int i, int j,
                                      int coord) {
  ComplementAnalysis an = analyze_complements(params);
  for (const auto& br : an.branches)
    if (br.i == i && br.j == j && br.coord == coord) return br.poly;
  // Zero residual: reconstruct the (identically zero) polynomial.
  return MultiPoly();
}

Rational ad_equivariance_defect(const FamilyAlgebra& fam) {
  const LieAlgebra& g = fam.algebra;
  Rational worst = 0;
  for (int a = 0; a < kHDim; ++a)
    for (int i = kHDim; i < kDim; ++i)
      for (int j = kHDim; j < kDim; ++j) {
        Vec lhs = g.bracket(basis_vec(kDim, a), g.bracket_basis(i, j));
        Vec rhs = g.bracket(g.bracket_basis(a, i), basis_vec(kDim, j)) +
                  g.bracket(basis_vec(kDim, i), g.bracket_basis(a, j));
        Rational m = max_abs(lhs - rhs);
        if (m > worst) worst = m;
      }
  return worst;
}

namespace {

// The seven direction tensors as vectors in the Λ²m* ⊗ g unknown space.
Vec direction_as_altmap_vector(int alpha) {
  const FamilyTensors& t = family_tensors();
  Vec v(static_cast<size_t>(alt_pair_count(kMDim)) * kDim);
  for (int p = 0; p < kMDim; ++p)
    for (int q = p + 1; q < kMDim; ++q)
      for (int c = 0; c < kDim; ++c) {
        const Rational& x = t.dirs[alpha][tidx(kHDim + p, kHDim + q, c)];
        if (!x.is_zero()) v[static_cast<size_t>(alt_pair_index(p, q, kMDim)) * kDim + c] = x;
      }
  return v;
}

// The specialized example bracket, assembled from the displayed formula
// with unit coefficients rather than from the direction tensors.
Vec specialized_example_vector() {
  Vec v(static_cast<size_t>(alt_pair_count(kMDim)) * kDim);
  auto add = [&](int p, int q, int c, const Rational& val) {
    if (val.is_zero()) return;
    if (p < q)
      v[static_cast<size_t>(alt_pair_index(p, q, kMDim)) * kDim + c] += val;
    else if (q < p)
      v[static_cast<size_t>(alt_pair_index(q, p, kMDim)) * kDim + c] -= val;
  };
  for (int u = 0; u < 3; ++u)
    for (int bp = 0; bp < 4; ++bp)
      for (int vv = 0; vv < 3; ++vv)
        for (int bq = 0; bq < 4; ++bq) {
          int p = 4 * u + bp, q = 4 * vv + bq;
          if (p >= q) continue;
          Vec cr_uv = geo::lorentz_cross(basis_vec(3, u), basis_vec(3, vv));
          Rational p0 = bp == 0 ? 1 : 0, q0 = bq == 0 ? 1 : 0;
          Rational dot = (bp >= 1 && bp == bq) ? 1 : 0;
          Rational eta = eta3(u, vv);
          // <p⃗,q⃗> K(u x v)
          for (int k = 0; k < 3; ++k) add(p, q, k, dot * cr_uv[k]);
          // -1/2 eta(u,v) iota(p⃗ x q⃗)
          if (!eta.is_zero() && bp >= 1 && bq >= 1) {
            Vec cr_pq = geo::euclid_cross(basis_vec(3, bp - 1), basis_vec(3, bq - 1));
            for (int k = 0; k < 3; ++k) add(p, q, 3 + k, Rational(-1, 2) * eta * cr_pq[k]);
          }
          // (u x v)(p0 q0 - <p⃗,q⃗>)
          for (int w = 0; w < 3; ++w)
            add(p, q, m_index(w, 0) , (p0 * q0 - dot) * cr_uv[w]);
        }
  return v;
}

}  // namespace

BracketSpaceReport equivariant_bracket_space() {
  Representation src = h_representation_on_m();
  // Target: the adjoint action of h on the whole 18-dimensional algebra;
  // parameter-free, so any member of the family provides it.
  FamilyAlgebra zero = build({0, 0, 0, 0, 0, 0, 0});
  Representation tgt{src.algebra, kDim, {}};
  for (int a = 0; a < kHDim; ++a) tgt.action.push_back(zero.algebra.ad_basis(a));

  TensorSolveOptions opt;
  opt.force_exact = true;
  TensorSolveResult res = equivariant_alternating_maps(src, tgt, opt);

  BracketSpaceReport rep{};
  rep.dimension = res.dimension;

  std::vector<Vec> dirs;
  for (int al = 0; al < 7; ++al) dirs.push_back(direction_as_altmap_vector(al));

  rep.family_in_span = true;
  for (const auto& d : dirs)
    if (!coordinates_in_span(res.basis, d)) rep.family_in_span = false;
  rep.span_in_family = true;
  for (const auto& b : res.basis)
    if (!coordinates_in_span(dirs, b)) rep.span_in_family = false;

  // Projection onto the m-valued part.
  std::vector<Vec> projected;
  for (const auto& b : res.basis) {
    Vec p(b.size());
    for (size_t pos = 0; pos < b.size(); ++pos)
      if (static_cast<int>(pos % kDim) >= kHDim) p[pos] = b[pos];
    projected.push_back(std::move(p));
  }
  rep.m_part_dimension =
      static_cast<int>(rref_basis(projected, static_cast<int>(dirs[0].size())).size());

  Vec example = specialized_example_vector();
  rep.example_in_span = coordinates_in_span(res.basis, example).has_value();
  if (auto coords = coordinates_in_span(dirs, example)) {
    std::array<Rational, 7> tuple;
    for (int i = 0; i < 7; ++i) tuple[i] = (*coords)[i];
    rep.example_coefficients = tuple;
  }
  return rep;
}

std::vector<SweepRow> classify_sweep(const std::vector<std::array<Rational, 3>>& grid) {
  std::vector<SweepRow> rows;
  for (const auto& fv : grid) {
    SweepRow row;
    row.free_values = fv;
    row.params = complete_params(fv[0], fv[1], fv[2]);
    FamilyAlgebra fam = build(row.params);
    row.jacobi_zero = jacobi_defect(fam.algebra).holds();
    SymmetryVerdict v = symmetry_status(row.params);
    switch (v.status) {
      case SymmetryVerdict::Status::Symmetric:
        row.verdict = "symmetric";
        row.witness_summary = "closes at t = " + v.closing_parameter->str();
        break;
      case SymmetryVerdict::Status::NonSymmetric: {
        row.verdict = "non-symmetric";
        std::ostringstream os;
        if (!v.witnesses.empty()) {
          const auto& w = v.witnesses.front();
          os << "pair (" << w.i << "," << w.j << ") coord " << w.coord << ": " << w.poly.str();
        }
        row.witness_summary = os.str();
        break;
      }
      case SymmetryVerdict::Status::UndecidedOverQ:
        row.verdict = "undecided-over-Q";
        row.witness_summary = v.note;
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qhs::family
