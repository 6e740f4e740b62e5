#include "qhs/geo.hpp"

#include <stdexcept>
#include <string>

namespace qhs::geo {

namespace {

void require_dim(const Vec& v, size_t n, const char* what) {
  if (v.size() != n) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

int eps3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // parity of the permutation (a,b,c) of (0,1,2)
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

Matrix minkowski_metric(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("minkowski_metric: negative signature");
  Matrix m(p + q, p + q);
  for (int i = 0; i < p; ++i) m(i, i) = -1;
  for (int i = p; i < p + q; ++i) m(i, i) = 1;
  return m;
}

Vec lorentz_cross(const Vec& u, const Vec& v) {
  require_dim(u, 3, "lorentz_cross");
  require_dim(v, 3, "lorentz_cross");
  // eta = diag(-1,1,1); (u x v)^a = eta^{aa} eps_{acd} u^c v^d
  Vec r(3);
  for (int a = 0; a < 3; ++a) {
    Rational s = 0;
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) {
        int e = eps3(a, c, d);
        if (e) s += Rational(e) * u[c] * v[d];
      }
    r[a] = (a == 0) ? -s : s;
  }
  return r;
}

Matrix k_iso(const Vec& u) {
  require_dim(u, 3, "k_iso");
  Matrix m(3, 3);
  for (int b = 0; b < 3; ++b) {
    Vec col = lorentz_cross(u, basis_vec(3, b));
    for (int a = 0; a < 3; ++a) m(a, b) = col[a];
  }
  return m;
}

Vec euclid_cross(const Vec& p, const Vec& q) {
  require_dim(p, 3, "euclid_cross");
  require_dim(q, 3, "euclid_cross");
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

Vec quat_mul(const Vec& p, const Vec& q) {
  require_dim(p, 4, "quat_mul");
  require_dim(q, 4, "quat_mul");
  Vec pv = {p[1], p[2], p[3]}, qv = {q[1], q[2], q[3]};
  Vec cross = euclid_cross(pv, qv);
  Rational dot = pv[0] * qv[0] + pv[1] * qv[1] + pv[2] * qv[2];
  Vec r(4);
  r[0] = p[0] * q[0] - dot;
  for (int m = 0; m < 3; ++m) r[m + 1] = p[0] * qv[m] + q[0] * pv[m] + cross[m];
  return r;
}

Matrix quat_left(const Vec& q) {
  Matrix m(4, 4);
  for (int b = 0; b < 4; ++b) {
    Vec col = quat_mul(q, basis_vec(4, b));
    for (int a = 0; a < 4; ++a) m(a, b) = col[a];
  }
  return m;
}

Matrix quat_right(const Vec& q) {
  Matrix m(4, 4);
  for (int b = 0; b < 4; ++b) {
    Vec col = quat_mul(basis_vec(4, b), q);
    for (int a = 0; a < 4; ++a) m(a, b) = col[a];
  }
  return m;
}

LieAlgebra c_algebra() {
  LieAlgebra l({"C1", "C2", "C3"});
  l.set_bracket(0, 1, {0, 0, 2});
  l.set_bracket(1, 2, {2, 0, 0});
  l.set_bracket(2, 0, {0, 2, 0});
  return l;
}

Vec iota(const Vec& x) {
  require_dim(x, 3, "iota");
  return x;
}

LieAlgebra sp1_algebra() {
  LieAlgebra l({"i", "j", "k"});
  l.set_bracket(0, 1, {0, 0, 2});
  l.set_bracket(1, 2, {2, 0, 0});
  l.set_bracket(2, 0, {0, 2, 0});
  return l;
}

LieAlgebra so3_algebra() {
  LieAlgebra l({"e1", "e2", "e3"});
  l.set_bracket(0, 1, {0, 0, 1});
  l.set_bracket(1, 2, {1, 0, 0});
  l.set_bracket(2, 0, {0, 1, 0});
  return l;
}

Matrix c_action(int m, int n) {
  if (m < 0 || m > 2) throw std::invalid_argument("c_action: generator index");
  Vec em(4);
  em[m + 1] = 1;
  Matrix block = quat_left(em) - quat_right(em);
  return Matrix::identity(n + 1).kron(block);
}

AlgebraRep so_pq(int p, int q) {
  int n = p + q;
  if (n < 2) throw std::invalid_argument("so_pq: need p+q >= 2");
  Matrix eta = minkowski_metric(p, q);
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Matrix m(n, n);
      m(a, b) = eta(b, b);
      m(b, a) = -eta(a, a);
      basis.push_back(std::move(m));
      names.push_back("M" + std::to_string(a) + std::to_string(b));
    }
  LieAlgebra alg = algebra_from_matrices(names, basis);
  return {alg, {alg, n, basis}};
}

namespace {

// Real 4N x 4N matrix of a quaternionic N x N matrix acting by left
// multiplication on each 4-block.
Matrix realify(const std::vector<std::vector<Vec>>& q) {
  int nn = static_cast<int>(q.size());
  Matrix m(4 * nn, 4 * nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      if (qhs::is_zero(q[i][j])) continue;
      Matrix b = quat_left(q[i][j]);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(4 * i + r, 4 * j + c) = b(r, c);
    }
  return m;
}

Vec quat_conj(const Vec& v) { return {v[0], -v[1], -v[2], -v[3]}; }

Vec quat_unit(int beta) { return basis_vec(4, beta); }

std::vector<std::vector<Vec>> zero_quat_matrix(int nn) {
  return std::vector<std::vector<Vec>>(nn, std::vector<Vec>(nn, Vec(4)));
}

const char* kBetaName[] = {"1", "i", "j", "k"};

// Basis of sp(1,n): quaternionic A with conj(A)^T eta + eta A = 0,
// eta = diag(-1, 1, ..., 1).
void sp_basis(int n, std::vector<Matrix>& basis, std::vector<std::string>& names,
              const std::vector<int>& betas_offdiag, bool imaginary_diagonal) {
  int nn = n + 1;
  auto eta = [&](int i) { return i == 0 ? -1 : 1; };
  if (imaginary_diagonal) {
    for (int i = 0; i < nn; ++i)
      for (int b = 1; b <= 3; ++b) {
        auto q = zero_quat_matrix(nn);
        q[i][i] = quat_unit(b);
        basis.push_back(realify(q));
        names.push_back("D" + std::to_string(i) + kBetaName[b]);
      }
  }
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      for (int b : betas_offdiag) {
        auto q = zero_quat_matrix(nn);
        q[i][j] = quat_unit(b);
        q[j][i] = Rational(-eta(i) * eta(j)) * quat_conj(quat_unit(b));
        basis.push_back(realify(q));
        names.push_back("X" + std::to_string(i) + std::to_string(j) + kBetaName[b]);
      }
}

}  // namespace

AlgebraRep sp1n(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("sp1n: n out of the configured 1..3 range");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  sp_basis(n, basis, names, {0, 1, 2, 3}, true);
  LieAlgebra alg = algebra_from_matrices(names, basis);
  return {alg, {alg, 4 * (n + 1), basis}};
}

AlgebraRep su1n(int n) {
  int nn = n + 1;
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  // Complex off-diagonal part (entries in span{1, i}).
  sp_basis(n, basis, names, {0, 1}, false);
  // Traceless imaginary diagonal i(E_ii - E_{i+1,i+1}).
  for (int i = 0; i + 1 < nn; ++i) {
    auto q = zero_quat_matrix(nn);
    q[i][i] = quat_unit(1);
    q[i + 1][i + 1] = Rational(-1) * quat_unit(1);
    basis.push_back(realify(q));
    names.push_back("T" + std::to_string(i));
  }
  LieAlgebra alg = algebra_from_matrices(names, basis);
  return {alg, {alg, 4 * nn, basis}};
}

AlgebraRep u1n(int n) {
  int nn = n + 1;
  auto su = su1n(n);
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (size_t i = 0; i < su.rep.action.size(); ++i) {
    basis.push_back(su.rep.action[i]);
    names.push_back(su.algebra.basis_names()[i]);
  }
  auto q = zero_quat_matrix(nn);
  for (int i = 0; i < nn; ++i) q[i][i] = quat_unit(1);
  basis.push_back(realify(q));
  names.push_back("Z");
  LieAlgebra alg = algebra_from_matrices(names, basis);
  return {alg, {alg, 4 * nn, basis}};
}

AlgebraRep u1_scalar(int n) {
  int nn = n + 1;
  auto q = zero_quat_matrix(nn);
  for (int i = 0; i < nn; ++i) q[i][i] = quat_unit(1);
  LieAlgebra alg = algebra_from_matrices({"i1"}, {realify(q)});
  return {alg, {alg, 4 * nn, {realify(q)}}};
}

AlgebraRep sp1_scalar(int n) {
  int nn = n + 1;
  std::vector<Matrix> basis;
  for (int b = 1; b <= 3; ++b) {
    auto q = zero_quat_matrix(nn);
    for (int i = 0; i < nn; ++i) q[i][i] = quat_unit(b);
    basis.push_back(realify(q));
  }
  LieAlgebra alg = algebra_from_matrices({"i1", "j1", "k1"}, basis);
  return {alg, {alg, 4 * nn, basis}};
}

AlgebraRep so1n_on_quaternionic(int n) {
  auto so = so_pq(1, n);
  std::vector<Matrix> basis;
  Matrix id4 = Matrix::identity(4);
  for (const auto& m : so.rep.action) basis.push_back(m.kron(id4));
  return {so.algebra, {so.algebra, 4 * (n + 1), basis}};
}

QuaternionicModule quaternionic_module(int n) {
  if (n < 1) throw std::invalid_argument("quaternionic_module: n >= 1");
  QuaternionicModule q{n, 4 * (n + 1), Matrix(), Matrix(), Matrix(), Matrix()};
  Matrix id = Matrix::identity(n + 1);
  // Right multiplication by the conjugates: with I = R(-i) etc. the
  // operator products satisfy I J = K (right multiplications reverse
  // quaternion products).
  q.I = id.kron(quat_right(Rational(-1) * quat_unit(1)));
  q.J = id.kron(quat_right(Rational(-1) * quat_unit(2)));
  q.K = id.kron(quat_right(Rational(-1) * quat_unit(3)));
  q.G = minkowski_metric(1, n).kron(Matrix::identity(4));
  return q;
}

std::vector<Matrix> right_sp1_matrices(int n) {
  auto q = quaternionic_module(n);
  return {q.I, q.J, q.K};
}

}  // namespace qhs::geo
