#include "qhs/fourform.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhs {

Rational FourForm::eval(int a, int b, int c, int d) const {
  std::array<int, 4> idx = {a, b, c, d};
  // Sort and track the permutation sign; repeated indices kill the value.
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3 - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (int i = 0; i + 1 < 4; ++i)
    if (idx[i] == idx[i + 1]) return 0;
  auto it = coeff.find(idx);
  if (it == coeff.end()) return 0;
  return Rational(sign) * it->second;
}

Matrix two_form(const Matrix& a, const Matrix& g) { return a.transpose() * g; }

FourForm fundamental_4form(const geo::QuaternionicModule& q) {
  FourForm out;
  out.dim = q.dim;
  std::array<Matrix, 3> omegas = {two_form(q.I, q.G), two_form(q.J, q.G), two_form(q.K, q.G)};
  for (const auto& w : omegas)
    if (!(w + w.transpose()).is_zero())
      throw std::logic_error("fundamental_4form: omega is not antisymmetric");
  for (int a = 0; a < q.dim; ++a)
    for (int b = a + 1; b < q.dim; ++b)
      for (int c = b + 1; c < q.dim; ++c)
        for (int d = c + 1; d < q.dim; ++d) {
          Rational v = 0;
          for (const auto& w : omegas)
            v += Rational(2) * (w(a, b) * w(c, d) - w(a, c) * w(b, d) + w(a, d) * w(b, c));
          if (!v.is_zero()) out.coeff[{a, b, c, d}] = v;
        }
  return out;
}

Rational four_form_invariance_defect(const FourForm& omega, const Matrix& x) {
  if (x.rows() != omega.dim || x.cols() != omega.dim)
    throw std::invalid_argument("four_form_invariance_defect: shape mismatch");
  int n = omega.dim;
  // Sparse columns of X.
  std::vector<std::vector<std::pair<int, Rational>>> xcols(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!x(j, i).is_zero()) xcols[i].emplace_back(j, x(j, i));
  Rational worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Rational s = 0;
          for (const auto& [j, v] : xcols[a]) s += v * omega.eval(j, b, c, d);
          for (const auto& [j, v] : xcols[b]) s += v * omega.eval(a, j, c, d);
          for (const auto& [j, v] : xcols[c]) s += v * omega.eval(a, b, j, d);
          for (const auto& [j, v] : xcols[d]) s += v * omega.eval(a, b, c, j);
          Rational m = abs(s);
          if (m > worst) worst = m;
        }
  return worst;
}

}  // namespace qhs
