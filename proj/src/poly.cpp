#include "qhs/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhs/linalg.hpp"

namespace qhs {

namespace {

int var_rank(const std::string& v) {
  static const std::map<std::string, int> canon = {{"a", 0},  {"b", 1},  {"c", 2}, {"d", 3},
                                                   {"a1", 4}, {"a2", 5}, {"a3", 6}};
  auto it = canon.find(v);
  return it == canon.end() ? 7 : it->second;
}

bool var_less(const std::string& x, const std::string& y) {
  int rx = var_rank(x), ry = var_rank(y);
  if (rx != ry) return rx < ry;
  return x < y;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_[{}] = c;
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("MultiPoly: empty variable name");
  MultiPoly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!vars_.empty()) throw std::invalid_argument("MultiPoly: not a constant");
  return terms_.begin()->second;
}

void MultiPoly::normalize() {
  // Drop zero coefficients, then prune variables that no longer occur.
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  std::vector<int> keep;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) {
      nv.push_back(vars_[i]);
      keep.push_back(static_cast<int>(i));
    }
  std::map<Exponents, Rational> nt;
  for (auto& [e, c] : terms_) {
    Exponents ne(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
    nt[std::move(ne)] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

namespace {

// Remaps a term's exponent vector from `from` variables to `to` (a superset).
MultiPoly::Exponents remap(const MultiPoly::Exponents& e, const std::vector<std::string>& from,
                           const std::vector<std::string>& to) {
  MultiPoly::Exponents r(to.size(), 0);
  for (size_t i = 0; i < from.size(); ++i) {
    if (e[i] == 0) continue;
    auto it = std::find(to.begin(), to.end(), from[i]);
    r[it - to.begin()] = e[i];
  }
  return r;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> m = a;
  for (const auto& v : b)
    if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
  std::sort(m.begin(), m.end(), var_less);
  return m;
}

}  // namespace

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  auto mv = merge_vars(vars_, o.vars_);
  std::map<Exponents, Rational> nt;
  for (const auto& [e, c] : terms_) nt[remap(e, vars_, mv)] += c;
  for (const auto& [e, c] : o.terms_) nt[remap(e, o.vars_, mv)] += c;
  vars_ = std::move(mv);
  terms_ = std::move(nt);
  normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  auto mv = merge_vars(a.vars_, b.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    auto ra = remap(ea, a.vars_, mv);
    for (const auto& [eb, cb] : b.terms_) {
      auto rb = remap(eb, b.vars_, mv);
      MultiPoly::Exponents e(mv.size());
      for (size_t i = 0; i < mv.size(); ++i) e[i] = ra[i] + rb[i];
      r.terms_[std::move(e)] += ca * cb;
    }
  }
  r.vars_ = std::move(mv);
  r.normalize();
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly r = p;
  for (auto& [e, v] : r.terms_) v *= c;
  r.normalize();
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> vals(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it == assignment.end())
      throw std::invalid_argument("MultiPoly::eval: missing variable '" + vars_[i] + "'");
    vals[i] = it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= vals[i];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& subs) const {
  MultiPoly sum;
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = subs.find(vars_[i]);
      MultiPoly base = it == subs.end() ? variable(vars_[i]) : it->second;
      t = t * base.pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

int MultiPoly::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  size_t idx = it - vars_.begin();
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

std::vector<Rational> MultiPoly::univariate_coeffs() const {
  if (vars_.size() > 1) throw std::invalid_argument("MultiPoly: not univariate");
  if (terms_.empty()) return {};
  if (vars_.empty()) return {terms_.begin()->second};
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[0]);
  std::vector<Rational> coeffs(deg + 1);
  for (const auto& [e, c] : terms_) coeffs[e[0]] = c;
  return coeffs;
}

MultiPoly MultiPoly::from_univariate_coeffs(const std::vector<Rational>& coeffs,
                                            const std::string& var) {
  MultiPoly p;
  p.vars_ = {var};
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) p.terms_[{static_cast<int>(i)}] = coeffs[i];
  p.normalize();
  return p;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Iterate descending in the term order (leading monomial first).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational ac = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_monomial = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    if (!has_monomial) {
      os << ac.str();
      continue;
    }
    if (ac != Rational(1)) os << ac.str() << "*";
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) throw std::invalid_argument("divisors of zero");
  std::vector<std::pair<mpz_class, int>> factors;
  for (long d = 2; d <= 1000000 && mpz_class(d) * d <= n; ++d) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) {
    if (n > mpz_class("1000000000000") &&
        mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw std::invalid_argument("rational_roots: coefficient too large to factor");
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs = {1};
  for (const auto& [p, e] : factors) {
    size_t sz = divs.size();
    mpz_class pe = 1;
    for (int k = 1; k <= e; ++k) {
      pe *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Exact division of ascending-coefficient polynomials; remainder must vanish.
std::vector<Rational> divide_out_root(const std::vector<Rational>& coeffs, const Rational& r) {
  // Synthetic division by (x - r).
  std::vector<Rational> q(coeffs.size() - 1);
  Rational carry = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i) {
    carry = coeffs[i] + r * carry;
    q[i - 1] = carry;
  }
  return q;
}

Rational eval_coeffs(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational v = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) v = v * x + coeffs[i];
  return v;
}

}  // namespace

RationalRoots rational_roots(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> coeffs = p.univariate_coeffs();
  std::string var = p.variables().empty() ? "x" : p.variables()[0];
  RationalRoots out;

  // Strip the power-of-x factor: roots at zero.
  int zero_mult = 0;
  while (zero_mult < static_cast<int>(coeffs.size()) && coeffs[zero_mult].is_zero()) ++zero_mult;
  std::vector<Rational> work(coeffs.begin() + zero_mult, coeffs.end());
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);

  if (work.size() > 1) {
    // Scale to a primitive integer polynomial for divisor enumeration.
    mpz_class lcm = 1;
    for (const auto& c : work) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> zc(work.size());
    for (size_t i = 0; i < work.size(); ++i) zc[i] = work[i].numerator() * (lcm / work[i].denominator());
    auto p_divs = positive_divisors(zc.front());
    auto q_divs = positive_divisors(zc.back());
    std::set<Rational> candidates;
    for (const auto& pn : p_divs)
      for (const auto& qd : q_divs) {
        Rational r(mpq_class(pn, qd));
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates) {
      int mult = 0;
      while (work.size() > 1 && eval_coeffs(work, r).is_zero()) {
        work = divide_out_root(work, r);
        ++mult;
      }
      if (mult) out.roots.emplace_back(r, mult);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.cofactor = MultiPoly::from_univariate_coeffs(work, var);
  return out;
}

MultiPoly minimal_polynomial(const Matrix& m, const std::string& var) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: not square");
  int n = m.rows();
  std::vector<Vec> powers;  // flattened I, M, M^2, ...
  Matrix cur = Matrix::identity(n);
  for (int deg = 0; deg <= n; ++deg) {
    Vec flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(cur(i, j));
    if (auto coords = coordinates_in_span(powers, flat)) {
      std::vector<Rational> coeffs(deg + 1);
      for (int i = 0; i < deg; ++i) coeffs[i] = -(*coords)[i];
      coeffs[deg] = 1;
      return MultiPoly::from_univariate_coeffs(coeffs, var);
    }
    powers.push_back(std::move(flat));
    cur = cur * m;
  }
  throw std::logic_error("minimal_polynomial: no annihilator found");  // unreachable
}

Matrix poly_at_matrix(const MultiPoly& p, const Matrix& m) {
  auto coeffs = p.univariate_coeffs();
  int n = m.rows();
  Matrix acc(n, n);
  Matrix pw = Matrix::identity(n);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) acc += coeffs[i] * pw;
    if (i + 1 < coeffs.size()) pw = pw * m;
  }
  return acc;
}

}  // namespace qhs
