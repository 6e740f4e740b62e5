#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhs/matrix.hpp"

namespace qhs {

/// Multivariate polynomial with exact rational coefficients.
///
/// Normal form: the variable list is sorted (the coefficient names
/// a,b,c,d,a1,a2,a3 first, then everything else lexicographically), unused
/// variables are pruned and no zero coefficient is ever stored, so equality
/// of values is equality of representations.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;  // zero
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || vars_.empty(); }
  Rational constant_value() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int e) const;

  /// Exact evaluation; throws std::invalid_argument naming the first
  /// variable missing from the assignment.
  Rational eval(const std::map<std::string, Rational>& assignment) const;

  /// Substitutes polynomials for variables; unmapped variables survive.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& subs) const;

  int total_degree() const;
  int degree_in(const std::string& var) const;

  /// Ascending coefficient list of a polynomial in at most one variable.
  std::vector<Rational> univariate_coeffs() const;
  static MultiPoly from_univariate_coeffs(const std::vector<Rational>& coeffs,
                                          const std::string& var);

  std::string str() const;

 private:
  void normalize();

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

/// All rational roots of a nonzero polynomial in one variable, with
/// multiplicities, plus the root-free cofactor (the exact quotient by the
/// split part). Throws std::invalid_argument on the zero polynomial.
struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;
  MultiPoly cofactor;
};
RationalRoots rational_roots(const MultiPoly& p);

/// Monic least-degree univariate polynomial annihilating the square matrix.
MultiPoly minimal_polynomial(const Matrix& m, const std::string& var = "x");

/// Evaluates p(M) for a univariate p.
Matrix poly_at_matrix(const MultiPoly& p, const Matrix& m);

}  // namespace qhs
