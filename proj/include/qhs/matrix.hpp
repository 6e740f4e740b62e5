#pragma once

#include <initializer_list>
#include <vector>

#include "qhs/rational.hpp"

namespace qhs {

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);
Rational max_abs(const Vec& v);

inline Vec basis_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  /// Builds a matrix from its columns.
  static Matrix from_columns(const std::vector<Vec>& cols);
  static Matrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Vec apply(const Vec& v) const;

  bool is_zero() const;
  Rational max_abs() const;

  /// a*b - b*a
  static Matrix commutator(const Matrix& a, const Matrix& b);
  /// Kronecker product (this ⊗ other).
  Matrix kron(const Matrix& other) const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace qhs
