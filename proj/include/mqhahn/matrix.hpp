#pragma once

#include <vector>

#include "mqhahn/rational.hpp"

namespace mqhahn {

using Vec = std::vector<Rational>;

Rational dot(const Vec& u, const Vec& v);
Vec operator*(const Rational& c, const Vec& v);

// Dense square matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : n_(dim), e_(static_cast<std::size_t>(dim) * dim, Rational(0)) {}

  static Matrix identity(int dim);
  static Matrix scalar(int dim, const Rational& c);
  // |u><v| as a matrix: entry (i,j) = u_i * v_j.
  static Matrix outer(const Vec& u, const Vec& v);

  int dim() const { return n_; }

  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& m);
  friend Vec operator*(const Matrix& m, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  // True if the matrix equals c * I for some c (returned through c).
  bool is_scalar(Rational* c) const;

  Vec column(int j) const;
  void set_column(int j, const Vec& v);

  // Exact solution X of (*this) X = rhs by Gaussian elimination.
  // Throws SingularBasisMatrix if no unique solution exists.
  Matrix solve(const Matrix& rhs) const;
  Matrix inverse() const { return solve(identity(n_)); }

  // First nonzero entry as "(i,j)=value", or "" if zero; for failure reports.
  std::string first_nonzero() const;

 private:
  int n_ = 0;
  std::vector<Rational> e_;
};

}  // namespace mqhahn
