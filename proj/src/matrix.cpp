#include "mqhahn/matrix.hpp"

#include <sstream>

#include "mqhahn/errors.hpp"

namespace mqhahn {

Rational dot(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw DimMismatch("dot: vector sizes differ");
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::scalar(int dim, const Rational& c) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = c;
  return m;
}

Matrix Matrix::outer(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw DimMismatch("outer: vector sizes differ");
  Matrix m(static_cast<int>(u.size()));
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j)
      m.at(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (n_ != o.n_) throw DimMismatch("matrix add: dims differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (n_ != o.n_) throw DimMismatch("matrix sub: dims differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw DimMismatch("matrix mul: dims differ");
  Matrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator*(const Rational& c, const Matrix& m) {
  Matrix r(m.n_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = c * m.e_[i];
  return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (static_cast<std::size_t>(m.n_) != v.size()) throw DimMismatch("matvec: dims differ");
  Vec r(v.size(), Rational(0));
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j) r[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.n_ == b.n_ && a.e_ == b.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_scalar(Rational* c) const {
  if (n_ == 0) return false;
  const Rational& d = at(0, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return false;
    }
  if (c) *c = d;
  return true;
}

Vec Matrix::column(int j) const {
  Vec v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
  return v;
}

void Matrix::set_column(int j, const Vec& v) {
  if (v.size() != static_cast<std::size_t>(n_)) throw DimMismatch("set_column: size");
  for (int i = 0; i < n_; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
}

Matrix Matrix::solve(const Matrix& rhs) const {
  if (n_ != rhs.n_) throw DimMismatch("solve: dims differ");
  Matrix a = *this;
  Matrix b = rhs;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularBasisMatrix("singular matrix in exact solve");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(b.at(pivot, j), b.at(col, j));
      }
    }
    Rational inv = a.at(col, col).inv();
    for (int j = 0; j < n_; ++j) {
      a.at(col, j) *= inv;
      b.at(col, j) *= inv;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      Rational f = a.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        b.at(r, j) -= f * b.at(col, j);
      }
    }
  }
  return b;
}

std::string Matrix::first_nonzero() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!at(i, j).is_zero()) {
        std::ostringstream os;
        os << "(" << i << "," << j << ")=" << at(i, j);
        return os.str();
      }
  return "";
}

}  // namespace mqhahn
