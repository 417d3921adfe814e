#pragma once
// Dense exact matrices and the few elimination routines the module code
// needs: reduced row echelon form, kernels, column spaces, linear solves.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace preproj {

using Rational = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols = -1) {
    int c = rows.empty() ? (cols < 0 ? 0 : cols) : static_cast<int>(rows[0].size());
    Matrix m(static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.r_; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const T& x : a_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix column(int j) const {
    Matrix v(r_, 1);
    for (int i = 0; i < r_; ++i) v(i, 0) = (*this)(i, j);
    return v;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw ConsistencyError("matrix shape mismatch in product");
    Matrix p(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const T& xik = x(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < y.c_; ++j)
          if (y(k, j) != 0) p(i, j) += xik * y(k, j);
      }
    return p;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw ConsistencyError("matrix shape mismatch in sum");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw ConsistencyError("matrix shape mismatch in difference");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }

  friend Matrix operator*(const T& s, Matrix x) {
    for (T& v : x.a_) v *= s;
    return x;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;

template <class T>
T trace(const Matrix<T>& m) {
  T t = 0;
  for (int i = 0; i < m.rows() && i < m.cols(); ++i) t += m(i, i);
  return t;
}

// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<int> rref_in_place(Matrix<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      T f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref_in_place(m).size());
}

// Columns form a basis of {x : m x = 0}, one per free variable.
template <class T>
Matrix<T> nullspace(Matrix<T> m) {
  const int n = m.cols();
  std::vector<int> piv = rref_in_place(m);
  std::vector<char> is_pivot(n, 0);
  for (int p : piv) is_pivot[p] = 1;
  Matrix<T> basis(n, n - static_cast<int>(piv.size()));
  int k = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -m(static_cast<int>(r), f);
    ++k;
  }
  return basis;
}

// Reduced column echelon basis of the column space of b.
template <class T>
Matrix<T> column_echelon_basis(const Matrix<T>& b) {
  Matrix<T> t = b.transpose();
  int r = static_cast<int>(rref_in_place(t).size());
  Matrix<T> out(b.rows(), r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < b.rows(); ++i) out(i, j) = t(j, i);
  return out;
}

// X with b X = c, for b of full column rank. Throws when c is outside the
// column space of b.
template <class T>
Matrix<T> solve_left(const Matrix<T>& b, const Matrix<T>& c) {
  if (b.rows() != c.rows()) throw ConsistencyError("shape mismatch in solve");
  Matrix<T> aug(b.rows(), b.cols() + c.cols());
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) aug(i, j) = b(i, j);
    for (int j = 0; j < c.cols(); ++j) aug(i, b.cols() + j) = c(i, j);
  }
  std::vector<int> piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) > b.cols() ||
      (!piv.empty() && piv.back() >= b.cols()))
    throw ConsistencyError("linear system has no solution");
  if (static_cast<int>(piv.size()) != b.cols()) throw ConsistencyError("basis is not independent");
  Matrix<T> x(b.cols(), c.cols());
  for (int i = 0; i < b.cols(); ++i)
    for (int j = 0; j < c.cols(); ++j) x(i, j) = aug(i, b.cols() + j);
  return x;
}

// Stacks matrices with equal column counts.
template <class T>
Matrix<T> vstack(const std::vector<Matrix<T>>& ms, int cols) {
  int rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Matrix<T> out(rows, cols);
  int r = 0;
  for (const auto& m : ms) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < cols; ++j) out(r + i, j) = m(i, j);
    r += m.rows();
  }
  return out;
}

inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw InputError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace preproj
