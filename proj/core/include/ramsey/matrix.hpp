#pragma once

#include <initializer_list>
#include <vector>

#include "ramsey/numeric.hpp"

namespace ramsey {

// Dense row-major matrix over an exact scalar. Dimensions stay desk-scale
// (d <= 10 or so), so no sparsity and no cleverness.
template <typename T>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
    RK_CHECK(r >= 0 && c >= 0, "negative matrix dimension");
  }
  Matrix(int r, int c, std::initializer_list<T> vals) : Matrix(r, c) {
    RK_CHECK(static_cast<int>(vals.size()) == r * c, "matrix literal size mismatch");
    size_t i = 0;
    for (const T& v : vals) a[i++] = v;
  }

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  bool is_zero() const {
    for (const T& v : a)
      if (v != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  // a*I for some scalar a (includes the zero and identity matrices)
  bool is_scalar() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j ? at(i, j) != 0 : at(i, j) != at(0, 0)) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    RK_CHECK(x.cols == y.rows, "matrix product shape mismatch");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
      }
    return z;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    RK_CHECK(x.rows == y.rows && x.cols == y.cols, "matrix sum shape mismatch");
    Matrix z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    RK_CHECK(static_cast<int>(v.size()) == cols, "matrix apply shape mismatch");
    std::vector<T> out(rows, T(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  std::vector<T> column(int j) const {
    std::vector<T> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }

  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

}  // namespace ramsey
