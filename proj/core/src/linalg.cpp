#include "ramsey/linalg.hpp"

#include <algorithm>

namespace ramsey {

RrefResult rref(RatMatrix m) {
  RrefResult res;
  int lead = 0;
  for (int col = 0; col < m.cols && lead < m.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Rat inv = m.at(lead, col);
    for (int j = 0; j < m.cols; ++j) m.at(lead, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == lead || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = lead;
  res.mat = std::move(m);
  return res;
}

std::optional<std::vector<Rat>> in_span(const std::vector<Rat>& v,
                                        const std::vector<std::vector<Rat>>& basis) {
  size_t dim = v.size();
  for (const auto& b : basis) RK_CHECK(b.size() == dim, "in_span: mixed vector dimensions");
  if (basis.empty()) {
    for (const Rat& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Rat>{};
  }
  // Solve B^T x = v on the augmented matrix.
  RatMatrix aug(static_cast<int>(dim), static_cast<int>(basis.size()) + 1);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < basis.size(); ++j) aug.at(static_cast<int>(i), static_cast<int>(j)) = basis[j][i];
    aug.at(static_cast<int>(i), static_cast<int>(basis.size())) = v[i];
  }
  RrefResult r = rref(std::move(aug));
  std::vector<Rat> coeff(basis.size(), Rat(0));
  int vcol = static_cast<int>(basis.size());
  for (int i = 0; i < r.rank; ++i) {
    int pc = r.pivot_cols[i];
    if (pc == vcol) return std::nullopt;  // inconsistent
    coeff[pc] = r.mat.at(i, vcol);
  }
  return coeff;
}

namespace {

void row_op_sub(IntMatrix& m, int dst, int src, const Int& q) {
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}
void col_op_sub(IntMatrix& m, int dst, int src, const Int& q) {
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}
void row_swap(IntMatrix& m, int x, int y) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(x, j), m.at(y, j));
}
void col_swap(IntMatrix& m, int x, int y) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, x), m.at(i, y));
}

}  // namespace

SmithResult smith_diagonal(IntMatrix a) {
  SmithResult res;
  res.u = IntMatrix::identity(a.rows);
  res.v = IntMatrix::identity(a.cols);
  int t = 0;
  int lim = std::min(a.rows, a.cols);
  while (t < lim) {
    // pivot: nonzero entry of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j) {
        if (a.at(i, j) == 0) continue;
        Int v = abs(a.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      row_swap(a, pi, t);
      row_swap(res.u, pi, t);
    }
    if (pj != t) {
      col_swap(a, pj, t);
      col_swap(res.v, pj, t);
    }
    bool clean = true;
    for (int i = t + 1; i < a.rows; ++i) {
      if (a.at(i, t) == 0) continue;
      Int q = a.at(i, t) / a.at(t, t);  // truncated division keeps remainders small
      if (q != 0) {
        row_op_sub(a, i, t, q);
        row_op_sub(res.u, i, t, q);
      }
      if (a.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < a.cols; ++j) {
      if (a.at(t, j) == 0) continue;
      Int q = a.at(t, j) / a.at(t, t);
      if (q != 0) {
        col_op_sub(a, j, t, q);
        col_op_sub(res.v, j, t, q);
      }
      if (a.at(t, j) != 0) clean = false;
    }
    if (clean) ++t;  // else re-pivot on the now smaller entries
  }
  res.s = std::move(a);
  return res;
}

IntSolveResult solve_integer_linear(const IntMatrix& a, const std::vector<Int>& b) {
  RK_CHECK(static_cast<int>(b.size()) == a.rows, "solve_integer_linear: rhs size mismatch");
  IntSolveResult out;
  SmithResult sm = smith_diagonal(a);
  std::vector<Int> c = sm.u.apply(b);
  std::vector<Int> y(a.cols, Int(0));
  out.rational_solvable = true;
  bool integral = true;
  for (int i = 0; i < a.rows; ++i) {
    Int d = (i < std::min(a.rows, a.cols)) ? sm.s.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) {
        out.rational_solvable = false;
        return out;  // no solution at all; obstruction stays empty
      }
      continue;
    }
    if (c[i] % d != 0) {
      integral = false;
      if (!out.obstruction) out.obstruction = {d, c[i]};
      continue;
    }
    y[i] = c[i] / d;
  }
  if (!integral) return out;
  out.x = sm.v.apply(y);
  return out;
}

Int determinant(const IntMatrix& a) {
  RK_CHECK(a.rows == a.cols, "determinant: square matrix required");
  int n = a.rows;
  if (n == 0) return Int(1);
  IntMatrix m = a;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      row_swap(m, piv, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::optional<Int> index_of_image(const IntMatrix& c) {
  Int d = determinant(c);
  if (d == 0) return std::nullopt;
  return abs(d);
}

}  // namespace ramsey
