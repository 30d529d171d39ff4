#include "ramsey/rado.hpp"

#include <algorithm>
#include <unordered_set>

namespace ramsey {

namespace {

std::vector<Rat> column_rat(const IntMatrix& a, int j) {
  std::vector<Rat> c(a.rows);
  for (int i = 0; i < a.rows; ++i) c[i] = Rat(a.at(i, j));
  return c;
}

std::vector<Rat> sum_columns(const IntMatrix& a, uint32_t mask) {
  std::vector<Rat> s(a.rows, Rat(0));
  for (int j = 0; j < a.cols; ++j)
    if (mask >> j & 1)
      for (int i = 0; i < a.rows; ++i) s[i] += a.at(i, j);
  return s;
}

bool all_zero(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

struct ClassicSearch {
  const IntMatrix& a;
  std::unordered_set<uint32_t> dead;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<Rat>> coeffs;

  explicit ClassicSearch(const IntMatrix& m) : a(m) {}

  std::vector<Rat> basis_col(int j) { return column_rat(a, j); }

  bool go(uint32_t used, const std::vector<int>& order) {
    uint32_t full = (a.cols >= 32) ? ~0u : ((1u << a.cols) - 1);
    if (used == full) return true;
    if (dead.contains(used)) return false;
    uint32_t comp = full & ~used;
    std::vector<std::vector<Rat>> basis;
    for (int j : order) basis.push_back(basis_col(j));
    for (uint32_t sub = 1; sub <= comp; ++sub) {
      if ((sub & comp) != sub) continue;
      std::vector<Rat> s = sum_columns(a, sub);
      std::optional<std::vector<Rat>> q;
      if (used == 0) {
        if (!all_zero(s)) continue;
        q = std::vector<Rat>{};
      } else {
        q = in_span(s, basis);
        if (!q) continue;
      }
      std::vector<int> blk;
      for (int j = 0; j < a.cols; ++j)
        if (sub >> j & 1) blk.push_back(j);
      std::vector<int> order2 = order;
      order2.insert(order2.end(), blk.begin(), blk.end());
      blocks.push_back(blk);
      if (used != 0) coeffs.push_back(*q);
      if (go(used | sub, order2)) return true;
      blocks.pop_back();
      if (used != 0) coeffs.pop_back();
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

std::optional<ColumnsCertificate> check_columns(const IntMatrix& a) {
  RK_CHECK(a.rows >= 1 && a.cols >= 1, "check_columns: empty matrix");
  RK_CHECK(a.cols <= 20, "check_columns: too many columns for exhaustive block search");
  ClassicSearch search(a);
  if (!search.go(0, {})) return std::nullopt;
  ColumnsCertificate cert;
  cert.blocks = search.blocks;
  cert.coeffs = search.coeffs;
  for (const auto& blk : cert.blocks)
    cert.permutation.insert(cert.permutation.end(), blk.begin(), blk.end());
  return cert;
}

bool verify_columns_certificate(const IntMatrix& a, const ColumnsCertificate& cert) {
  std::vector<bool> seen(a.cols, false);
  std::vector<int> perm_check;
  for (const auto& blk : cert.blocks) {
    if (blk.empty()) return false;
    for (int j : blk) {
      if (j < 0 || j >= a.cols || seen[j]) return false;
      seen[j] = true;
      perm_check.push_back(j);
    }
  }
  if (static_cast<int>(perm_check.size()) != a.cols || perm_check != cert.permutation) return false;
  if (cert.coeffs.size() + 1 != cert.blocks.size()) return false;

  std::vector<int> earlier;
  for (size_t t = 0; t < cert.blocks.size(); ++t) {
    std::vector<Rat> sum(a.rows, Rat(0));
    for (int j : cert.blocks[t])
      for (int i = 0; i < a.rows; ++i) sum[i] += a.at(i, j);
    if (t == 0) {
      if (!all_zero(sum)) return false;
    } else {
      const auto& q = cert.coeffs[t - 1];
      if (q.size() != earlier.size()) return false;
      std::vector<Rat> rhs(a.rows, Rat(0));
      for (size_t e = 0; e < earlier.size(); ++e)
        for (int i = 0; i < a.rows; ++i) rhs[i] += q[e] * a.at(i, earlier[e]);
      if (sum != rhs) return false;
    }
    earlier.insert(earlier.end(), cert.blocks[t].begin(), cert.blocks[t].end());
  }
  return true;
}

namespace {

IntMatrix sum_maps(const std::vector<IntMatrix>& cols, uint32_t mask) {
  IntMatrix s(cols[0].rows, cols[0].cols);
  for (size_t j = 0; j < cols.size(); ++j)
    if (mask >> j & 1) s = s + cols[j];
  return s;
}

// Solve sum_{e} cols[earlier[e]] * F_e = rhs for integer F_e, column by column.
std::optional<std::vector<IntMatrix>> solve_witnesses(const std::vector<IntMatrix>& cols,
                                                      const std::vector<int>& earlier,
                                                      const IntMatrix& rhs) {
  int dp = cols[0].cols;            // d'
  int kd = cols[0].rows;            // k d'
  int u = static_cast<int>(earlier.size());
  IntMatrix big(kd, u * dp);
  for (int e = 0; e < u; ++e)
    for (int i = 0; i < kd; ++i)
      for (int j = 0; j < dp; ++j) big.at(i, e * dp + j) = cols[earlier[e]].at(i, j);
  std::vector<IntMatrix> fs(u, IntMatrix(dp, dp));
  for (int col = 0; col < dp; ++col) {
    IntSolveResult r = solve_integer_linear(big, rhs.column(col));
    if (!r.x) return std::nullopt;
    for (int e = 0; e < u; ++e)
      for (int i = 0; i < dp; ++i) fs[e].at(i, col) = (*r.x)[e * dp + i];
  }
  return fs;
}

struct GenSearch {
  const std::vector<IntMatrix>& cols;
  const IntMatrix& c;
  std::unordered_set<uint32_t> dead;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<IntMatrix>> witnesses;
  std::vector<int> order;

  GenSearch(const std::vector<IntMatrix>& cl, const IntMatrix& cc) : cols(cl), c(cc) {}

  bool go(uint32_t used) {
    uint32_t full = (1u << cols.size()) - 1;
    if (used == full) return true;
    if (dead.contains(used)) return false;
    uint32_t comp = full & ~used;
    for (uint32_t sub = 1; sub <= comp; ++sub) {
      if ((sub & comp) != sub) continue;
      IntMatrix sc = sum_maps(cols, sub) * c;
      std::optional<std::vector<IntMatrix>> fs;
      if (used == 0) {
        if (!sc.is_zero()) continue;
        fs = std::vector<IntMatrix>{};
      } else {
        IntMatrix rhs(sc.rows, sc.cols);
        for (size_t i = 0; i < sc.a.size(); ++i) rhs.a[i] = -sc.a[i];
        fs = solve_witnesses(cols, order, rhs);
        if (!fs) continue;
      }
      std::vector<int> blk;
      for (size_t j = 0; j < cols.size(); ++j)
        if (sub >> j & 1) blk.push_back(static_cast<int>(j));
      size_t osz = order.size();
      order.insert(order.end(), blk.begin(), blk.end());
      blocks.push_back(blk);
      if (used != 0) witnesses.push_back(*fs);
      if (go(used | sub)) return true;
      blocks.pop_back();
      if (used != 0) witnesses.pop_back();
      order.resize(osz);
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

std::optional<GenColumnsCertificate> check_columns_general(const std::vector<IntMatrix>& cols,
                                                           const IntMatrix& c) {
  RK_CHECK(!cols.empty(), "check_columns_general: no columns");
  RK_CHECK(cols.size() <= 20, "check_columns_general: too many columns");
  int dp = cols[0].cols;
  RK_CHECK(c.rows == dp && c.cols == dp, "check_columns_general: c must be d' x d'");
  for (const IntMatrix& m : cols) {
    RK_CHECK(m.cols == dp, "check_columns_general: mixed column dimensions");
    RK_CHECK(m.rows == cols[0].rows && m.rows % dp == 0,
             "check_columns_general: column maps must be (k d') x d'");
  }
  GenSearch search(cols, c);
  if (!search.go(0)) return std::nullopt;
  GenColumnsCertificate cert;
  cert.c = c;
  cert.blocks = search.blocks;
  cert.witnesses = search.witnesses;
  for (const auto& blk : cert.blocks)
    cert.permutation.insert(cert.permutation.end(), blk.begin(), blk.end());
  return cert;
}

bool verify_gen_certificate(const std::vector<IntMatrix>& cols, const GenColumnsCertificate& cert) {
  size_t n = cols.size();
  std::vector<bool> seen(n, false);
  std::vector<int> perm_check;
  for (const auto& blk : cert.blocks) {
    if (blk.empty()) return false;
    for (int j : blk) {
      if (j < 0 || j >= static_cast<int>(n) || seen[j]) return false;
      seen[j] = true;
      perm_check.push_back(j);
    }
  }
  if (perm_check.size() != n || perm_check != cert.permutation) return false;
  if (cert.witnesses.size() + 1 != cert.blocks.size()) return false;

  std::vector<int> earlier;
  for (size_t t = 0; t < cert.blocks.size(); ++t) {
    IntMatrix sum(cols[0].rows, cols[0].cols);
    for (int j : cert.blocks[t]) sum = sum + cols[j];
    IntMatrix lhs = sum * cert.c;
    if (t > 0) {
      const auto& fs = cert.witnesses[t - 1];
      if (fs.size() != earlier.size()) return false;
      for (size_t e = 0; e < earlier.size(); ++e) lhs = lhs + cols[earlier[e]] * fs[e];
    }
    if (!lhs.is_zero()) return false;
    earlier.insert(earlier.end(), cert.blocks[t].begin(), cert.blocks[t].end());
  }
  return true;
}

std::optional<GenColumnsCertificate> check_columns_general_auto(const std::vector<IntMatrix>& cols) {
  RK_CHECK(!cols.empty(), "check_columns_general_auto: no columns");
  int dp = cols[0].cols;
  std::vector<IntMatrix> candidates;
  candidates.push_back(IntMatrix::identity(dp));
  for (int s : {-1, 2, -2, 3, -3}) {
    IntMatrix m(dp, dp);
    for (int i = 0; i < dp; ++i) m.at(i, i) = s;
    candidates.push_back(m);
  }
  if (cols[0].rows == dp) {  // k = 1: columns are endomorphisms themselves
    for (const IntMatrix& m : cols) candidates.push_back(m);
    for (const IntMatrix& x : cols)
      for (const IntMatrix& y : cols) candidates.push_back(x * y);
  }
  std::vector<IntMatrix> tried;
  for (const IntMatrix& c : candidates) {
    if (c.is_zero()) continue;
    if (std::find(tried.begin(), tried.end(), c) != tried.end()) continue;
    tried.push_back(c);
    if (auto cert = check_columns_general(cols, c)) return cert;
  }
  return std::nullopt;
}

Reduction deuber_reduce(const IntMatrix& a, const ColumnsCertificate& cert) {
  RK_CHECK(verify_columns_certificate(a, cert), "deuber_reduce: certificate does not verify");
  Reduction red;
  red.m = static_cast<int>(cert.blocks.size()) - 1;

  Int c_lcm(1);
  for (const auto& q : cert.coeffs)
    for (const Rat& x : q) c_lcm = lcm(c_lcm, x.get_den());
  red.c = c_lcm;

  // seed position of block t is m - t; later blocks' span coefficients fill
  // the entries before the c entry
  red.b = IntMatrix(a.cols, red.m + 1);
  std::vector<int> block_of(a.cols);
  for (size_t t = 0; t < cert.blocks.size(); ++t)
    for (int j : cert.blocks[t]) block_of[j] = static_cast<int>(t);
  for (int j = 0; j < a.cols; ++j) red.b.at(j, red.m - block_of[j]) = c_lcm;
  std::vector<int> earlier;
  for (size_t t = 0; t < cert.blocks.size(); ++t) {
    if (t > 0) {
      const auto& q = cert.coeffs[t - 1];
      for (size_t e = 0; e < earlier.size(); ++e) {
        Rat scaled = -q[e] * c_lcm;
        RK_CHECK(scaled.get_den() == 1, "deuber_reduce: denominator clearing failed");
        red.b.at(earlier[e], red.m - static_cast<int>(t)) = scaled.get_num();
      }
    }
    earlier.insert(earlier.end(), cert.blocks[t].begin(), cert.blocks[t].end());
  }

  red.p = 1;
  for (int i = 0; i < red.b.rows; ++i) {
    int seed_pos = red.m - block_of[i];
    for (int j = 0; j < seed_pos; ++j) {
      Int v = abs(red.b.at(i, j));
      if (v > red.p) red.p = v;
    }
  }

  // sanity: the defining identity of the reduction
  IntMatrix prod = a * red.b;
  RK_CHECK(prod.is_zero(), "deuber_reduce: A*B != 0");
  return red;
}

}  // namespace ramsey
