#include "ramsey/shape.hpp"

#include <algorithm>

#include "ramsey/linalg.hpp"

namespace ramsey {

void Shape::validate() const {
  RK_CHECK(d >= 1, "shape: d must be >= 1");
  RK_CHECK(m >= 0, "shape: m must be >= 0");
  RK_CHECK(static_cast<int>(families.size()) == m, "shape: need m families");
  RK_CHECK(c.rows == d && c.cols == d, "shape: c must be d x d");
  for (int k = 1; k <= m; ++k)
    for (const PolyMap& f : families[k - 1]) {
      RK_CHECK(f.arity == k, "shape: family F_k must have arity k");
      RK_CHECK(f.dim == d && f.out_dim == d, "shape: family maps must be (Z^d)^k -> Z^d");
    }
}

void Shape::canonicalize() {
  validate();
  for (auto& fam : families) canonicalize_family(fam);
}

namespace {

std::vector<Int> flatten(const SeedVector& seed, int upto) {
  std::vector<Int> flat;
  for (int i = 0; i < upto; ++i) flat.insert(flat.end(), seed[i].begin(), seed[i].end());
  return flat;
}

void check_seed(const Shape& shape, const SeedVector& seed) {
  RK_CHECK(static_cast<int>(seed.size()) == shape.m + 1, "seed: need m+1 points");
  for (const auto& pt : seed) {
    RK_CHECK(static_cast<int>(pt.size()) == shape.d, "seed: point dimension mismatch");
    bool nonzero = false;
    for (const Int& x : pt) nonzero |= (x != 0);
    RK_CHECK(nonzero, "seed: zero seed point");
  }
}

std::vector<Int> add_vec(std::vector<Int> x, const std::vector<Int>& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

}  // namespace

ConfigSet generate_masked(const Shape& shape, const SeedVector& seed,
                          const std::vector<int>& line_mask) {
  shape.validate();
  check_seed(shape, seed);
  ConfigSet out;
  out.lines.resize(shape.m + 1);
  out.term_count = 0;
  for (int k : line_mask) {
    RK_CHECK(k >= 0 && k <= shape.m, "line mask index out of range");
    std::vector<Int> cs = shape.c.apply(seed[k]);
    if (k == 0) {
      out.lines[0].push_back(cs);
      out.term_count += 1;
      continue;
    }
    std::vector<Int> prefix = flatten(seed, k);
    for (const PolyMap& f : shape.family(k)) {
      out.lines[k].push_back(add_vec(f.eval(prefix), cs));
      out.term_count += 1;
    }
  }
  for (const auto& line : out.lines)
    for (const auto& pt : line) out.points.push_back(pt);
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

ConfigSet generate(const Shape& shape, const SeedVector& seed) {
  std::vector<int> all(shape.m + 1);
  for (int k = 0; k <= shape.m; ++k) all[k] = k;
  return generate_masked(shape, seed, all);
}

Shape from_mpc(int m, int p, const Int& c) {
  RK_CHECK(m >= 1 && p >= 1, "from_mpc: m and p must be >= 1");
  RK_CHECK(c >= 1, "from_mpc: c must be >= 1");
  Shape s;
  s.d = 1;
  s.m = m;
  s.c = IntMatrix(1, 1);
  s.c.at(0, 0) = c;
  s.families.resize(m);
  for (int j = 1; j <= m; ++j) {
    std::vector<Int> xi(j, Int(-p));
    for (;;) {
      s.families[j - 1].push_back(PolyMap::linear_form(xi));
      int t = j - 1;
      while (t >= 0 && xi[t] == p) xi[t--] = -p;
      if (t < 0) break;
      xi[t] += 1;
    }
    canonicalize_family(s.families[j - 1]);
    size_t expect = 1;
    for (int t = 0; t < j; ++t) expect *= static_cast<size_t>(2 * p + 1);
    RK_CHECK(s.families[j - 1].size() == expect, "from_mpc: family size mismatch");
  }
  s.validate();
  return s;
}

std::vector<Int> mpc_points_direct(int m, int p, const Int& c, const std::vector<Int>& seed) {
  RK_CHECK(static_cast<int>(seed.size()) == m + 1, "mpc direct: seed size");
  std::vector<Int> pts;
  pts.push_back(c * seed[0]);
  for (int k = 1; k <= m; ++k) {
    std::vector<Int> ix(k, Int(-p));
    for (;;) {
      Int v = c * seed[k];
      for (int t = 0; t < k; ++t) v += ix[t] * seed[t];
      pts.push_back(v);
      int t = k - 1;
      while (t >= 0 && ix[t] == p) ix[t--] = -p;
      if (t < 0) break;
      ix[t] += 1;
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Shape join_shapes(const Shape& s1, const Shape& s2) {
  s1.validate();
  s2.validate();
  RK_CHECK(s1.d == s2.d, "join: dimensions differ");
  RK_CHECK(s1.c * s2.c == s2.c * s1.c, "join: c maps must commute");
  for (const auto& fams : {s1.families, s2.families})
    for (const auto& fam : fams)
      for (const PolyMap& f : fam)
        RK_CHECK(f.is_homomorphism(), "join: homomorphism families required");
  Shape out;
  out.d = s1.d;
  out.m = std::max(s1.m, s2.m);
  out.c = s1.c * s2.c;
  out.families.resize(out.m);
  for (int k = 1; k <= out.m; ++k) {
    if (k <= s1.m)
      for (const PolyMap& f : s1.family(k))
        out.families[k - 1].push_back(f.compose_each_arg(s2.c));
    if (k <= s2.m)
      for (const PolyMap& f : s2.family(k))
        out.families[k - 1].push_back(f.compose_each_arg(s1.c));
    canonicalize_family(out.families[k - 1]);
  }
  out.validate();
  return out;
}

bool verify_concordance(const Shape& shape, const Concordance& w) {
  if (w.b.rows != shape.d || w.b.cols != shape.d || w.b.is_zero()) return false;
  if (w.a.size() != shape.families.size()) return false;
  for (size_t k = 0; k < shape.families.size(); ++k) {
    if (w.a[k].size() != shape.families[k].size()) return false;
    for (size_t i = 0; i < shape.families[k].size(); ++i) {
      const PolyMap& f = shape.families[k][i];
      PolyMap lhs = w.a[k][i].left_compose(shape.c);
      PolyMap rhs = f.compose_each_arg(w.b);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

std::optional<Concordance> concordance_witness(const Shape& shape) {
  shape.validate();
  for (const auto& fam : shape.families)
    for (const PolyMap& f : fam)
      RK_CHECK(f.is_homomorphism(), "concordance: homomorphism families required");

  if (shape.c.is_scalar() && !shape.c.is_zero()) {
    Concordance w{shape.c, shape.families};
    return w;  // c o f = f o bold(c) for central c
  }

  // b = id: need integer a_f with c o a_f = f, solved column by column
  Concordance w;
  w.b = IntMatrix::identity(shape.d);
  w.a.resize(shape.families.size());
  for (size_t k = 0; k < shape.families.size(); ++k)
    for (const PolyMap& f : shape.families[k]) {
      PolyMap cf = f.left_compose(shape.c);
      if (cf == f) {
        w.a[k].push_back(f);  // a_f = f already works
        continue;
      }
      IntMatrix fm = *f.matrix();
      IntMatrix am(shape.d, fm.cols);
      for (int col = 0; col < fm.cols; ++col) {
        IntSolveResult r = solve_integer_linear(shape.c, fm.column(col));
        if (!r.x) return std::nullopt;
        for (int i = 0; i < shape.d; ++i) am.at(i, col) = (*r.x)[i];
      }
      w.a[k].push_back(PolyMap::from_matrix(f.arity, shape.d, am));
    }
  return w;
}

Shape normalize_for_lift(const Shape& shape) {
  shape.validate();
  Shape out = shape;
  for (int k = 1; k <= out.m; ++k) {
    auto& fam = out.families[k - 1];
    fam.push_back(PolyMap::zero(k, out.d));
    for (int blk = 0; blk < k; ++blk) fam.push_back(PolyMap::projection(k, out.d, blk));
    for (int j = 1; j < k; ++j)
      for (const PolyMap& f : out.families[j - 1]) fam.push_back(f.arity_lift(k));
    canonicalize_family(fam);
  }
  out.validate();
  return out;
}

Shape config_shape_from_matrix(const IntMatrix& b, const Int& c) {
  RK_CHECK(b.cols >= 1 && b.rows >= 1, "config shape: empty matrix");
  Shape s;
  s.d = 1;
  s.m = b.cols - 1;
  s.c = IntMatrix(1, 1);
  s.c.at(0, 0) = c;
  s.families.resize(s.m);
  for (int i = 0; i < b.rows; ++i) {
    int t = -1;
    for (int j = b.cols - 1; j >= 0; --j)
      if (b.at(i, j) != 0) {
        t = j;
        break;
      }
    RK_CHECK(t >= 0, "config shape: zero row");
    RK_CHECK(b.at(i, t) == c, "config shape: row must end with the common coefficient c");
    if (t == 0) continue;  // the c(s_0) row is line 0, present in every set
    std::vector<Int> coeffs(t, Int(0));
    for (int j = 0; j < t; ++j) coeffs[j] = b.at(i, j);
    s.families[t - 1].push_back(PolyMap::linear_form(coeffs));
  }
  for (auto& fam : s.families) canonicalize_family(fam);
  s.validate();
  return s;
}

}  // namespace ramsey
