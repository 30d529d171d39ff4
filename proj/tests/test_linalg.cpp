#include <random>

#include "doctest.h"
#include "ramsey/linalg.hpp"

using namespace ramsey;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> dist(lo, hi);
  for (auto& v : m.a) v = dist(rng);
  return m;
}

// cofactor expansion, the independent oracle against bareiss
Int det_by_expansion(const IntMatrix& a) {
  int n = a.rows;
  if (n == 1) return a.at(0, 0);
  Int acc = 0;
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = a.at(i, c);
      }
    }
    Int term = a.at(0, j) * det_by_expansion(minor);
    if (j % 2) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("rref ranks and pivots") {
  RatMatrix m(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)});
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<int>{0});
  CHECK(r.mat.at(0, 1) == Rat(2));

  RrefResult full = rref(to_rational(IntMatrix::identity(3)));
  CHECK(full.rank == 3);
}

TEST_CASE("in_span finds coefficients") {
  std::vector<std::vector<Rat>> basis = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  auto coeffs = in_span({Rat(3), Rat(2)}, basis);
  REQUIRE(coeffs.has_value());
  CHECK((*coeffs)[0] * basis[0][0] + (*coeffs)[1] * basis[1][0] == Rat(3));
  CHECK((*coeffs)[0] * basis[0][1] + (*coeffs)[1] * basis[1][1] == Rat(2));

  CHECK_FALSE(in_span({Rat(1)}, {{Rat(0)}}).has_value());
  CHECK(in_span({Rat(0), Rat(0)}, {}).has_value());
  CHECK_FALSE(in_span({Rat(1), Rat(0)}, {}).has_value());
}

TEST_CASE("smith diagonalization properties") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    int r = 1 + it % 3, c = 1 + (it / 3) % 3;
    IntMatrix a = random_matrix(rng, r, c, -5, 5);
    SmithResult s = smith_diagonal(a);
    IntMatrix lhs = s.u * a * s.v;
    CHECK(lhs == s.s);
    for (int i = 0; i < s.s.rows; ++i)
      for (int j = 0; j < s.s.cols; ++j)
        if (i != j) CHECK(s.s.at(i, j) == 0);
    // unimodular transforms
    Int du = determinant(s.u), dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("integer linear solve") {
  IntMatrix a(1, 1, {Int(2)});
  auto ok = solve_integer_linear(a, {Int(4)});
  REQUIRE(ok.x.has_value());
  CHECK((*ok.x)[0] == 2);

  auto frac = solve_integer_linear(a, {Int(3)});
  CHECK_FALSE(frac.x.has_value());
  CHECK(frac.rational_solvable);
  CHECK(frac.obstruction.has_value());

  IntMatrix z(1, 1, {Int(0)});
  auto none = solve_integer_linear(z, {Int(1)});
  CHECK_FALSE(none.x.has_value());
  CHECK_FALSE(none.rational_solvable);

  // random consistency: manufacture b = a*x, solve, recheck a*x' = b
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    int r = 1 + it % 3, c = 1 + (it / 2) % 3;
    IntMatrix m = random_matrix(rng, r, c, -4, 4);
    std::vector<Int> x;
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int j = 0; j < c; ++j) x.emplace_back(dist(rng));
    std::vector<Int> b = m.apply(x);
    auto res = solve_integer_linear(m, b);
    REQUIRE(res.x.has_value());
    CHECK(m.apply(*res.x) == b);
  }
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937 rng(3);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + it % 4;
    IntMatrix a = random_matrix(rng, n, n, -6, 6);
    CHECK(determinant(a) == det_by_expansion(a));
  }
}

TEST_CASE("image index is |det| for injective maps") {
  CHECK(index_of_image(IntMatrix(2, 2, {Int(2), Int(0), Int(0), Int(3)})) == Int(6));
  CHECK(index_of_image(IntMatrix(1, 1, {Int(-5)})) == Int(5));
  CHECK_FALSE(index_of_image(IntMatrix(2, 2, {Int(1), Int(1), Int(1), Int(1)})).has_value());

  // oracle: count residue classes of Z^2 mod the column lattice by scanning a
  // fundamental box of size |det| in each direction
  IntMatrix c(2, 2, {Int(2), Int(1), Int(0), Int(3)});
  auto idx = index_of_image(c);
  REQUIRE(idx.has_value());
  Int d = determinant(c);
  if (d < 0) d = -d;
  long dl = to_long(d);
  int classes = 0;
  for (long x = 0; x < dl; ++x)
    for (long y = 0; y < dl; ++y) {
      // (x,y) is a lattice member iff c*z = (x,y) solves over Z
      bool least = true;
      for (long px = 0; px < x + 1 && least; ++px)
        for (long py = 0; py < (px == x ? y : dl) && least; ++py) {
          auto diff = solve_integer_linear(c, {Int(x - px), Int(y - py)});
          if (diff.x) least = false;
        }
      if (least) ++classes;
    }
  CHECK(Int(classes) == *idx);
}
