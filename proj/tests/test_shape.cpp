#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ramsey/shape.hpp"

using namespace ramsey;

namespace {

Shape scalar_shape(int m, const std::vector<std::vector<std::vector<Int>>>& family_coeffs,
                   const Int& c) {
  // family_coeffs[k-1] lists coefficient vectors of linear forms in F_k
  Shape s;
  s.d = 1;
  s.m = m;
  s.c = IntMatrix(1, 1, {c});
  for (int k = 1; k <= m; ++k) {
    std::vector<PolyMap> fam;
    for (const auto& coeffs : family_coeffs[k - 1]) {
      bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Int& v) { return v == 0; });
      fam.push_back(zero ? PolyMap::zero(k, 1) : PolyMap::linear_form(coeffs));
    }
    s.families.push_back(std::move(fam));
  }
  s.canonicalize();
  return s;
}

std::set<std::vector<Int>> point_set(const ConfigSet& cs) {
  return {cs.points.begin(), cs.points.end()};
}

SeedVector random_seed(std::mt19937& rng, int points, int d, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  SeedVector s;
  for (int i = 0; i < points; ++i) {
    std::vector<Int> p;
    do {
      p.clear();
      for (int x = 0; x < d; ++x) p.emplace_back(dist(rng));
    } while (std::all_of(p.begin(), p.end(), [](const Int& v) { return v == 0; }));
    s.push_back(std::move(p));
  }
  return s;
}

}  // namespace

TEST_CASE("generate lays out lines as defined") {
  // {x, y+x^2, z, z+y^2}
  PolyMap ysq;  // (x,y) -> y^2
  ysq.arity = 2;
  ysq.dim = 1;
  ysq.out_dim = 1;
  ysq.coords = {{Monomial{{0, 2}, Int(1)}}};

  Shape quad;
  quad.d = 1;
  quad.m = 2;
  quad.c = IntMatrix(1, 1, {Int(1)});
  quad.families = {{PolyMap::power(1, 2)}, {PolyMap::zero(2, 1), ysq}};
  quad.canonicalize();
  quad.validate();

  ConfigSet cs = generate(quad, {{Int(1)}, {Int(2)}, {Int(1)}});
  CHECK(cs.lines[0] == std::vector<std::vector<Int>>{{Int(1)}});
  CHECK(cs.lines[1] == std::vector<std::vector<Int>>{{Int(3)}});
  CHECK(point_set(cs) == std::set<std::vector<Int>>{{Int(1)}, {Int(3)}, {Int(5)}});
  CHECK(cs.term_count == 4);
  CHECK(cs.collisions());
}

TEST_CASE("masked generation restricts to listed lines") {
  Shape s = from_mpc(2, 1, 1);
  SeedVector seed = {{Int(1)}, {Int(4)}, {Int(9)}};
  ConfigSet all = generate(s, seed);
  ConfigSet sub = generate_masked(s, seed, {0, 2});
  // unmasked lines keep their slot but stay empty
  CHECK(sub.lines.size() == 3);
  CHECK(sub.lines[0] == all.lines[0]);
  CHECK(sub.lines[1].empty());
  CHECK(sub.lines[2] == all.lines[2]);
  for (const auto& p : sub.points)
    CHECK(std::find(all.points.begin(), all.points.end(), p) != all.points.end());
}

TEST_CASE("from_mpc matches direct evaluation") {
  std::mt19937 rng(23);
  for (int it = 0; it < 300; ++it) {
    int m = 1 + it % 3, p = 1 + (it / 3) % 2;
    Int c(1 + (it / 6) % 3);
    Shape s = from_mpc(m, p, c);
    SeedVector seed = random_seed(rng, m + 1, 1, -5, 5);
    std::vector<Int> flat;
    for (const auto& pt : seed) flat.push_back(pt[0]);
    std::vector<Int> direct = mpc_points_direct(m, p, c, flat);
    std::set<std::vector<Int>> want;
    for (const Int& v : direct) want.insert({v});
    CHECK(point_set(generate(s, seed)) == want);
  }
}

TEST_CASE("join of shapes contains transported configurations of both") {
  std::mt19937 rng(29);
  Shape s1 = scalar_shape(1, {{{Int(0)}, {Int(1)}}}, Int(2));
  Shape s2 = scalar_shape(1, {{{Int(1)}, {Int(-1)}}}, Int(3));
  Shape j = join_shapes(s1, s2);
  j.validate();
  for (int it = 0; it < 100; ++it) {
    SeedVector s = random_seed(rng, j.m + 1, 1, -4, 4);
    auto joined = point_set(generate(j, s));
    // transported seeds: the other shape's c applied pointwise
    SeedVector t1, t2;
    for (const auto& p : s) {
      t1.push_back({Int(3) * p[0]});
      t2.push_back({Int(2) * p[0]});
    }
    for (const auto& p : generate(s1, t1).points) CHECK(joined.count(p));
    for (const auto& p : generate(s2, t2).points) CHECK(joined.count(p));
  }
}

TEST_CASE("concordance witnesses verify exactly") {
  // scalar c: b = c and a_f = f
  Shape s = from_mpc(2, 1, 2);
  auto w = concordance_witness(s);
  REQUIRE(w.has_value());
  CHECK(verify_concordance(s, *w));
  CHECK(w->b == IntMatrix(1, 1, {Int(2)}));

  // identity c: b = id
  Shape t = scalar_shape(1, {{{Int(0)}, {Int(1)}, {Int(2)}}}, Int(1));
  auto wt = concordance_witness(t);
  REQUIRE(wt.has_value());
  CHECK(verify_concordance(t, *wt));

  // tampering breaks verification
  Concordance bad = *w;
  bad.b = IntMatrix(1, 1, {Int(3)});
  CHECK_FALSE(verify_concordance(s, bad));
}

TEST_CASE("normalization for lifting is idempotent and extends families") {
  Shape s = scalar_shape(2, {{{Int(1)}}, {{Int(1), Int(1)}}}, Int(1));
  Shape n1 = normalize_for_lift(s);
  n1.validate();
  // zero map and both projections appear in F_2
  bool has_zero = false, has_p0 = false, has_p1 = false;
  for (const PolyMap& f : n1.family(2)) {
    if (f.is_zero_map()) has_zero = true;
    if (f == PolyMap::projection(2, 1, 0)) has_p0 = true;
    if (f == PolyMap::projection(2, 1, 1)) has_p1 = true;
  }
  CHECK(has_zero);
  CHECK(has_p0);
  CHECK(has_p1);
  // every original family member survives
  for (int k = 1; k <= s.m; ++k)
    for (const PolyMap& f : s.family(k))
      CHECK(std::find(n1.family(k).begin(), n1.family(k).end(), f) != n1.family(k).end());
  Shape n2 = normalize_for_lift(n1);
  for (int k = 1; k <= s.m; ++k) CHECK(n1.family(k) == n2.family(k));
}

TEST_CASE("config shape from kernel matrix reproduces its rows") {
  IntMatrix b(3, 2, {Int(-1), Int(1), Int(1), Int(0), Int(0), Int(1)});
  Shape s = config_shape_from_matrix(b, Int(1));
  std::mt19937 rng(31);
  for (int it = 0; it < 100; ++it) {
    SeedVector seed = random_seed(rng, s.m + 1, 1, -6, 6);
    std::vector<Int> flat;
    for (const auto& p : seed) flat.push_back(p[0]);
    std::set<std::vector<Int>> rows;
    for (int i = 0; i < b.rows; ++i) {
      Int v = 0;
      for (int j = 0; j < b.cols; ++j) v += b.at(i, j) * flat[j];
      rows.insert({v});
    }
    CHECK(point_set(generate(s, seed)) == rows);
  }
}

TEST_CASE("shape validation rejects malformed input") {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::linear_form({Int(1), Int(1)})}};  // arity 2 in F_1
  CHECK_THROWS_AS(s.validate(), RamseyError);
}
