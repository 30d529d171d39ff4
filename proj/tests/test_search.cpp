#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

// m=1, F_1 = {0, -id}, c=1: generated sets are schur triples
// {s0, s1-s0, s1} once s1 > s0 >= 1
Shape schur_shape() {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::zero(1, 1), PolyMap::linear_form({Int(-1)})}};
  s.canonicalize();
  return s;
}

// m=1, F_1 = {0, id, 2id}, c=1: line 1 is the 3-term progression
// {s1, s0+s1, 2 s0+s1}
Shape ap3_shape() {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::zero(1, 1), PolyMap::linear_form({Int(1)}),
                 PolyMap::linear_form({Int(2)})}};
  s.canonicalize();
  return s;
}

// brute force: all configurations of a triangular d=1 shape inside [1,n] by
// scanning seed coordinates over a wide interval
std::set<std::vector<long>> brute_configs(const Shape& shape, const std::vector<int>& mask,
                                          long n, long span) {
  std::set<std::vector<long>> out;
  int nvars = shape.m + 1;
  std::vector<long> vals(nvars, -span);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == nvars) {
      SeedVector seed;
      for (long v : vals) seed.push_back({Int(v)});
      ConfigSet cs = generate_masked(shape, seed, mask);
      std::vector<long> pts;
      for (const auto& p : cs.points) {
        if (p[0] < 1 || p[0] > n) return;
        pts.push_back(to_long(p[0]));
      }
      std::sort(pts.begin(), pts.end());
      out.insert(std::move(pts));
      return;
    }
    for (long v = -span; v <= span; ++v) {
      if (v == 0) continue;
      vals[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool coloring_is_bad(const std::vector<uint8_t>& col, const std::vector<std::vector<int>>& cfgs) {
  for (const auto& cfg : cfgs) {
    bool mono = true;
    for (size_t i = 1; i < cfg.size(); ++i) mono = mono && col[cfg[i]] == col[cfg[0]];
    if (mono) return false;
  }
  return true;
}

// canonical form: color v first appears only after 0..v-1 all appeared
bool canonical_coloring(const std::vector<uint8_t>& col) {
  int seen = 0;
  for (uint8_t c : col) {
    if (c > seen) return false;
    if (c == seen) ++seen;
  }
  return true;
}

std::vector<std::vector<int>> config_indices(const Shape& shape, const std::vector<int>& mask,
                                             long n) {
  ConfigEnumeration en = enumerate_configs(shape, mask, n, SearchBudget{});
  std::vector<std::vector<int>> cfgs;
  for (const auto& c : en.configs) {
    std::vector<int> idx;
    for (long p : c.points) idx.push_back(static_cast<int>(p - 1));
    cfgs.push_back(std::move(idx));
  }
  return cfgs;
}

}  // namespace

TEST_CASE("find_mono returns a valid witness") {
  Shape s = schur_shape();
  Box dom = Box::interval(1, 10);
  Coloring parity = Coloring::parity(dom, 2);
  SearchStats st;
  auto w = find_mono(s, all_lines(s), parity, SearchBudget{}, &st);
  REQUIRE(w.has_value());
  ConfigSet cs = generate(s, w->seed);
  for (const auto& p : cs.points) {
    CHECK(dom.contains(p));
    CHECK(parity.at(p) == w->color);
  }
}

TEST_CASE("find_mono honors the line mask") {
  Shape s = ap3_shape();
  Box dom = Box::interval(1, 9);
  // classic progression-free split of [1,8]
  std::vector<uint8_t> vals = {0, 0, 1, 1, 0, 0, 1, 1, 0};
  Coloring col = Coloring::from_values(dom, 2, vals);
  auto masked = find_mono(s, {1}, col, SearchBudget{});
  REQUIRE(masked.has_value());  // {1,5,9} is monochromatic in color 0
  ConfigSet cs = generate_masked(s, masked->seed, {1});
  for (const auto& p : cs.points) CHECK(col.at(p) == masked->color);
}

TEST_CASE("config enumeration matches brute force") {
  Shape s = schur_shape();
  for (long n : {3L, 5L, 7L}) {
    ConfigEnumeration en = enumerate_configs(s, all_lines(s), n, SearchBudget{});
    CHECK(en.complete);
    std::set<std::vector<long>> got;
    for (const auto& c : en.configs) got.insert(c.points);
    CHECK(got == brute_configs(s, all_lines(s), n, 3 * n));
    // every reported seed reproduces its configuration
    for (const auto& c : en.configs) {
      ConfigSet cs = generate(s, c.seed);
      std::vector<long> pts;
      for (const auto& p : cs.points) pts.push_back(to_long(p[0]));
      std::sort(pts.begin(), pts.end());
      CHECK(pts == c.points);
    }
  }
}

TEST_CASE("ap3 enumeration counts the progressions") {
  Shape s = ap3_shape();
  ConfigEnumeration en = enumerate_configs(s, {1}, 9, SearchBudget{});
  CHECK(en.complete);
  CHECK(en.configs.size() == 16);  // sum over d=1..4 of (9-2d)
}

TEST_CASE("non-triangular masks clear the completeness flag") {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::linear_form({Int(2)})}};
  s.canonicalize();
  // only line 1: the single form 2 s0 + s1 never pins s0 on its own
  ConfigEnumeration en = enumerate_configs(s, {1}, 6, SearchBudget{});
  CHECK_FALSE(en.complete);
  std::set<std::vector<long>> got;
  for (const auto& c : en.configs) got.insert(c.points);
  // every single point is reachable: x = 2 s0 + s1 solvable for any x
  CHECK(got.size() == 6);
}

TEST_CASE("bad coloring search is exact and canonical") {
  Shape s = schur_shape();
  auto cfgs4 = config_indices(s, all_lines(s), 4);
  SearchStats st;
  auto bad = find_bad_coloring(4, cfgs4, 2, SearchBudget{}, &st);
  REQUIRE(bad.has_value());
  CHECK(coloring_is_bad(*bad, cfgs4));

  // oracle: lexicographically least canonical bad coloring by full scan
  std::vector<uint8_t> col(4, 0);
  std::optional<std::vector<uint8_t>> least;
  for (int v = 0; v < 16 && !least; ++v) {
    for (int i = 0; i < 4; ++i) col[i] = (v >> (3 - i)) & 1;
    if (canonical_coloring(col) && coloring_is_bad(col, cfgs4)) least = col;
  }
  REQUIRE(least.has_value());
  CHECK(*bad == *least);

  auto cfgs5 = config_indices(s, all_lines(s), 5);
  CHECK_FALSE(find_bad_coloring(5, cfgs5, 2, SearchBudget{}).has_value());
}

TEST_CASE("parallel bad-coloring search matches sequential") {
  Shape s = ap3_shape();
  auto cfgs = config_indices(s, {1}, 8);
  SearchBudget seq;
  SearchBudget par;
  par.threads = 4;
  auto a = find_bad_coloring(8, cfgs, 2, seq);
  auto b = find_bad_coloring(8, cfgs, 2, par);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);

  auto cfgs9 = config_indices(s, {1}, 9);
  CHECK_FALSE(find_bad_coloring(9, cfgs9, 2, par).has_value());
}

TEST_CASE("partition numbers for the frozen instances") {
  PartitionResult schur = min_partition_number(schur_shape(), {0, 1}, 2, 10, SearchBudget{});
  REQUIRE(schur.n.has_value());
  CHECK(*schur.n == 5);
  CHECK(schur.exhaustive);
  REQUIRE(schur.bad_below.has_value());
  CHECK(schur.bad_below->domain == Box::interval(1, 4));

  PartitionResult ap3 = min_partition_number(ap3_shape(), {1}, 2, 12, SearchBudget{});
  REQUIRE(ap3.n.has_value());
  CHECK(*ap3.n == 9);
  CHECK(ap3.exhaustive);
}

TEST_CASE("three colors push the schur number to 14") {
  // independent desk-check value for r=3
  PartitionResult res = min_partition_number(schur_shape(), {0, 1}, 3, 16, SearchBudget{});
  REQUIRE(res.n.has_value());
  CHECK(*res.n == 14);
}

TEST_CASE("certificates replay end to end") {
  Shape s = schur_shape();
  Box dom = Box::interval(1, 12);
  Coloring col = Coloring::random(dom, 2, 7);
  auto w = find_mono(s, all_lines(s), col, SearchBudget{});
  REQUIRE(w.has_value());
  Certificate mono = make_mono_certificate(s, all_lines(s), col, *w);
  std::string why;
  CHECK(verify_certificate(mono, SearchBudget{}, &why));

  Certificate broken = mono;
  broken.witness_color = 1 - *broken.witness_color;
  CHECK_FALSE(verify_certificate(broken, SearchBudget{}, &why));

  PartitionResult res = min_partition_number(s, all_lines(s), 2, 10, SearchBudget{});
  Certificate minimal = make_minimal_n_certificate(s, all_lines(s), 2, res);
  CHECK(verify_certificate(minimal, SearchBudget{}, &why));

  Certificate off = minimal;
  off.minimal_n = *off.minimal_n - 1;
  CHECK_FALSE(verify_certificate(off, SearchBudget{}, &why));

  REQUIRE(res.bad_below.has_value());
  Certificate bad = make_bad_certificate(s, all_lines(s), *res.bad_below, true);
  CHECK(verify_certificate(bad, SearchBudget{}, &why));
}

TEST_CASE("budget exhaustion is reported, not silent") {
  Shape s = schur_shape();
  SearchBudget tiny;
  tiny.max_nodes = 3;
  SearchStats st;
  Coloring col = Coloring::constant(Box::interval(1, 50), 2, 0);
  auto w = find_mono(s, all_lines(s), col, tiny, &st);
  if (!w) CHECK(st.node_limit_hit);

  CHECK_THROWS_AS(enumerate_configs(s, all_lines(s), 40, tiny), RamseyError);

  auto cfgs = config_indices(s, all_lines(s), 5);
  CHECK_THROWS_AS(find_bad_coloring(5, cfgs, 2, tiny), RamseyError);
}

TEST_CASE("seed box narrows the mono scan") {
  Shape s = schur_shape();
  Box dom = Box::interval(1, 30);
  Coloring col = Coloring::constant(dom, 2, 0);
  SearchBudget budget;
  budget.seed_box = Box::interval(2, 3);
  auto w = find_mono(s, all_lines(s), col, budget);
  REQUIRE(w.has_value());
  for (const auto& p : w->seed) {
    CHECK(p[0] >= 2);
    CHECK(p[0] <= 3);
  }
}
