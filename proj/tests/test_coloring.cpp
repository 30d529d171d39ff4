#include <random>

#include "doctest.h"
#include "ramsey/coloring.hpp"

using namespace ramsey;

TEST_CASE("box indexing round trips") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> lo_dist(-4, 2), len_dist(0, 4);
  for (int it = 0; it < 100; ++it) {
    Box b;
    int d = 1 + it % 3;
    for (int x = 0; x < d; ++x) {
      int lo = lo_dist(rng);
      b.range.emplace_back(lo, lo + len_dist(rng));
    }
    b.validate();
    for (size_t i = 0; i < b.volume(); ++i) {
      auto p = b.point(i);
      CHECK(b.contains(p));
      CHECK(b.index(p) == i);
    }
    std::vector<Int> outside = b.point(0);
    outside[0] = b.range[0].first - 1;
    CHECK_FALSE(b.contains(outside));
  }
}

TEST_CASE("interval boxes") {
  Box b = Box::interval(1, 5);
  CHECK(b.dim() == 1);
  CHECK(b.volume() == 5);
  CHECK(b.index({Int(3)}) == 2);
}

TEST_CASE("parity coloring is safe on negative coordinates") {
  Box b;
  b.range = {{Int(-3), Int(3)}, {Int(-3), Int(3)}};
  Coloring c = Coloring::parity(b, 3);
  for (size_t i = 0; i < b.volume(); ++i) {
    auto p = b.point(i);
    int v = c.at(p);
    CHECK(v >= 0);
    CHECK(v < 3);
    long sum = to_long(p[0]) + to_long(p[1]);
    CHECK(v == ((sum % 3) + 3) % 3);
  }
}

TEST_CASE("rle round trips") {
  Box b = Box::interval(1, 12);
  std::mt19937 rng(53);
  for (int it = 0; it < 50; ++it) {
    Coloring c = Coloring::random(b, 3, rng());
    Coloring back = Coloring::from_rle(b, 3, c.rle());
    CHECK(back == c);
  }
  Coloring k = Coloring::constant(b, 2, 1);
  CHECK(k.rle() == "12x1");
}

TEST_CASE("random colorings are deterministic in the seed") {
  Box b = Box::interval(1, 50);
  CHECK(Coloring::random(b, 4, 99) == Coloring::random(b, 4, 99));
  CHECK(Coloring::random(b, 4, 99) != Coloring::random(b, 4, 100));
}

TEST_CASE("validation rejects bad values") {
  Box b = Box::interval(1, 3);
  CHECK_THROWS_AS(Coloring::from_values(b, 2, {0, 1}), RamseyError);     // wrong size
  CHECK_THROWS_AS(Coloring::from_values(b, 2, {0, 1, 2}), RamseyError);  // color out of range
  CHECK_THROWS_AS(Coloring::from_rle(b, 2, "2x0"), RamseyError);         // short rle
}
