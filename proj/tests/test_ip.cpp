#include <random>
#include <set>

#include "doctest.h"
#include "ramsey/ip.hpp"
#include "ramsey/shape.hpp"

using namespace ramsey;

namespace {

std::vector<std::vector<Int>> random_generators(std::mt19937_64& rng, int n, int d) {
  std::vector<std::vector<Int>> gens(n, std::vector<Int>(d));
  for (auto& g : gens)
    for (auto& x : g) x = Int(static_cast<long>(rng() % 19) - 9);
  return gens;
}

}  // namespace

TEST_CASE("subset sums are additive over disjoint masks") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    int d = 1 + static_cast<int>(rng() % 3);
    FiniteIP ip = fs(random_generators(rng, n, d));
    ip.validate();
    CHECK(ip.values.size() == (size_t(1) << n) - 1);
    for (unsigned m1 = 1; m1 < (1u << n); ++m1)
      for (unsigned m2 = 1; m2 < (1u << n); ++m2) {
        if (m1 & m2) continue;
        for (int x = 0; x < d; ++x)
          CHECK(ip.value(m1 | m2)[x] == ip.value(m1)[x] + ip.value(m2)[x]);
      }
  }
}

TEST_CASE("mask bounds are enforced") {
  FiniteIP ip = fs({{Int(4)}, {Int(7)}});
  CHECK(ip.value(3) == std::vector<Int>{Int(11)});
  CHECK_THROWS_AS(ip.value(0), RamseyError);
  CHECK_THROWS_AS(ip.value(4), RamseyError);
  CHECK_THROWS_AS(fs(std::vector<std::vector<Int>>(21, {Int(1)})), RamseyError);
}

TEST_CASE("sub-IP-sets are IP-sets of block sums") {
  FiniteIP ip = fs({{Int(1)}, {Int(10)}, {Int(100)}, {Int(1000)}});
  FiniteIP sub = sub_ip(ip, {{1, 2}, {3}, {4}});
  CHECK(sub.generators ==
        std::vector<std::vector<Int>>{{Int(11)}, {Int(100)}, {Int(1000)}});
  // every subset sum of the sub-system is a subset sum of the original
  std::set<std::vector<Int>> all(ip.values.begin(), ip.values.end());
  for (const auto& v : sub.values) CHECK(all.count(v) == 1);

  CHECK_THROWS_AS(sub_ip(ip, {{2}, {1}}), RamseyError);   // out of order
  CHECK_THROWS_AS(sub_ip(ip, {{1, 1}}), RamseyError);     // repeated index
  CHECK_THROWS_AS(sub_ip(ip, {{0}}), RamseyError);        // bad index
  CHECK_THROWS_AS(sub_ip(ip, {}), RamseyError);           // no blocks
}

TEST_CASE("finite sums live inside the matching configuration set") {
  std::vector<std::vector<Int>> gens = {{Int(3)}, {Int(5)}, {Int(9)}};
  FiniteIP ip = fs(gens);
  Shape s = from_mpc(static_cast<int>(gens.size()) - 1, 1, 1);
  ConfigSet cs = generate(s, gens);
  std::set<std::vector<Int>> pts(cs.points.begin(), cs.points.end());
  for (const auto& v : ip.values) CHECK(pts.count(v) == 1);
}

TEST_CASE("probe certifies known intervals") {
  SearchBudget budget;
  std::vector<PolyMap> id_family = {PolyMap::linear_form({Int(1)})};

  // shifts {1,2,3}: two colors run out of room at 3
  IpProbeResult r1 = finitistic_ip_vdw_probe(id_family, fs({{Int(1)}, {Int(2)}}), 2, 10, budget);
  REQUIRE(r1.l.has_value());
  CHECK(*r1.l == 3);
  REQUIRE(r1.bad_below.has_value());
  CHECK(r1.bad_below->domain.volume() == 2);

  // zero shift: a is its own partner
  IpProbeResult r2 =
      finitistic_ip_vdw_probe({PolyMap::zero(1, 1)}, fs({{Int(1)}}), 2, 4, budget);
  REQUIRE(r2.l.has_value());
  CHECK(*r2.l == 1);
  CHECK_FALSE(r2.bad_below.has_value());

  // one color: the first interval with any pair at all
  IpProbeResult r3 = finitistic_ip_vdw_probe(id_family, fs({{Int(1)}}), 1, 4, budget);
  REQUIRE(r3.l.has_value());
  CHECK(*r3.l == 2);
}

TEST_CASE("probe reports failure with an alternating witness") {
  SearchBudget budget;
  std::vector<PolyMap> id_family = {PolyMap::linear_form({Int(1)})};
  IpProbeResult res = finitistic_ip_vdw_probe(id_family, fs({{Int(1)}}), 2, 6, budget);
  CHECK_FALSE(res.l.has_value());
  REQUIRE(res.bad_below.has_value());
  const Coloring& c = *res.bad_below;
  CHECK(c.domain.volume() == 6);
  for (long k = 1; k < 6; ++k)
    CHECK(c.at({Int(k)}) != c.at({Int(k + 1)}));  // shift 1 forces alternation
}

TEST_CASE("probe rejects maps with the wrong signature") {
  SearchBudget budget;
  FiniteIP plane = fs({{Int(1), Int(0)}, {Int(0), Int(1)}});
  std::vector<PolyMap> wrong = {PolyMap::linear_form({Int(1)})};  // dim 1, need 2
  CHECK_THROWS_WITH_AS(finitistic_ip_vdw_probe(wrong, plane, 2, 3, budget),
                       doctest::Contains("probe maps"), RamseyError);
}

TEST_CASE("probe works over the plane") {
  SearchBudget budget;
  // f(x, y) = x + y collapses the plane system to shifts {1, 2}
  std::vector<PolyMap> f = {PolyMap::from_matrix(1, 2, IntMatrix(1, 2, {Int(1), Int(1)}))};
  FiniteIP plane = fs({{Int(1), Int(0)}, {Int(0), Int(1)}});
  IpProbeResult res = finitistic_ip_vdw_probe(f, plane, 2, 10, budget);
  REQUIRE(res.l.has_value());
  CHECK(*res.l == 3);  // shifts {1,2} give a triangle on {k, k+1, k+2}
}

TEST_CASE("validation guards dimensions") {
  FiniteIP ip = fs({{Int(1)}, {Int(2)}});
  ip.d = 2;
  CHECK_THROWS_AS(ip.validate(), RamseyError);
  ip.d = 1;
  ip.values.pop_back();
  CHECK_THROWS_AS(ip.validate(), RamseyError);
}
