#include <string>

#include "doctest.h"
#include "ramsey/json_io.hpp"

using namespace ramsey;

namespace {

Shape schur_shape() {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::zero(1, 1), PolyMap::linear_form({Int(-1)})}};
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("matrices round trip as decimal strings") {
  IntMatrix m(2, 3, {Int(1), Int(-2), Int(3), Int(0), Int(5), Int(-6)});
  Json j = matrix_to_json(m);
  CHECK(j["rows"] == "2");
  CHECK(j["data"][1] == "-2");
  CHECK(matrix_from_json(j) == m);

  // huge entries survive
  IntMatrix big(1, 1, {int_from_string("123456789012345678901234567890")});
  CHECK(matrix_from_json(matrix_to_json(big)) == big);
}

TEST_CASE("polynomial maps round trip") {
  PolyMap f = PolyMap::power(3, 2).plus(PolyMap::linear_form({Int(5)}));
  Json j = polymap_to_json(f);
  CHECK(j.contains("monomials"));
  PolyMap back = polymap_from_json(j, f.arity, f.dim);
  CHECK(back == f);

  // out_dim 2 maps list coordinates separately
  PolyMap pr = PolyMap::projection(2, 2, 0);
  PolyMap two = PolyMap::from_matrix(1, 2, IntMatrix(2, 2, {Int(1), Int(2), Int(3), Int(4)}));
  Json j2 = polymap_to_json(two);
  CHECK(j2.contains("coords"));
  CHECK(polymap_from_json(j2, two.arity, two.dim) == two);
  CHECK(polymap_from_json(polymap_to_json(pr), 2, 2) == pr);
}

TEST_CASE("shapes round trip and hash stably") {
  Shape s = from_mpc(2, 1, 2);
  Json j = shape_to_json(s);
  Shape back = shape_from_json(j);
  CHECK(back == s);
  CHECK(shape_to_json(back).dump() == j.dump());
  CHECK(shape_hash(back) == shape_hash(s));
  CHECK(shape_hash(s).size() == 16);  // 64-bit hex
  CHECK(shape_hash(s) != shape_hash(schur_shape()));
}

TEST_CASE("boxes, colorings and seeds round trip") {
  Box b{{{Int(-3), Int(3)}, {Int(1), Int(5)}}};
  CHECK(box_from_json(box_to_json(b)) == b);

  Coloring c = Coloring::random(Box::interval(1, 40), 3, 99);
  Json cj = coloring_to_json(c);
  CHECK(cj["colors"] == "3");
  CHECK(cj["rle"].is_string());
  CHECK(coloring_from_json(cj) == c);

  SeedVector seed = {{Int(4), Int(-1)}, {Int(2), Int(9)}};
  CHECK(seed_from_json(seed_to_json(seed)) == seed);
}

TEST_CASE("certificates survive the round trip and still verify") {
  Shape s = schur_shape();
  SearchBudget budget;
  SearchStats stats;
  Coloring parity = Coloring::parity(Box::interval(1, 12), 2);
  auto w = find_mono(s, all_lines(s), parity, budget, &stats);
  REQUIRE(w.has_value());
  Certificate cert = make_mono_certificate(s, all_lines(s), parity, *w);
  Json j = certificate_to_json(cert);
  CHECK(j["kind"] == "mono-witness");
  Certificate back = certificate_from_json(j);
  std::string why;
  CHECK(verify_certificate(back, budget, &why));

  // tampering with the stored shape breaks the recorded hash
  Json bad = j;
  bad["shape"]["c"]["data"][0] = "2";
  CHECK_THROWS_AS(certificate_from_json(bad), RamseyError);
}

TEST_CASE("minimal-n certificates keep the witness coloring") {
  Shape s = schur_shape();
  SearchBudget budget;
  PartitionResult pr = min_partition_number(s, all_lines(s), 2, 10, budget);
  REQUIRE(pr.n == 5);
  Certificate cert = make_minimal_n_certificate(s, all_lines(s), 2, pr);
  Certificate back = certificate_from_json(certificate_to_json(cert));
  REQUIRE(back.minimal_n.has_value());
  CHECK(*back.minimal_n == 5);
  REQUIRE(back.coloring_below.has_value());
  CHECK(back.coloring_below->rle() == "1x0,2x1,1x0");
  std::string why;
  CHECK(verify_certificate(back, budget, &why));
}

TEST_CASE("columns certificates round trip") {
  IntMatrix a(1, 3, {Int(1), Int(1), Int(-1)});
  auto cert = check_columns(a);
  REQUIRE(cert.has_value());
  ColumnsCertificate back = columns_cert_from_json(columns_cert_to_json(*cert));
  CHECK(back.permutation == cert->permutation);
  CHECK(back.blocks == cert->blocks);
  CHECK(verify_columns_certificate(a, back));

  std::vector<IntMatrix> cols = {IntMatrix(1, 1, {Int(2)}), IntMatrix(1, 1, {Int(-2)})};
  auto gen = check_columns_general(cols, IntMatrix::identity(1));
  REQUIRE(gen.has_value());
  GenColumnsCertificate gback = gen_columns_cert_from_json(gen_columns_cert_to_json(*gen));
  CHECK(verify_gen_certificate(cols, gback));
}

TEST_CASE("lift plans round trip") {
  Shape base;
  base.d = 1;
  base.m = 1;
  base.c = IntMatrix(1, 1, {Int(1)});
  base.families = {{PolyMap::zero(1, 1), PolyMap::linear_form({Int(1)})}};
  base.canonicalize();
  LiftPlan plan = lift(base, 2, 0);
  Json j = lift_plan_to_json(plan);
  LiftPlan back = lift_plan_from_json(j);
  CHECK(back.n == plan.n);
  CHECK(back.big == plan.big);
  CHECK(back.b == plan.b);
  CHECK(lift_plan_to_json(back).dump() == j.dump());
}

TEST_CASE("IP systems recompute their value tables on load") {
  FiniteIP ip = fs({{Int(2), Int(1)}, {Int(-1), Int(4)}});
  Json j = ip_to_json(ip);
  FiniteIP back = ip_from_json(j);
  CHECK(back.values == ip.values);

  Json bad = j;
  bad["values"][0][0] = "99";  // inconsistent with the generators
  CHECK_THROWS_AS(ip_from_json(bad), RamseyError);
}

TEST_CASE("malformed documents raise library errors, not json ones") {
  CHECK_THROWS_AS(matrix_from_json(Json{{"rows", "2"}, {"cols", "2"}}), RamseyError);
  CHECK_THROWS_AS(matrix_from_json(Json{{"rows", "1"}, {"cols", "1"}, {"data", Json::array({"x"})}}),
                  RamseyError);
  CHECK_THROWS_AS(shape_from_json(Json::object()), RamseyError);
  CHECK_THROWS_AS(coloring_from_json(Json{{"domain", box_to_json(Box::interval(1, 3))},
                                          {"colors", "2"},
                                          {"rle", "1x0"}}),
                  RamseyError);
}
