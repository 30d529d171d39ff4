#pragma once

#include <string>

#include "nlohmann/json.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/ip.hpp"
#include "ramsey/lift.hpp"
#include "ramsey/rado.hpp"
#include "ramsey/search.hpp"
#include "ramsey/shape.hpp"

namespace ramsey {

using Json = nlohmann::json;

// All integers and rationals serialize as decimal strings so arbitrary
// precision survives the round trip; matrices are row-major. Keys are
// emitted sorted, so dumps are byte-stable and hashable.

std::string fnv1a64_hex(const std::string& data);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json polymap_to_json(const PolyMap& f);
PolyMap polymap_from_json(const Json& j, int arity, int dim);

Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j);
std::string shape_hash(const Shape& s);

Json box_to_json(const Box& b);
Box box_from_json(const Json& j);

Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json seed_to_json(const SeedVector& s);
SeedVector seed_from_json(const Json& j);

Json config_set_to_json(const ConfigSet& cs);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json columns_cert_to_json(const ColumnsCertificate& c);
ColumnsCertificate columns_cert_from_json(const Json& j);

Json gen_columns_cert_to_json(const GenColumnsCertificate& c);
GenColumnsCertificate gen_columns_cert_from_json(const Json& j);

Json lift_plan_to_json(const LiftPlan& p);
LiftPlan lift_plan_from_json(const Json& j);

Json ip_to_json(const FiniteIP& ip);
FiniteIP ip_from_json(const Json& j);

}  // namespace ramsey
