#include "ramsey/json_io.hpp"

#include <cstdint>

namespace ramsey {

namespace {

std::string int_str(const Int& v) { return v.get_str(); }
std::string rat_str(const Rat& v) { return v.get_str(); }

Int js_int(const Json& j) {
  if (j.is_string()) return int_from_string(j.get<std::string>());
  if (j.is_number_integer()) return int_from_string(std::to_string(j.get<long long>()));
  throw RamseyError("expected an integer (as decimal string)");
}

Rat js_rat(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return rat_from_string(std::to_string(j.get<long long>()));
  throw RamseyError("expected a rational (as decimal string)");
}

long js_long(const Json& j) { return to_long(js_int(j)); }

int js_small(const Json& j, const char* what) {
  long v = js_long(j);
  RK_CHECK(v >= -(1 << 20) && v <= (1 << 20), std::string("value out of range for ") + what);
  return static_cast<int>(v);
}

// converts nlohmann parse/access errors into library errors
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw RamseyError(std::string("bad json for ") + what + ": " + e.what());
  }
}

}  // namespace

std::string fnv1a64_hex(const std::string& data) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json j;
  j["rows"] = std::to_string(m.rows);
  j["cols"] = std::to_string(m.cols);
  Json data = Json::array();
  for (const Int& v : m.a) data.push_back(int_str(v));
  j["data"] = std::move(data);
  return j;
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    IntMatrix m(js_small(j.at("rows"), "rows"), js_small(j.at("cols"), "cols"));
    const Json& data = j.at("data");
    RK_CHECK(data.size() == m.a.size(), "matrix data length mismatch");
    for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = js_int(data[i]);
    return m;
  });
}

Json polymap_to_json(const PolyMap& f) {
  Json j;
  auto coord = [&](const std::vector<Monomial>& ms) {
    Json list = Json::array();
    for (const Monomial& m : ms) {
      Json row = Json::array();
      for (int e : m.exps) row.push_back(std::to_string(e));
      row.push_back(int_str(m.coeff));
      list.push_back(std::move(row));
    }
    return list;
  };
  if (f.out_dim == 1) {
    j["monomials"] = coord(f.coords[0]);
  } else {
    Json coords = Json::array();
    for (const auto& ms : f.coords) coords.push_back(coord(ms));
    j["coords"] = std::move(coords);
  }
  return j;
}

PolyMap polymap_from_json(const Json& j, int arity, int dim) {
  return guarded("map", [&] {
    PolyMap f;
    f.arity = arity;
    f.dim = dim;
    auto coord = [&](const Json& list) {
      std::vector<Monomial> ms;
      for (const Json& row : list) {
        RK_CHECK(row.is_array() && static_cast<int>(row.size()) == arity * dim + 1,
                 "monomial row must hold arity*dim exponents plus a coefficient");
        Monomial m;
        for (int i = 0; i < arity * dim; ++i) m.exps.push_back(js_small(row[i], "exponent"));
        m.coeff = js_int(row[arity * dim]);
        ms.push_back(std::move(m));
      }
      return ms;
    };
    if (j.contains("monomials")) {
      f.out_dim = 1;
      f.coords.push_back(coord(j.at("monomials")));
    } else {
      const Json& coords = j.at("coords");
      f.out_dim = static_cast<int>(coords.size());
      RK_CHECK(f.out_dim >= 1, "map needs at least one output coordinate");
      for (const Json& c : coords) f.coords.push_back(coord(c));
    }
    f.canonicalize();
    return f;
  });
}

Json shape_to_json(const Shape& s) {
  Json j;
  j["d"] = std::to_string(s.d);
  j["m"] = std::to_string(s.m);
  j["c"] = matrix_to_json(s.c);
  Json families = Json::array();
  for (const auto& fam : s.families) {
    Json jf = Json::array();
    for (const PolyMap& f : fam) jf.push_back(polymap_to_json(f));
    families.push_back(std::move(jf));
  }
  j["families"] = std::move(families);
  return j;
}

Shape shape_from_json(const Json& j) {
  return guarded("shape", [&] {
    Shape s;
    s.d = js_small(j.at("d"), "d");
    s.m = js_small(j.at("m"), "m");
    s.c = matrix_from_json(j.at("c"));
    const Json& families = j.at("families");
    RK_CHECK(static_cast<int>(families.size()) == s.m, "family count must equal m");
    for (int k = 1; k <= s.m; ++k) {
      std::vector<PolyMap> fam;
      for (const Json& jf : families[k - 1]) fam.push_back(polymap_from_json(jf, k, s.d));
      s.families.push_back(std::move(fam));
    }
    s.validate();
    return s;
  });
}

std::string shape_hash(const Shape& s) { return fnv1a64_hex(shape_to_json(s).dump()); }

Json box_to_json(const Box& b) {
  Json ranges = Json::array();
  for (const auto& [lo, hi] : b.range) ranges.push_back(Json::array({int_str(lo), int_str(hi)}));
  Json j;
  j["ranges"] = std::move(ranges);
  return j;
}

Box box_from_json(const Json& j) {
  return guarded("box", [&] {
    Box b;
    for (const Json& r : j.at("ranges")) {
      RK_CHECK(r.is_array() && r.size() == 2, "range must be a [lo, hi] pair");
      b.range.emplace_back(js_int(r[0]), js_int(r[1]));
    }
    b.validate();
    return b;
  });
}

Json coloring_to_json(const Coloring& c) {
  Json j;
  j["domain"] = box_to_json(c.domain);
  j["colors"] = std::to_string(c.r);
  j["rle"] = c.rle();
  return j;
}

Coloring coloring_from_json(const Json& j) {
  return guarded("coloring", [&] {
    Box b = box_from_json(j.at("domain"));
    int r = js_small(j.at("colors"), "colors");
    return Coloring::from_rle(b, r, j.at("rle").get<std::string>());
  });
}

Json seed_to_json(const SeedVector& s) {
  Json j = Json::array();
  for (const auto& p : s) {
    Json jp = Json::array();
    for (const Int& x : p) jp.push_back(int_str(x));
    j.push_back(std::move(jp));
  }
  return j;
}

SeedVector seed_from_json(const Json& j) {
  return guarded("seed", [&] {
    SeedVector s;
    for (const Json& jp : j) {
      std::vector<Int> p;
      for (const Json& x : jp) p.push_back(js_int(x));
      RK_CHECK(!p.empty(), "empty seed point");
      s.push_back(std::move(p));
    }
    return s;
  });
}

Json config_set_to_json(const ConfigSet& cs) {
  auto points = [](const std::vector<std::vector<Int>>& pts) {
    Json j = Json::array();
    for (const auto& p : pts) {
      Json jp = Json::array();
      for (const Int& x : p) jp.push_back(int_str(x));
      j.push_back(std::move(jp));
    }
    return j;
  };
  Json j;
  Json lines = Json::array();
  for (const auto& line : cs.lines) lines.push_back(points(line));
  j["lines"] = std::move(lines);
  j["points"] = points(cs.points);
  j["term-count"] = std::to_string(cs.term_count);
  j["collisions"] = cs.collisions();
  return j;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["kind"] = c.kind;
  j["engine-version"] = c.engine_version;
  j["shape"] = shape_to_json(c.shape);
  j["shape-hash"] = shape_hash(c.shape);
  Json mask = Json::array();
  for (int k : c.line_mask) mask.push_back(std::to_string(k));
  j["line-mask"] = std::move(mask);
  j["colors"] = std::to_string(c.colors);
  j["proof-mode"] = c.proof_mode;
  if (c.coloring) j["domain"] = box_to_json(c.coloring->domain);
  if (c.minimal_n) {
    j["n"] = std::to_string(*c.minimal_n);
    j["domain"] = box_to_json(Box::interval(1, Int(*c.minimal_n)));
  }
  if (c.seed) j["seed"] = seed_to_json(*c.seed);
  if (c.witness_color) j["witness-color"] = std::to_string(*c.witness_color);
  if (c.coloring) j["coloring"] = coloring_to_json(*c.coloring);
  if (c.coloring_below) j["coloring-below"] = coloring_to_json(*c.coloring_below);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    Certificate c;
    c.kind = j.at("kind").get<std::string>();
    c.engine_version = j.at("engine-version").get<std::string>();
    c.shape = shape_from_json(j.at("shape"));
    if (j.contains("shape-hash"))
      RK_CHECK(j.at("shape-hash").get<std::string>() == shape_hash(c.shape),
               "shape hash mismatch");
    for (const Json& k : j.at("line-mask")) c.line_mask.push_back(js_small(k, "line index"));
    c.colors = js_small(j.at("colors"), "colors");
    c.proof_mode = j.at("proof-mode").get<std::string>();
    if (j.contains("seed")) c.seed = seed_from_json(j.at("seed"));
    if (j.contains("witness-color")) c.witness_color = js_small(j.at("witness-color"), "color");
    if (j.contains("coloring")) c.coloring = coloring_from_json(j.at("coloring"));
    if (j.contains("n")) c.minimal_n = js_long(j.at("n"));
    if (j.contains("coloring-below")) c.coloring_below = coloring_from_json(j.at("coloring-below"));
    return c;
  });
}

Json columns_cert_to_json(const ColumnsCertificate& c) {
  Json j;
  Json perm = Json::array();
  for (int i : c.permutation) perm.push_back(std::to_string(i));
  j["permutation"] = std::move(perm);
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    Json jb = Json::array();
    for (int i : b) jb.push_back(std::to_string(i));
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  Json coeffs = Json::array();
  for (const auto& row : c.coeffs) {
    Json jr = Json::array();
    for (const Rat& q : row) jr.push_back(rat_str(q));
    coeffs.push_back(std::move(jr));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

ColumnsCertificate columns_cert_from_json(const Json& j) {
  return guarded("columns certificate", [&] {
    ColumnsCertificate c;
    for (const Json& i : j.at("permutation")) c.permutation.push_back(js_small(i, "column index"));
    for (const Json& jb : j.at("blocks")) {
      std::vector<int> b;
      for (const Json& i : jb) b.push_back(js_small(i, "column index"));
      c.blocks.push_back(std::move(b));
    }
    for (const Json& jr : j.at("coefficients")) {
      std::vector<Rat> row;
      for (const Json& q : jr) row.push_back(js_rat(q));
      c.coeffs.push_back(std::move(row));
    }
    return c;
  });
}

Json gen_columns_cert_to_json(const GenColumnsCertificate& c) {
  Json j;
  j["c"] = matrix_to_json(c.c);
  Json perm = Json::array();
  for (int i : c.permutation) perm.push_back(std::to_string(i));
  j["permutation"] = std::move(perm);
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    Json jb = Json::array();
    for (int i : b) jb.push_back(std::to_string(i));
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  Json wit = Json::array();
  for (const auto& row : c.witnesses) {
    Json jr = Json::array();
    for (const IntMatrix& m : row) jr.push_back(matrix_to_json(m));
    wit.push_back(std::move(jr));
  }
  j["witnesses"] = std::move(wit);
  return j;
}

GenColumnsCertificate gen_columns_cert_from_json(const Json& j) {
  return guarded("generalized columns certificate", [&] {
    GenColumnsCertificate c;
    c.c = matrix_from_json(j.at("c"));
    for (const Json& i : j.at("permutation")) c.permutation.push_back(js_small(i, "column index"));
    for (const Json& jb : j.at("blocks")) {
      std::vector<int> b;
      for (const Json& i : jb) b.push_back(js_small(i, "column index"));
      c.blocks.push_back(std::move(b));
    }
    for (const Json& jr : j.at("witnesses")) {
      std::vector<IntMatrix> row;
      for (const Json& m : jr) row.push_back(matrix_from_json(m));
      c.witnesses.push_back(std::move(row));
    }
    return c;
  });
}

Json lift_plan_to_json(const LiftPlan& p) {
  Json j;
  j["shape"] = shape_to_json(p.base);
  j["r"] = std::to_string(p.r);
  j["k"] = std::to_string(p.k);
  j["n"] = std::to_string(p.n);
  j["b"] = matrix_to_json(p.b);
  Json a = Json::array();
  for (const auto& fam : p.a) {
    Json jf = Json::array();
    for (const PolyMap& f : fam) jf.push_back(polymap_to_json(f));
    a.push_back(std::move(jf));
  }
  j["a"] = std::move(a);
  j["big-n"] = std::to_string(p.big_n);
  j["big-m"] = std::to_string(p.big_m);
  j["big"] = shape_to_json(p.big);
  return j;
}

LiftPlan lift_plan_from_json(const Json& j) {
  return guarded("lift plan", [&] {
    LiftPlan p;
    p.base = shape_from_json(j.at("shape"));
    p.r = js_small(j.at("r"), "r");
    p.k = js_small(j.at("k"), "k");
    p.n = js_small(j.at("n"), "n");
    p.b = matrix_from_json(j.at("b"));
    const Json& a = j.at("a");
    RK_CHECK(static_cast<int>(a.size()) == p.base.m, "witness family count must equal m");
    for (int k = 1; k <= p.base.m; ++k) {
      std::vector<PolyMap> fam;
      for (const Json& jf : a[k - 1]) fam.push_back(polymap_from_json(jf, k, p.base.d));
      p.a.push_back(std::move(fam));
    }
    p.big_n = js_small(j.at("big-n"), "big-n");
    p.big_m = js_small(j.at("big-m"), "big-m");
    p.big = shape_from_json(j.at("big"));
    return p;
  });
}

Json ip_to_json(const FiniteIP& ip) {
  Json j;
  j["d"] = std::to_string(ip.d);
  j["generators"] = seed_to_json(ip.generators);
  Json values = Json::array();
  for (const auto& v : ip.values) {
    Json jp = Json::array();
    for (const Int& x : v) jp.push_back(int_str(x));
    values.push_back(std::move(jp));
  }
  j["values"] = std::move(values);
  return j;
}

FiniteIP ip_from_json(const Json& j) {
  return guarded("finite ip", [&] {
    FiniteIP ip = fs(seed_from_json(j.at("generators")));
    RK_CHECK(ip.d == js_small(j.at("d"), "d"), "dimension mismatch");
    if (j.contains("values")) {
      const Json& values = j.at("values");
      RK_CHECK(values.size() == ip.values.size(), "value table size mismatch");
      for (size_t i = 0; i < ip.values.size(); ++i) {
        const Json& jp = values[i];
        RK_CHECK(jp.size() == ip.values[i].size(), "value dimension mismatch");
        for (size_t x = 0; x < ip.values[i].size(); ++x)
          RK_CHECK(js_int(jp[x]) == ip.values[i][x], "stored subset sum disagrees");
      }
    }
    return ip;
  });
}

}  // namespace ramsey
