// command line front end. every run writes json artifacts into --out and
// appends one run record line to <out>/ledger.ndjson. exit codes: 0 ok,
// 1 claim failed or not established, 2 usage, 3 budget exhausted.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/version.hpp"

namespace stdfs = std::filesystem;
using namespace ramsey;

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Int parse_int(const std::string& s) {
  try {
    return int_from_string(s);
  } catch (const RamseyError&) {
    throw usage_error("not an integer: '" + s + "'");
  }
}

IntMatrix parse_matrix(const std::string& s) {
  std::vector<std::vector<Int>> rows;
  for (const std::string& row : split(s, ';')) {
    std::vector<Int> r;
    for (const std::string& t : tokens(row)) r.push_back(parse_int(t));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw usage_error("empty matrix");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw usage_error("ragged matrix rows");
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

// points separated by ';', coordinates by whitespace. a flat token list is
// also accepted and regrouped into points of size d.
SeedVector parse_points(const std::string& s, int d) {
  SeedVector pts;
  if (s.find(';') != std::string::npos) {
    for (const std::string& p : split(s, ';')) {
      std::vector<Int> coords;
      for (const std::string& t : tokens(p)) coords.push_back(parse_int(t));
      if (coords.empty()) continue;
      if (static_cast<int>(coords.size()) != d)
        throw usage_error("point has " + std::to_string(coords.size()) + " coordinates, want " +
                          std::to_string(d));
      pts.push_back(std::move(coords));
    }
  } else {
    std::vector<Int> flat;
    for (const std::string& t : tokens(s)) flat.push_back(parse_int(t));
    if (flat.empty() || flat.size() % d != 0)
      throw usage_error("token count not a multiple of the dimension");
    for (size_t i = 0; i < flat.size(); i += d)
      pts.push_back(std::vector<Int>(flat.begin() + i, flat.begin() + i + d));
  }
  return pts;
}

std::vector<int> parse_mask(const std::string& s) {
  std::vector<int> out;
  std::string norm = s;
  for (char& ch : norm)
    if (ch == ',') ch = ' ';
  for (const std::string& t : tokens(norm)) out.push_back(static_cast<int>(to_long(parse_int(t))));
  if (out.empty()) throw usage_error("empty line mask");
  return out;
}

// "lo:hi" or "lo:hi,lo:hi,..."; one range broadcasts to all d coordinates
Box parse_box(const std::string& s, int d) {
  Box b;
  for (const std::string& part : split(s, ',')) {
    auto lohi = split(part, ':');
    if (lohi.size() != 2) throw usage_error("range must look like lo:hi");
    b.range.emplace_back(parse_int(lohi[0]), parse_int(lohi[1]));
  }
  if (static_cast<int>(b.range.size()) == 1 && d > 1)
    b.range.assign(d, b.range[0]);
  if (b.dim() != d) throw usage_error("domain has wrong dimension");
  b.validate();
  return b;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw usage_error("bad json in " + path + ": " + e.what());
  }
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt_point(const std::vector<Int>& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].get_str();
  }
  return out + ")";
}

std::string fmt_seed(const SeedVector& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += fmt_point(s[i]);
  }
  return out;
}

std::string fmt_word(const Word& w) {
  std::string out;
  for (int ch : w) out += ch == 0 ? std::string("*") : std::to_string(ch);
  return out;
}

// words live in the box [1,k]^n; a word is its own point there
std::vector<Int> as_point(const Word& w) {
  std::vector<Int> p;
  for (int ch : w) p.emplace_back(ch);
  return p;
}

// per-run artifact and ledger bookkeeping
struct run_ctx {
  std::string out_dir = "out";
  Json inputs = Json::object();
  Json artifacts = Json::object();

  void note_input(const std::string& label, const std::string& content) {
    inputs[label] = fnv1a64_hex(content);
  }

  std::string write_artifact(const std::string& stem, const Json& j) {
    std::string content = dump_pretty(j);
    std::string hash = fnv1a64_hex(content);
    stdfs::create_directories(out_dir);
    std::string path = out_dir + "/" + stem + "-" + hash.substr(0, 12) + ".json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RamseyError("cannot write " + path);
    out << content;
    artifacts[stem] = Json{{"path", path}, {"hash", hash}};
    std::printf("wrote %s\n", path.c_str());
    return path;
  }
};

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// shared flags

struct budget_opts {
  uint64_t max_nodes = 50'000'000;
  double max_seconds = 55.0;
  int threads = 1;
  std::string seed_range;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "search node budget");
    cmd->add_option("--max-seconds", max_seconds, "wall clock budget");
    cmd->add_option("--threads", threads, "worker threads for coloring sweeps");
    cmd->add_option("--seed-range", seed_range, "seed coordinate bounds lo:hi[,lo:hi...]");
  }

  SearchBudget build(int d) const {
    SearchBudget b;
    b.max_nodes = max_nodes;
    b.max_seconds = max_seconds;
    b.threads = threads;
    if (!seed_range.empty()) b.seed_box = parse_box(seed_range, d);
    return b;
  }
};

struct coloring_opts {
  int colors = 2;
  std::string spec = "parity";
  std::string domain;
  long n = 0;

  void attach(CLI::App* cmd, bool with_domain = true) {
    cmd->add_option("--colors", colors, "number of colors");
    cmd->add_option("--coloring", spec, "parity | const:K | random:SEED | file:PATH");
    if (with_domain) {
      cmd->add_option("--domain", domain, "coloring domain lo:hi[,lo:hi...]");
      cmd->add_option("-n,--n", n, "domain shorthand: [1,N] on Z, [-N,N]^d above");
    }
  }

  std::optional<Box> box(int d) const {
    if (!domain.empty()) return parse_box(domain, d);
    if (n > 0) {
      Box b;
      if (d == 1)
        b.range.emplace_back(1, Int(n));
      else
        b.range.assign(d, {Int(-n), Int(n)});
      return b;
    }
    return std::nullopt;
  }

  Coloring build(const std::optional<Box>& dom) const {
    if (spec.rfind("file:", 0) == 0) {
      Coloring c = coloring_from_json(load_json(spec.substr(5)));
      if (dom && !(c.domain == *dom)) throw usage_error("coloring file domain mismatch");
      if (c.r != colors) throw usage_error("coloring file color count mismatch");
      return c;
    }
    if (!dom) throw usage_error("need --domain or --n");
    if (spec == "parity") return Coloring::parity(*dom, colors);
    if (spec.rfind("const:", 0) == 0)
      return Coloring::constant(*dom, colors, static_cast<int>(to_long(parse_int(spec.substr(6)))));
    if (spec.rfind("random:", 0) == 0)
      return Coloring::random(*dom, colors, std::stoull(spec.substr(7)));
    if (spec == "random") return Coloring::random(*dom, colors, 1);
    throw usage_error("unknown coloring spec '" + spec + "'");
  }
};

Shape load_shape(const std::string& path, run_ctx& ctx) {
  Json j = load_json(path);
  Shape s = shape_from_json(j);
  ctx.note_input("shape", j.dump());
  return s;
}

int exit_for_stats(const SearchStats& st, const char* what) {
  if (st.node_limit_hit || st.time_limit_hit) {
    std::printf("budget exhausted during %s (nodes=%llu)\n", what,
                static_cast<unsigned long long>(st.nodes));
    return 3;
  }
  return 1;
}

IntMatrix matrix_arg(const std::string& inline_str, const std::string& file, run_ctx& ctx) {
  if (!inline_str.empty() && !file.empty()) throw usage_error("give --matrix or --file, not both");
  if (!inline_str.empty()) {
    ctx.note_input("matrix", inline_str);
    return parse_matrix(inline_str);
  }
  if (!file.empty()) {
    Json j = load_json(file);
    ctx.note_input("matrix", j.dump());
    return matrix_from_json(j);
  }
  throw usage_error("need --matrix or --file");
}

Json wrap(const char* kind, Json body) {
  body["kind"] = kind;
  body["engine-version"] = engine_version;
  return body;
}

// subcommand bodies

int cmd_shape_mpc(run_ctx& ctx, int m, int p, const std::string& c_str, const std::string& seed_str) {
  Shape s = from_mpc(m, p, parse_int(c_str));
  ctx.write_artifact("shape-mpc", shape_to_json(s));
  std::printf("shape: d=%d m=%d c=%s hash=%s\n", s.d, s.m, c_str.c_str(), shape_hash(s).c_str());
  for (int k = 1; k <= s.m; ++k) std::printf("  |F_%d| = %zu\n", k, s.family(k).size());
  if (!seed_str.empty()) {
    SeedVector seed = parse_points(seed_str, s.d);
    ConfigSet cs = generate(s, seed);
    ctx.write_artifact("configuration", config_set_to_json(cs));
    std::printf("configuration: %zu points, collisions=%s\n", cs.points.size(),
                cs.collisions() ? "yes" : "no");
  }
  return 0;
}

int cmd_shape_gen(run_ctx& ctx, const std::string& shape_file, const std::string& seed_str,
                  const std::string& mask_str) {
  Shape s = load_shape(shape_file, ctx);
  SeedVector seed = parse_points(seed_str, s.d);
  std::vector<int> mask = mask_str.empty() ? all_lines(s) : parse_mask(mask_str);
  ConfigSet cs = generate_masked(s, seed, mask);
  ctx.write_artifact("configuration", config_set_to_json(cs));
  std::printf("configuration: %zu points over %zu terms, collisions=%s\n", cs.points.size(),
              cs.term_count, cs.collisions() ? "yes" : "no");
  for (const auto& p : cs.points) std::printf("  %s\n", fmt_point(p).c_str());
  return 0;
}

int cmd_shape_join(run_ctx& ctx, const std::string& file_a, const std::string& file_b) {
  Shape a = load_shape(file_a, ctx);
  Shape b = shape_from_json(load_json(file_b));
  ctx.note_input("shape-b", shape_to_json(b).dump());
  Shape j = join_shapes(a, b);
  ctx.write_artifact("shape-join", shape_to_json(j));
  std::printf("join: d=%d m=%d hash=%s\n", j.d, j.m, shape_hash(j).c_str());
  return 0;
}

void print_blocks(const std::vector<std::vector<int>>& blocks) {
  std::printf("blocks:");
  for (const auto& b : blocks) {
    std::printf(" {");
    for (size_t i = 0; i < b.size(); ++i) std::printf("%s%d", i ? "," : "", b[i] + 1);
    std::printf("}");
  }
  std::printf("\n");
}

int cmd_rado_check(run_ctx& ctx, const std::string& mat_str, const std::string& file) {
  IntMatrix a = matrix_arg(mat_str, file, ctx);
  auto cert = check_columns(a);
  if (!cert) {
    std::printf("columns condition: not satisfied\n");
    return 1;
  }
  RK_CHECK(verify_columns_certificate(a, *cert), "produced certificate failed re-verification");
  std::printf("columns condition: satisfied\n");
  print_blocks(cert->blocks);
  ctx.write_artifact("columns-certificate",
                     wrap("columns", Json{{"matrix", matrix_to_json(a)},
                                          {"certificate", columns_cert_to_json(*cert)}}));
  return 0;
}

int cmd_rado_check_gen(run_ctx& ctx, const std::string& cols_file, const std::string& c_str) {
  Json jc = load_json(cols_file);
  ctx.note_input("columns", jc.dump());
  std::vector<IntMatrix> cols;
  for (const Json& m : jc) cols.push_back(matrix_from_json(m));
  std::optional<GenColumnsCertificate> cert;
  if (!c_str.empty())
    cert = check_columns_general(cols, parse_matrix(c_str));
  else
    cert = check_columns_general_auto(cols);
  if (!cert) {
    std::printf("generalized columns condition: no witness found\n");
    return 1;
  }
  RK_CHECK(verify_gen_certificate(cols, *cert), "produced certificate failed re-verification");
  std::printf("generalized columns condition: satisfied\n");
  print_blocks(cert->blocks);
  Json jcols = Json::array();
  for (const IntMatrix& m : cols) jcols.push_back(matrix_to_json(m));
  ctx.write_artifact("gen-columns-certificate",
                     wrap("columns-general", Json{{"columns", jcols},
                                                  {"certificate", gen_columns_cert_to_json(*cert)}}));
  return 0;
}

int cmd_rado_reduce(run_ctx& ctx, const std::string& mat_str, const std::string& file) {
  IntMatrix a = matrix_arg(mat_str, file, ctx);
  auto cert = check_columns(a);
  if (!cert) {
    std::printf("columns condition: not satisfied, no reduction\n");
    return 1;
  }
  Reduction red = deuber_reduce(a, *cert);
  RK_CHECK((a * red.b).is_zero(), "reduction sanity: A*B != 0");
  Shape cfg = config_shape_from_matrix(red.b, red.c);
  ctx.write_artifact("config-shape", shape_to_json(cfg));
  ctx.write_artifact("reduction",
                     wrap("reduction", Json{{"matrix", matrix_to_json(a)},
                                            {"b", matrix_to_json(red.b)},
                                            {"m", std::to_string(red.m)},
                                            {"p", red.p.get_str()},
                                            {"c", red.c.get_str()},
                                            {"config-shape", shape_to_json(cfg)}}));
  std::printf("reduction: m=%d p=%s c=%s, B is %dx%d\n", red.m, red.p.get_str().c_str(),
              red.c.get_str().c_str(), red.b.rows, red.b.cols);
  return 0;
}

int cmd_search_mono(run_ctx& ctx, const std::string& shape_file, const std::string& mask_str,
                    const coloring_opts& copt, const budget_opts& bopt) {
  Shape s = load_shape(shape_file, ctx);
  std::vector<int> mask = mask_str.empty() ? all_lines(s) : parse_mask(mask_str);
  Coloring col = copt.build(copt.box(s.d));
  ctx.note_input("coloring", coloring_to_json(col).dump());
  SearchBudget budget = bopt.build(s.d);
  SearchStats st;
  auto witness = find_mono(s, mask, col, budget, &st);
  if (!witness) {
    std::printf("no monochromatic configuration in scanned range (nodes=%llu)\n",
                static_cast<unsigned long long>(st.nodes));
    return exit_for_stats(st, "seed scan");
  }
  Certificate cert = make_mono_certificate(s, mask, col, *witness);
  std::string why;
  RK_CHECK(verify_certificate(cert, budget, &why), "witness failed replay: " + why);
  ctx.write_artifact("certificate", certificate_to_json(cert));
  std::printf("witness: seed %s, color %d\n", fmt_seed(witness->seed).c_str(), witness->color);
  return 0;
}

int cmd_search_number(run_ctx& ctx, const std::string& shape_file, const std::string& mask_str,
                      int colors, long max_n, const budget_opts& bopt) {
  Shape s = load_shape(shape_file, ctx);
  if (s.d != 1) throw usage_error("search number handles d=1 shapes");
  std::vector<int> mask = mask_str.empty() ? all_lines(s) : parse_mask(mask_str);
  SearchBudget budget = bopt.build(s.d);
  PartitionResult res = min_partition_number(s, mask, colors, max_n, budget);
  if (!res.n) {
    std::printf("not decided up to N=%ld (nodes=%llu)\n", max_n,
                static_cast<unsigned long long>(res.stats.nodes));
    return exit_for_stats(res.stats, "partition number search");
  }
  Certificate cert = make_minimal_n_certificate(s, mask, colors, res);
  std::string why;
  RK_CHECK(verify_certificate(cert, budget, &why), "minimal-n failed replay: " + why);
  ctx.write_artifact("certificate", certificate_to_json(cert));
  std::printf("N = %ld (%s)\n", *res.n, res.exhaustive ? "exhaustive" : "assumed enumeration");
  if (res.bad_below)
    std::printf("bad coloring at N-1: %s\n", res.bad_below->rle().c_str());
  return 0;
}

int cmd_hj_line(run_ctx& ctx, int k, int n, const coloring_opts& copt, const budget_opts& bopt) {
  Box dom = word_box(k, n);
  Coloring col = copt.build(dom);
  ctx.note_input("coloring", coloring_to_json(col).dump());
  SearchStats st;
  auto vw = find_mono_line(k, n, col, bopt.build(n), &st);
  if (!vw) {
    std::printf("no monochromatic combinatorial line\n");
    return exit_for_stats(st, "line scan");
  }
  Json jw = Json::array();
  for (int ch : *vw) jw.push_back(std::to_string(ch));
  ctx.write_artifact("hj-line", wrap("hj-line", Json{{"k", std::to_string(k)},
                                                     {"n", std::to_string(n)},
                                                     {"colors", std::to_string(copt.colors)},
                                                     {"word", jw},
                                                     {"coloring", coloring_to_json(col)}}));
  std::printf("monochromatic line: %s (color %d)\n", fmt_word(*vw).c_str(),
              col.at(as_point(instantiate(*vw, 1))));
  return 0;
}

int cmd_hj_number(run_ctx& ctx, int k, int colors, int max_n, const budget_opts& bopt) {
  HjResult res = hj_number(k, colors, max_n, bopt.build(1));
  if (!res.n) {
    std::printf("not decided up to n=%d\n", max_n);
    return exit_for_stats(res.stats, "hales-jewett ladder");
  }
  Json body{{"k", std::to_string(k)},
            {"colors", std::to_string(colors)},
            {"n", std::to_string(*res.n)}};
  if (res.bad_below) body["bad-below"] = coloring_to_json(*res.bad_below);
  ctx.write_artifact("hj-number", wrap("hj-number", std::move(body)));
  std::printf("HJ(%d,%d) = %d\n", k, colors, *res.n);
  return 0;
}

int cmd_lift_build(run_ctx& ctx, const std::string& shape_file, int r, int k,
                   std::optional<int> n, size_t max_terms) {
  Shape s = load_shape(shape_file, ctx);
  LiftPlan plan = lift(s, r, k, n, max_terms);
  Json j = lift_plan_to_json(plan);
  j["kind"] = "lift-plan";
  j["engine-version"] = engine_version;
  ctx.write_artifact("lift-plan", j);
  std::printf("lift: n=%d N=%d M=%d\n", plan.n, plan.big_n, plan.big_m);
  for (int i = 1; i <= plan.big.m; ++i)
    std::printf("  |H_%d| = %zu\n", i, plan.big.family(i).size());
  return 0;
}

// deterministic seed points in [lo, hi]^d, rerolling zero points
SeedVector draw_seed(std::mt19937_64& rng, int points, int d, long lo, long hi) {
  RK_CHECK(hi >= lo, "bad seed range");
  unsigned long span = static_cast<unsigned long>(hi - lo + 1);
  SeedVector s;
  for (int i = 0; i < points; ++i) {
    std::vector<Int> p;
    do {
      p.clear();
      for (int x = 0; x < d; ++x) p.emplace_back(static_cast<long>(lo + static_cast<long>(rng() % span)));
    } while (std::all_of(p.begin(), p.end(), [](const Int& v) { return v == 0; }));
    s.push_back(std::move(p));
  }
  return s;
}

int cmd_lift_verify(run_ctx& ctx, const std::string& plan_file, const std::string& seed_str,
                    bool exhaustive, int seeds, long seed_lo, long seed_hi, uint64_t rng_seed,
                    const coloring_opts& copt, const budget_opts& bopt) {
  Json jp = load_json(plan_file);
  ctx.note_input("plan", jp.dump());
  LiftPlan plan = lift_plan_from_json(jp);
  SearchBudget budget = bopt.build(plan.base.d);

  std::vector<SeedVector> ts;
  if (!seed_str.empty()) {
    ts.push_back(parse_points(seed_str, plan.base.d));
  } else {
    std::mt19937_64 rng(rng_seed);
    for (int i = 0; i < seeds; ++i)
      ts.push_back(draw_seed(rng, plan.big_m + 1, plan.base.d, seed_lo, seed_hi));
  }
  if (ts.empty()) throw usage_error("need --seed or --seeds");

  if (exhaustive) {
    uint64_t colorings = 0, successes = 0, cases[3] = {0, 0, 0};
    Json per_seed = Json::array();
    bool all_ok = true;
    for (const SeedVector& t : ts) {
      ExhaustiveLiftReport rep = verify_lift_exhaustive(plan, t, budget);
      bool ok = rep.colorings > 0 && rep.successes == rep.colorings;
      all_ok = all_ok && ok;
      colorings += rep.colorings;
      successes += rep.successes;
      for (int i = 0; i < 3; ++i) cases[i] += rep.case_seen[i];
      Json js{{"seed", seed_to_json(t)},
              {"colorings", std::to_string(rep.colorings)},
              {"successes", std::to_string(rep.successes)}};
      if (!rep.failures.empty()) js["failures"] = rep.failures;
      per_seed.push_back(std::move(js));
      std::printf("seed %s: %llu/%llu colorings extract\n", fmt_seed(t).c_str(),
                  static_cast<unsigned long long>(rep.successes),
                  static_cast<unsigned long long>(rep.colorings));
      for (const std::string& f : rep.failures) std::printf("  failure: %s\n", f.c_str());
    }
    ctx.write_artifact(
        "lift-verify",
        wrap("lift-verify",
             Json{{"plan-hash", fnv1a64_hex(dump_pretty(jp))},
                  {"seeds", per_seed},
                  {"colorings", std::to_string(colorings)},
                  {"successes", std::to_string(successes)},
                  {"cases", Json::array({std::to_string(cases[0]), std::to_string(cases[1]),
                                         std::to_string(cases[2])})}}));
    std::printf("total: %llu/%llu, containment cases seen: %llu / %llu / %llu\n",
                static_cast<unsigned long long>(successes),
                static_cast<unsigned long long>(colorings),
                static_cast<unsigned long long>(cases[0]),
                static_cast<unsigned long long>(cases[1]),
                static_cast<unsigned long long>(cases[2]));
    return all_ok ? 0 : 1;
  }

  // single-coloring mode: color the bounding box of the generated big set
  const SeedVector& t = ts[0];
  ConfigSet big = generate(plan.big, t);
  std::optional<Box> dom = copt.box(plan.base.d);
  if (!dom) {
    Box b;
    for (int x = 0; x < plan.base.d; ++x) {
      Int lo = big.points[0][x], hi = big.points[0][x];
      for (const auto& p : big.points) {
        if (p[x] < lo) lo = p[x];
        if (p[x] > hi) hi = p[x];
      }
      b.range.emplace_back(lo, hi);
    }
    dom = b;
  }
  Coloring col = copt.build(dom);
  ExtractResult er = extract(plan, t, col, budget);
  Json body{{"seed", seed_to_json(t)}, {"ok", er.ok}};
  if (!er.ok) body["reason"] = er.reason;
  if (er.ok) {
    Json jw = Json::array();
    for (int ch : er.vword) jw.push_back(std::to_string(ch));
    body["word"] = jw;
    body["small-seed"] = seed_to_json(er.s);
  }
  ctx.write_artifact("extract", wrap("extract", std::move(body)));
  if (!er.ok) {
    std::printf("extract failed: %s\n", er.reason.c_str());
    return 1;
  }
  std::printf("extract ok: word %s, small seed %s\n", fmt_word(er.vword).c_str(),
              fmt_seed(er.s).c_str());
  return 0;
}

int cmd_ip_fs(run_ctx& ctx, const std::string& gen_str, int d) {
  SeedVector gens = parse_points(gen_str, d);
  FiniteIP ip = fs(gens);
  ctx.write_artifact("ip", ip_to_json(ip));
  std::printf("finite ip set: %zu generators, %zu subset sums\n", ip.generators.size(),
              ip.values.size());
  for (const auto& v : ip.values) std::printf("  %s\n", fmt_point(v).c_str());
  return 0;
}

int cmd_ip_probe(run_ctx& ctx, const std::string& gen_str, int d, const std::string& family_file,
                 const std::string& powers, const std::string& scales, int colors, long max_l,
                 const budget_opts& bopt) {
  FiniteIP y = fs(parse_points(gen_str, d));
  std::vector<PolyMap> family;
  if (!family_file.empty()) {
    Json jf = load_json(family_file);
    ctx.note_input("family", jf.dump());
    for (const Json& m : jf) family.push_back(polymap_from_json(m, 1, y.d));
  }
  if (!powers.empty()) {
    if (y.d != 1) throw usage_error("--powers needs 1-dimensional generators");
    for (const std::string& t : tokens(powers))
      family.push_back(PolyMap::power(1, static_cast<int>(to_long(parse_int(t)))));
  }
  if (!scales.empty()) {
    if (y.d != 1) throw usage_error("--scales needs 1-dimensional generators");
    for (const std::string& t : tokens(scales)) {
      Int k = parse_int(t);
      family.push_back(k == 0 ? PolyMap::zero(1, 1) : PolyMap::linear_form({k}));
    }
  }
  if (family.empty()) throw usage_error("need --family, --powers, or --scales");
  IpProbeResult res = finitistic_ip_vdw_probe(family, y, colors, max_l, bopt.build(1));
  if (!res.l) {
    std::printf("no certified interval up to L=%ld\n", max_l);
    if (res.bad_below)
      std::printf("splitting coloring at L=%ld: %s\n", max_l, res.bad_below->rle().c_str());
    return exit_for_stats(res.stats, "interval ladder");
  }
  Json body{{"y", ip_to_json(y)},
            {"colors", std::to_string(colors)},
            {"l", std::to_string(*res.l)}};
  Json jfam = Json::array();
  for (const PolyMap& f : family) jfam.push_back(polymap_to_json(f));
  body["family"] = std::move(jfam);
  if (res.bad_below) body["bad-below"] = coloring_to_json(*res.bad_below);
  ctx.write_artifact("ip-probe", wrap("ip-probe", std::move(body)));
  std::printf("certified interval: I = [1, %ld]\n", *res.l);
  return 0;
}

int verify_artifact(const Json& j, const SearchBudget& budget);

int cmd_cert_verify(run_ctx& ctx, const std::string& file, const budget_opts& bopt) {
  Json j = load_json(file);
  ctx.note_input("certificate", j.dump());
  return verify_artifact(j, bopt.build(1));
}

int verify_artifact(const Json& j, const SearchBudget& budget) {
  std::string kind = j.value("kind", "");
  if (kind == "mono-witness" || kind == "bad-coloring" || kind == "minimal-n") {
    Certificate cert = certificate_from_json(j);
    std::string why;
    if (verify_certificate(cert, budget, &why)) {
      std::printf("%s: verified\n", kind.c_str());
      return 0;
    }
    std::printf("%s: FAILED (%s)\n", kind.c_str(), why.c_str());
    return 1;
  }
  if (kind == "columns") {
    IntMatrix a = matrix_from_json(j.at("matrix"));
    ColumnsCertificate cert = columns_cert_from_json(j.at("certificate"));
    bool ok = verify_columns_certificate(a, cert);
    std::printf("columns: %s\n", ok ? "verified" : "FAILED");
    return ok ? 0 : 1;
  }
  if (kind == "columns-general") {
    std::vector<IntMatrix> cols;
    for (const Json& m : j.at("columns")) cols.push_back(matrix_from_json(m));
    GenColumnsCertificate cert = gen_columns_cert_from_json(j.at("certificate"));
    bool ok = verify_gen_certificate(cols, cert);
    std::printf("columns-general: %s\n", ok ? "verified" : "FAILED");
    return ok ? 0 : 1;
  }
  if (kind == "reduction") {
    IntMatrix a = matrix_from_json(j.at("matrix"));
    IntMatrix b = matrix_from_json(j.at("b"));
    if (!(a * b).is_zero()) {
      std::printf("reduction: FAILED (A*B != 0)\n");
      return 1;
    }
    auto cert = check_columns(a);
    if (!cert || !(deuber_reduce(a, *cert).b == b)) {
      std::printf("reduction: FAILED (B does not match a fresh reduction)\n");
      return 1;
    }
    std::printf("reduction: verified\n");
    return 0;
  }
  if (kind == "lift-plan") {
    LiftPlan plan = lift_plan_from_json(j);
    LiftPlan fresh = lift(plan.base, plan.r, plan.k, plan.n);
    bool ok = shape_to_json(fresh.big) == shape_to_json(plan.big) &&
              matrix_to_json(fresh.b) == matrix_to_json(plan.b);
    std::printf("lift-plan: %s\n", ok ? "verified" : "FAILED (rebuild differs)");
    return ok ? 0 : 1;
  }
  if (kind == "hj-line") {
    int k = static_cast<int>(to_long(int_from_string(j.at("k").get<std::string>())));
    Coloring col = coloring_from_json(j.at("coloring"));
    Word w;
    for (const Json& ch : j.at("word"))
      w.push_back(static_cast<int>(to_long(int_from_string(ch.get<std::string>()))));
    if (!is_variable_word(w, k)) {
      std::printf("hj-line: FAILED (not a variable word)\n");
      return 1;
    }
    int c0 = col.at(as_point(instantiate(w, 1)));
    for (const Word& inst : line_of(w, k))
      if (col.at(as_point(inst)) != c0) {
        std::printf("hj-line: FAILED (line not monochromatic)\n");
        return 1;
      }
    std::printf("hj-line: verified\n");
    return 0;
  }
  if (kind == "hj-number") {
    int k = static_cast<int>(to_long(int_from_string(j.at("k").get<std::string>())));
    int r = static_cast<int>(to_long(int_from_string(j.at("colors").get<std::string>())));
    int n = static_cast<int>(to_long(int_from_string(j.at("n").get<std::string>())));
    HjResult res = hj_number(k, r, n, budget);
    bool ok = res.n && *res.n == n;
    if (ok && j.contains("bad-below")) {
      Coloring bad = coloring_from_json(j.at("bad-below"));
      ok = !find_mono_line(k, n - 1, bad, budget).has_value();
    }
    std::printf("hj-number: %s\n", ok ? "verified" : "FAILED");
    return ok ? 0 : 1;
  }
  throw usage_error("artifact kind '" + kind + "' is not verifiable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"configuration ramsey toolkit"};
  app.require_subcommand(1);

  std::string out_dir = "out";
  app.add_option("--out", out_dir, "artifact directory")->capture_default_str();

  std::function<int(run_ctx&)> action;
  std::string cmd_name;

  budget_opts bopt;
  coloring_opts copt;

  // shape
  auto* shape = app.add_subcommand("shape", "build and evaluate configuration shapes");
  {
    auto* mpc = shape->add_subcommand("mpc", "classical (m,p,c) structure as a shape");
    static int m = 1, p = 1;
    static std::string c_str = "1", seed_str;
    mpc->add_option("--m", m)->required();
    mpc->add_option("--p", p)->required();
    mpc->add_option("--c", c_str)->required();
    mpc->add_option("--seed", seed_str, "also emit the generated set for this seed");
    mpc->callback([&] {
      cmd_name = "shape mpc";
      action = [&](run_ctx& ctx) { return cmd_shape_mpc(ctx, m, p, c_str, seed_str); };
    });

    auto* gen = shape->add_subcommand("gen", "generate the configuration set for a seed");
    static std::string gen_shape, gen_seed, gen_mask;
    gen->add_option("--shape", gen_shape)->required();
    gen->add_option("--seed", gen_seed)->required();
    gen->add_option("--lines", gen_mask, "line indices, default all");
    gen->callback([&] {
      cmd_name = "shape gen";
      action = [&](run_ctx& ctx) { return cmd_shape_gen(ctx, gen_shape, gen_seed, gen_mask); };
    });

    auto* join = shape->add_subcommand("join", "intersection shape of two shapes");
    static std::string join_a, join_b;
    join->add_option("--a", join_a)->required();
    join->add_option("--b", join_b)->required();
    join->callback([&] {
      cmd_name = "shape join";
      action = [&](run_ctx& ctx) { return cmd_shape_join(ctx, join_a, join_b); };
    });
  }

  // rado
  auto* rado = app.add_subcommand("rado", "columns condition and reductions");
  {
    auto* check = rado->add_subcommand("check", "classical columns condition");
    static std::string mat, matfile;
    check->add_option("--matrix", mat, "rows separated by ';'");
    check->add_option("--file", matfile, "matrix json");
    check->callback([&] {
      cmd_name = "rado check";
      action = [&](run_ctx& ctx) { return cmd_rado_check(ctx, mat, matfile); };
    });

    auto* checkg = rado->add_subcommand("check-gen", "generalized columns condition");
    static std::string cols_file, c_str;
    checkg->add_option("--cols", cols_file, "json array of column matrices")->required();
    checkg->add_option("--c", c_str, "endomorphism matrix, optional");
    checkg->callback([&] {
      cmd_name = "rado check-gen";
      action = [&](run_ctx& ctx) { return cmd_rado_check_gen(ctx, cols_file, c_str); };
    });

    auto* reduce = rado->add_subcommand("reduce", "kernel matrix into a classical structure");
    static std::string rmat, rfile;
    reduce->add_option("--matrix", rmat);
    reduce->add_option("--file", rfile);
    reduce->callback([&] {
      cmd_name = "rado reduce";
      action = [&](run_ctx& ctx) { return cmd_rado_reduce(ctx, rmat, rfile); };
    });
  }

  // search
  auto* search = app.add_subcommand("search", "monochromatic configuration search");
  {
    auto* mono = search->add_subcommand("mono", "find a monochromatic configuration");
    static std::string mono_shape, mono_mask;
    mono->add_option("--shape", mono_shape)->required();
    mono->add_option("--lines", mono_mask, "line indices, default all");
    mono->add_flag("--canonical",
                   "report the scan-order-least witness (always on; flag kept for scripts)");
    copt.attach(mono);
    bopt.attach(mono);
    mono->callback([&] {
      cmd_name = "search mono";
      action = [&](run_ctx& ctx) { return cmd_search_mono(ctx, mono_shape, mono_mask, copt, bopt); };
    });

    auto* number = search->add_subcommand("number", "least N with no splitting coloring");
    static std::string num_shape, num_mask;
    static int num_colors = 2;
    static long num_max = 20;
    number->add_option("--shape", num_shape)->required();
    number->add_option("--lines", num_mask);
    number->add_option("--colors", num_colors);
    number->add_option("--max-n", num_max);
    bopt.attach(number);
    number->callback([&] {
      cmd_name = "search number";
      action = [&](run_ctx& ctx) {
        return cmd_search_number(ctx, num_shape, num_mask, num_colors, num_max, bopt);
      };
    });
  }

  // hj
  auto* hj = app.add_subcommand("hj", "hales-jewett lines and numbers");
  {
    auto* line = hj->add_subcommand("line", "monochromatic combinatorial line");
    static int lk = 2, ln = 2;
    line->add_option("--k", lk, "alphabet size")->required();
    line->add_option("--word-length", ln)->required();
    copt.attach(line, false);
    bopt.attach(line);
    line->callback([&] {
      cmd_name = "hj line";
      action = [&](run_ctx& ctx) { return cmd_hj_line(ctx, lk, ln, copt, bopt); };
    });

    auto* number = hj->add_subcommand("number", "least word length forcing a line");
    static int nk = 2, nr = 2, nmax = 6;
    number->add_option("--k", nk)->required();
    number->add_option("--colors", nr);
    number->add_option("--max-n", nmax);
    bopt.attach(number);
    number->callback([&] {
      cmd_name = "hj number";
      action = [&](run_ctx& ctx) { return cmd_hj_number(ctx, nk, nr, nmax, bopt); };
    });
  }

  // lift
  auto* lift_cmd = app.add_subcommand("lift", "shape lifting and extraction");
  {
    auto* build = lift_cmd->add_subcommand("build", "build the lifted shape");
    static std::string lshape;
    static int lr = 2, lkk = 0, ln_over = 0;
    static size_t lterms = 200000;
    build->add_option("--shape", lshape)->required();
    build->add_option("--colors", lr);
    build->add_option("--k", lkk, "lines already monochromatic");
    build->add_option("--word-length", ln_over, "override the hales-jewett length");
    build->add_option("--max-terms", lterms);
    build->callback([&] {
      cmd_name = "lift build";
      action = [&](run_ctx& ctx) {
        std::optional<int> n;
        if (ln_over > 0) n = ln_over;
        return cmd_lift_build(ctx, lshape, lr, lkk, n, lterms);
      };
    });

    auto* verify = lift_cmd->add_subcommand("verify", "extract from colorings of the big set");
    static std::string vplan, vseed;
    static bool vex = false;
    static int vseeds = 0;
    static long vlo = 1, vhi = 5;
    static uint64_t vrng = 1;
    verify->add_option("--plan", vplan)->required();
    verify->add_option("--seed", vseed, "big-shape seed points");
    verify->add_flag("--exhaustive", vex, "sweep every coloring of the generated set");
    verify->add_option("--seeds", vseeds, "number of random seeds to draw");
    verify->add_option("--seed-lo", vlo);
    verify->add_option("--seed-hi", vhi);
    verify->add_option("--rng-seed", vrng);
    copt.attach(verify);
    bopt.attach(verify);
    verify->callback([&] {
      cmd_name = "lift verify";
      action = [&](run_ctx& ctx) {
        return cmd_lift_verify(ctx, vplan, vseed, vex, vseeds, vlo, vhi, vrng, copt, bopt);
      };
    });
  }

  // ip
  auto* ip = app.add_subcommand("ip", "finite ip sets");
  {
    auto* fs_cmd = ip->add_subcommand("fs", "all subset sums of a generator list");
    static std::string fgens;
    static int fd = 1;
    fs_cmd->add_option("--generators", fgens)->required();
    fs_cmd->add_option("--dim", fd);
    fs_cmd->callback([&] {
      cmd_name = "ip fs";
      action = [&](run_ctx& ctx) { return cmd_ip_fs(ctx, fgens, fd); };
    });

    auto* probe = ip->add_subcommand("probe", "certified interval for ip shifts");
    static std::string pgens, pfam, ppow, pscale;
    static int pd = 1, pcolors = 2;
    static long pmax = 12;
    probe->add_option("--y", pgens, "ip generators")->required();
    probe->add_option("--dim", pd);
    probe->add_option("--family", pfam, "json array of maps");
    probe->add_option("--powers", ppow, "family x -> x^e for each listed e");
    probe->add_option("--scales", pscale, "family x -> k*x for each listed k");
    probe->add_option("--colors", pcolors);
    probe->add_option("--max-l", pmax);
    bopt.attach(probe);
    probe->callback([&] {
      cmd_name = "ip probe";
      action = [&](run_ctx& ctx) {
        return cmd_ip_probe(ctx, pgens, pd, pfam, ppow, pscale, pcolors, pmax, bopt);
      };
    });
  }

  // cert
  auto* cert = app.add_subcommand("cert", "artifact re-verification");
  {
    auto* verify = cert->add_subcommand("verify", "replay a stored artifact");
    static std::string cfile;
    verify->add_option("--file", cfile)->required();
    bopt.attach(verify);
    verify->callback([&] {
      cmd_name = "cert verify";
      action = [&](run_ctx& ctx) { return cmd_cert_verify(ctx, cfile, bopt); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!action) {
    std::fprintf(stderr, "error: missing subcommand\n");
    return 2;
  }

  run_ctx ctx;
  ctx.out_dir = out_dir;
  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  std::string err;
  try {
    code = action(ctx);
  } catch (const usage_error& e) {
    err = e.what();
    code = 2;
  } catch (const RamseyError& e) {
    err = e.what();
    code = err.rfind("search budget exhausted", 0) == 0 ? 3 : 1;
  } catch (const std::exception& e) {
    err = e.what();
    code = 1;
  }
  if (!err.empty()) std::fprintf(stderr, "error: %s\n", err.c_str());

  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Json record;
  record["command"] = cmd_name;
  Json jargv = Json::array();
  for (int i = 1; i < argc; ++i) jargv.push_back(argv[i]);
  record["argv"] = std::move(jargv);
  record["inputs"] = ctx.inputs;
  record["artifacts"] = ctx.artifacts;
  record["exit"] = std::to_string(code);
  char wbuf[32];
  std::snprintf(wbuf, sizeof wbuf, "%.3f", wall);
  record["wall-seconds"] = wbuf;
  record["engine-version"] = engine_version;
  record["timestamp"] = utc_now();
  std::error_code fs_err;
  stdfs::create_directories(ctx.out_dir, fs_err);
  if (!fs_err) {
    std::ofstream ledger(ctx.out_dir + "/ledger.ndjson", std::ios::app);
    if (ledger) ledger << record.dump() << "\n";
  }
  return code;
}
