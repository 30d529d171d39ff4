#include "ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <set>

#include "ramsey/version.hpp"

namespace ramsey {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<int> checked_mask(const Shape& shape, std::vector<int> mask) {
  RK_CHECK(!mask.empty(), "line mask is empty");
  std::sort(mask.begin(), mask.end());
  mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
  RK_CHECK(mask.front() >= 0 && mask.back() <= shape.m, "line mask index out of range");
  size_t points = 0;
  for (int k : mask) points += k == 0 ? 1 : shape.family(k).size();
  RK_CHECK(points > 0, "line mask selects no points");
  return mask;
}

}  // namespace

std::vector<int> all_lines(const Shape& shape) {
  std::vector<int> mask(shape.m + 1);
  for (int k = 0; k <= shape.m; ++k) mask[k] = k;
  return mask;
}

// ---------------------------------------------------------------------------
// find_mono

namespace {

struct MonoScan {
  const Shape& shape;
  const Coloring& coloring;
  std::vector<int> mask;
  std::set<int> mask_set;
  const SearchBudget& budget;
  SearchStats& stats;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  bool aborted = false;

  int d, nseeds, nvars;  // nseeds = K+1 relevant seeds
  std::vector<std::pair<Int, Int>> bound;  // per flattened coordinate
  long shell = 1;
  std::vector<Int> vals;
  std::optional<MonoWitness> found;

  MonoScan(const Shape& s, const std::vector<int>& m, const Coloring& col,
           const SearchBudget& b, SearchStats& st)
      : shape(s), coloring(col), mask(m), mask_set(m.begin(), m.end()), budget(b), stats(st) {
    d = shape.d;
    nseeds = mask.back() + 1;
    nvars = nseeds * d;
    vals.assign(nvars, Int(0));
    Int fallback = 1;
    for (const auto& [lo, hi] : coloring.domain.range) {
      Int m1 = abs(lo), m2 = abs(hi);
      if (m1 > fallback) fallback = m1;
      if (m2 > fallback) fallback = m2;
    }
    for (int v = 0; v < nvars; ++v) {
      if (budget.seed_box) {
        RK_CHECK(budget.seed_box->dim() == d, "seed box dimension mismatch");
        bound.push_back(budget.seed_box->range[v % d]);
      } else {
        bound.emplace_back(-fallback, fallback);
      }
    }
  }

  long max_shell() const {
    Int r = 1;
    for (const auto& [lo, hi] : bound) {
      Int m1 = abs(lo), m2 = abs(hi);
      if (m1 > r) r = m1;
      if (m2 > r) r = m2;
    }
    return to_long(r);
  }

  bool tick() {
    ++stats.nodes;
    if (stats.nodes >= budget.max_nodes) {
      stats.node_limit_hit = true;
      aborted = true;
      return false;
    }
    if ((stats.nodes & 4095) == 0 && seconds_since(t0) > budget.max_seconds) {
      stats.time_limit_hit = true;
      aborted = true;
      return false;
    }
    return true;
  }

  // checks line k against the running witness color; -1 means not set yet
  bool line_ok(int k, int& color) const {
    std::vector<std::vector<Int>> pts;
    std::vector<Int> sk(vals.begin() + k * d, vals.begin() + (k + 1) * d);
    std::vector<Int> csk = shape.c.apply(sk);
    if (k == 0) {
      pts.push_back(csk);
    } else {
      std::vector<Int> prefix(vals.begin(), vals.begin() + k * d);
      for (const PolyMap& f : shape.family(k)) {
        std::vector<Int> p = f.eval(prefix);
        for (int i = 0; i < d; ++i) p[i] += csk[i];
        pts.push_back(std::move(p));
      }
    }
    for (const auto& p : pts) {
      if (!coloring.domain.contains(p)) return false;
      int c = coloring.at(p);
      if (color == -1)
        color = c;
      else if (c != color)
        return false;
    }
    return true;
  }

  bool dfs(int var, int color, bool shell_hit) {
    if (var == nvars) {
      if (!shell_hit) return false;  // interior of the shell, already scanned
      MonoWitness w;
      for (int k = 0; k < nseeds; ++k)
        w.seed.emplace_back(vals.begin() + k * d, vals.begin() + (k + 1) * d);
      for (int k = nseeds; k <= shape.m; ++k) w.seed.emplace_back(std::vector<Int>(d, Int(1)));
      w.color = color;
      found = w;
      return true;
    }
    Int lo = bound[var].first, hi = bound[var].second;
    if (lo < -shell) lo = -shell;
    if (hi > shell) hi = shell;
    for (Int x = lo; x <= hi; ++x) {
      bool hit = shell_hit || abs(x) == shell;
      if (var == nvars - 1 && !hit) continue;
      if (!tick()) return false;
      vals[var] = x;
      int col = color;
      if ((var + 1) % d == 0) {
        int k = (var + 1) / d - 1;
        bool zero = true;
        for (int i = 0; i < d; ++i)
          if (vals[k * d + i] != 0) zero = false;
        if (zero) continue;  // seeds must be nonzero points
        if (mask_set.count(k) && !line_ok(k, col)) continue;
      }
      if (dfs(var + 1, col, hit)) return true;
      if (aborted) return false;
    }
    return false;
  }

  std::optional<MonoWitness> run() {
    long rmax = max_shell();
    for (shell = 1; shell <= rmax && !aborted; ++shell)
      if (dfs(0, -1, false)) break;
    stats.seconds = seconds_since(t0);
    return found;
  }
};

}  // namespace

std::optional<MonoWitness> find_mono(const Shape& shape, const std::vector<int>& line_mask,
                                     const Coloring& coloring, const SearchBudget& budget,
                                     SearchStats* stats) {
  shape.validate();
  coloring.validate();
  RK_CHECK(coloring.domain.dim() == shape.d, "coloring dimension mismatch");
  std::vector<int> mask = checked_mask(shape, line_mask);
  SearchStats local;
  MonoScan scan(shape, mask, coloring, budget, stats ? *stats : local);
  return scan.run();
}

// ---------------------------------------------------------------------------
// enumerate_configs

ConfigEnumeration enumerate_configs(const Shape& shape, const std::vector<int>& line_mask, long n,
                                    const SearchBudget& budget) {
  shape.validate();
  RK_CHECK(shape.d == 1, "config enumeration needs d = 1");
  RK_CHECK(n >= 1, "interval bound must be >= 1");
  std::vector<int> mask = checked_mask(shape, line_mask);

  const Int cval = shape.c.at(0, 0);
  const int nvars = shape.m + 1;

  // every masked term as a linear form over the seed coordinates
  std::vector<std::vector<Int>> forms;
  for (int k : mask) {
    if (k == 0) {
      std::vector<Int> f(nvars, Int(0));
      f[0] = cval;
      forms.push_back(std::move(f));
      continue;
    }
    for (const PolyMap& fm : shape.family(k)) {
      RK_CHECK(fm.is_homomorphism(), "config enumeration needs homomorphism families");
      auto mat = fm.matrix();
      RK_CHECK(mat.has_value(), "family member has no matrix form");
      std::vector<Int> f(nvars, Int(0));
      for (int j = 0; j < k; ++j) f[j] = mat->at(0, j);
      f[k] = cval;
      forms.push_back(std::move(f));
    }
  }

  std::vector<bool> relevant(nvars, false);
  for (const auto& f : forms)
    for (int v = 0; v < nvars; ++v)
      if (f[v] != 0) relevant[v] = true;

  // greedy triangular elimination order over the relevant coordinates
  std::vector<bool> placed(nvars, false);
  for (int v = 0; v < nvars; ++v)
    if (!relevant[v]) placed[v] = true;
  std::vector<int> order;
  auto pins = [&](const std::vector<Int>& f, int v) {
    if (f[v] == 0) return false;
    for (int u = 0; u < nvars; ++u)
      if (u != v && !placed[u] && f[u] != 0) return false;
    return true;
  };
  while (true) {
    int next = -1;
    for (int v = 0; v < nvars && next < 0; ++v) {
      if (placed[v]) continue;
      for (const auto& f : forms)
        if (pins(f, v)) {
          next = v;
          break;
        }
    }
    if (next < 0) break;
    order.push_back(next);
    placed[next] = true;
  }
  for (int v = 0; v < nvars; ++v)
    if (!placed[v]) {
      order.push_back(v);
      placed[v] = true;
    }

  // forms that fix the coordinate at each depth, given all earlier ones
  std::vector<bool> avail(nvars, false);
  for (int v = 0; v < nvars; ++v)
    if (!relevant[v]) avail[v] = true;
  std::vector<std::vector<int>> pin_forms(order.size());
  bool complete = true;
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    avail[v] = true;
    for (size_t fi = 0; fi < forms.size(); ++fi) {
      const auto& f = forms[fi];
      if (f[v] == 0) continue;
      bool ok = true;
      for (int u = 0; u < nvars && ok; ++u)
        if (f[u] != 0 && !avail[u]) ok = false;
      if (ok) pin_forms[i].push_back(static_cast<int>(fi));
    }
    if (pin_forms[i].empty()) complete = false;
  }

  Int fb_lo = -Int(n), fb_hi = Int(n);
  if (budget.seed_box) {
    RK_CHECK(budget.seed_box->dim() == 1, "seed box dimension mismatch");
    fb_lo = budget.seed_box->range[0].first;
    fb_hi = budget.seed_box->range[0].second;
  }

  ConfigEnumeration out;
  out.complete = complete;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Int> vals(nvars, Int(1));
  std::map<std::vector<long>, SeedVector> seen;

  auto tick = [&] {
    ++out.stats.nodes;
    if (out.stats.nodes >= budget.max_nodes)
      throw RamseyError("search budget exhausted: node limit during config enumeration");
    if ((out.stats.nodes & 4095) == 0 && seconds_since(t0) > budget.max_seconds)
      throw RamseyError("search budget exhausted: time limit during config enumeration");
  };

  auto dfs = [&](auto&& self, size_t depth) -> void {
    if (depth == order.size()) {
      std::vector<long> pts;
      for (const auto& f : forms) {
        Int val = 0;
        for (int u = 0; u < nvars; ++u)
          if (f[u] != 0) val += f[u] * vals[u];
        if (val < 1 || val > n) return;
        pts.push_back(to_long(val));
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      SeedVector seed(nvars);
      for (int u = 0; u < nvars; ++u) seed[u] = {vals[u]};
      seen.try_emplace(std::move(pts), std::move(seed));
      return;
    }
    int v = order[depth];
    Int lo = fb_lo, hi = fb_hi;
    for (int fi : pin_forms[depth]) {
      const auto& f = forms[fi];
      Int rest = 0;
      for (int u = 0; u < nvars; ++u)
        if (u != v && f[u] != 0) rest += f[u] * vals[u];
      Int a = f[v], l = Int(1) - rest, h = Int(n) - rest;
      Int pl = a > 0 ? ceil_div(l, a) : ceil_div(h, a);
      Int ph = a > 0 ? floor_div(h, a) : floor_div(l, a);
      if (pl > lo) lo = pl;
      if (ph < hi) hi = ph;
    }
    for (Int x = lo; x <= hi; ++x) {
      if (x == 0) continue;
      tick();
      vals[v] = x;
      self(self, depth + 1);
    }
    vals[v] = 1;
  };
  dfs(dfs, 0);

  for (auto& [pts, seed] : seen) out.configs.push_back({pts, std::move(seed)});
  out.stats.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------
// find_bad_coloring

namespace {

struct BadSearch {
  size_t universe;
  int r;
  std::vector<std::vector<int>> cfgs;
  std::vector<std::vector<int>> point_cfgs;

  const SearchBudget* budget = nullptr;
  std::atomic<uint64_t>* nodes = nullptr;
  std::chrono::steady_clock::time_point t0;

  std::vector<uint8_t> col;
  std::vector<int> cnt;
  std::vector<uint8_t> mixed;
  std::vector<uint8_t> mono;
  std::vector<uint32_t> forbidden;

  void init_state() {
    col.assign(universe, 255);
    cnt.assign(cfgs.size(), 0);
    mixed.assign(cfgs.size(), 0);
    mono.assign(cfgs.size(), 0);
    forbidden.assign(universe, 0);
  }

  void tick() {
    uint64_t v = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    if (v >= budget->max_nodes)
      throw RamseyError("search budget exhausted: node limit during coloring decision");
    if ((v & 4095) == 0 && seconds_since(t0) > budget->max_seconds)
      throw RamseyError("search budget exhausted: time limit during coloring decision");
  }

  struct Undo {
    std::vector<int> became_mixed;
    std::vector<std::pair<int, uint32_t>> forb;
  };

  // applies the assignment and its propagations; false on conflict (state
  // still applied, caller unassigns either way)
  bool assign(int p, int x, Undo& undo) {
    col[p] = static_cast<uint8_t>(x);
    bool ok = true;
    const uint32_t all = r >= 32 ? ~0u : (1u << r) - 1;
    for (int ci : point_cfgs[p]) {
      const auto& cf = cfgs[ci];
      if (cnt[ci] == 0) mono[ci] = static_cast<uint8_t>(x);
      else if (!mixed[ci] && mono[ci] != x) {
        mixed[ci] = 1;
        undo.became_mixed.push_back(ci);
      }
      ++cnt[ci];
      if (mixed[ci]) continue;
      size_t sz = cf.size();
      if (cnt[ci] == static_cast<int>(sz)) {
        ok = false;  // config fully colored in one color
        continue;
      }
      if (cnt[ci] == static_cast<int>(sz) - 1) {
        int q = -1;
        for (int pt : cf)
          if (col[pt] == 255) {
            q = pt;
            break;
          }
        uint32_t bit = 1u << mono[ci];
        if (!(forbidden[q] & bit)) {
          undo.forb.emplace_back(q, forbidden[q]);
          forbidden[q] |= bit;
          if ((forbidden[q] & all) == all) ok = false;  // every color closes a config
        }
      }
    }
    return ok;
  }

  void unassign(int p, const Undo& undo) {
    for (auto it = undo.forb.rbegin(); it != undo.forb.rend(); ++it) forbidden[it->first] = it->second;
    for (int ci : undo.became_mixed) mixed[ci] = 0;
    for (int ci : point_cfgs[p]) --cnt[ci];
    col[p] = 255;
  }

  bool dfs(size_t p, int used, std::vector<uint8_t>& out) {
    if (p == universe) {
      out = col;
      return true;
    }
    int top = std::min(used, r - 1);
    for (int x = 0; x <= top; ++x) {
      if (forbidden[p] & (1u << x)) continue;
      tick();
      Undo undo;
      bool ok = assign(static_cast<int>(p), x, undo);
      if (ok && dfs(p + 1, std::max(used, x + 1), out)) return true;
      unassign(static_cast<int>(p), undo);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<uint8_t>> find_bad_coloring(size_t universe,
                                                      const std::vector<std::vector<int>>& configs,
                                                      int r, const SearchBudget& budget,
                                                      SearchStats* stats) {
  RK_CHECK(r >= 1 && r <= 31, "color count out of range");
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  auto t0 = std::chrono::steady_clock::now();

  std::vector<std::vector<int>> cfgs;
  for (auto cf : configs) {
    std::sort(cf.begin(), cf.end());
    cf.erase(std::unique(cf.begin(), cf.end()), cf.end());
    RK_CHECK(!cf.empty() && cf.front() >= 0 && cf.back() < static_cast<int>(universe),
             "config point out of universe");
    if (cf.size() <= 1) {  // a single point is monochromatic under any coloring
      st.seconds = seconds_since(t0);
      return std::nullopt;
    }
    cfgs.push_back(std::move(cf));
  }
  // keep only subset-minimal configs: a coloring splitting every minimal
  // config splits every superset too
  std::sort(cfgs.begin(), cfgs.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<int>> minimal;
  for (const auto& cf : cfgs) {
    bool dominated = false;
    for (const auto& m : minimal) {
      if (std::includes(cf.begin(), cf.end(), m.begin(), m.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(cf);
  }

  BadSearch base;
  base.universe = universe;
  base.r = r;
  base.cfgs = std::move(minimal);
  base.point_cfgs.assign(universe, {});
  for (size_t ci = 0; ci < base.cfgs.size(); ++ci)
    for (int p : base.cfgs[ci]) base.point_cfgs[p].push_back(static_cast<int>(ci));
  base.budget = &budget;
  base.t0 = t0;

  std::atomic<uint64_t> nodes{st.nodes};
  base.nodes = &nodes;
  base.init_state();

  std::optional<std::vector<uint8_t>> result;
  int threads = std::max(1, budget.threads);
  if (threads == 1 || universe < 4) {
    std::vector<uint8_t> out;
    if (base.dfs(0, 0, out)) result = std::move(out);
  } else {
    // split the canonical decision tree at a fixed depth and scan the
    // subtrees concurrently; the lexicographically first hit wins
    size_t depth = 1;
    while (depth < universe - 1 && (size_t(1) << depth) < static_cast<size_t>(threads) * 4)
      ++depth;
    struct Prefix {
      std::vector<int> colors;
      int used;
    };
    std::vector<Prefix> prefixes;
    std::vector<int> cur;
    auto collect = [&](auto&& self, size_t p, int used) -> void {
      if (p == depth) {
        prefixes.push_back({cur, used});
        return;
      }
      int top = std::min(used, r - 1);
      for (int x = 0; x <= top; ++x) {
        if (base.forbidden[p] & (1u << x)) continue;
        BadSearch::Undo undo;
        bool ok = base.assign(static_cast<int>(p), x, undo);
        if (ok) {
          cur.push_back(x);
          self(self, p + 1, std::max(used, x + 1));
          cur.pop_back();
        }
        base.unassign(static_cast<int>(p), undo);
      }
    };
    collect(collect, 0, 0);

    std::vector<std::future<std::optional<std::vector<uint8_t>>>> futs;
    for (const Prefix& pre : prefixes) {
      futs.push_back(std::async(std::launch::async, [&base, pre, depth] {
        BadSearch task = base;  // own state, shared atomic node counter
        task.init_state();
        std::optional<std::vector<uint8_t>> r2;
        std::vector<BadSearch::Undo> undos(depth);
        bool alive = true;
        for (size_t p = 0; p < depth && alive; ++p)
          alive = task.assign(static_cast<int>(p), pre.colors[p], undos[p]);
        if (alive) {
          std::vector<uint8_t> out;
          if (task.dfs(depth, pre.used, out)) r2 = std::move(out);
        }
        return r2;
      }));
    }
    std::exception_ptr err;
    for (auto& f : futs) {
      if (result) {
        f.wait();
        continue;
      }
      try {
        auto r2 = f.get();
        if (r2 && !err) result = std::move(r2);
      } catch (...) {
        if (!err) err = std::current_exception();
      }
    }
    if (!result && err) std::rethrow_exception(err);
  }

  st.nodes = nodes.load();
  st.seconds = seconds_since(t0);
  return result;
}

// ---------------------------------------------------------------------------
// min_partition_number

PartitionResult min_partition_number(const Shape& shape, const std::vector<int>& line_mask, int r,
                                     long max_n, const SearchBudget& budget) {
  RK_CHECK(max_n >= 1, "max_n must be >= 1");
  PartitionResult res;
  res.exhaustive = true;
  std::optional<Coloring> last_bad;
  for (long n = 1; n <= max_n; ++n) {
    ConfigEnumeration en = enumerate_configs(shape, line_mask, n, budget);
    res.stats.nodes += en.stats.nodes;
    res.stats.seconds += en.stats.seconds;
    if (!en.complete) res.exhaustive = false;
    std::vector<std::vector<int>> cfgs;
    for (const auto& ec : en.configs) {
      std::vector<int> c;
      for (long p : ec.points) c.push_back(static_cast<int>(p - 1));
      cfgs.push_back(std::move(c));
    }
    SearchStats st;
    auto bad = find_bad_coloring(static_cast<size_t>(n), cfgs, r, budget, &st);
    res.stats.nodes += st.nodes;
    res.stats.seconds += st.seconds;
    if (bad) {
      last_bad = Coloring::from_values(Box::interval(1, Int(n)), r, *bad);
      continue;
    }
    res.n = n;
    res.bad_below = last_bad;
    return res;
  }
  res.bad_below = last_bad;
  return res;
}

// ---------------------------------------------------------------------------
// certificates

Certificate make_mono_certificate(const Shape& shape, const std::vector<int>& line_mask,
                                  const Coloring& coloring, const MonoWitness& witness) {
  Certificate c;
  c.kind = "mono-witness";
  c.engine_version = engine_version;
  c.shape = shape;
  c.line_mask = checked_mask(shape, line_mask);
  c.colors = coloring.r;
  c.proof_mode = "exhaustive";
  c.seed = witness.seed;
  c.witness_color = witness.color;
  c.coloring = coloring;
  return c;
}

Certificate make_bad_certificate(const Shape& shape, const std::vector<int>& line_mask,
                                 const Coloring& coloring, bool exhaustive) {
  Certificate c;
  c.kind = "bad-coloring";
  c.engine_version = engine_version;
  c.shape = shape;
  c.line_mask = checked_mask(shape, line_mask);
  c.colors = coloring.r;
  c.proof_mode = exhaustive ? "exhaustive" : "assumed";
  c.coloring = coloring;
  return c;
}

Certificate make_minimal_n_certificate(const Shape& shape, const std::vector<int>& line_mask,
                                       int colors, const PartitionResult& result) {
  RK_CHECK(result.n.has_value(), "no minimal n to certify");
  Certificate c;
  c.kind = "minimal-n";
  c.engine_version = engine_version;
  c.shape = shape;
  c.line_mask = checked_mask(shape, line_mask);
  c.colors = colors;
  c.proof_mode = result.exhaustive ? "exhaustive" : "assumed";
  c.minimal_n = result.n;
  c.coloring_below = result.bad_below;
  return c;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// true when some enumerated config is single-colored under col
bool has_mono_config(const ConfigEnumeration& en, const Coloring& col) {
  for (const auto& ec : en.configs) {
    int c0 = -1;
    bool mono = true;
    for (long p : ec.points) {
      int c = col.at({Int(p)});
      if (c0 == -1) c0 = c;
      else if (c != c0) {
        mono = false;
        break;
      }
    }
    if (mono) return true;
  }
  return false;
}

}  // namespace

bool verify_certificate(const Certificate& cert, const SearchBudget& budget, std::string* why) {
  try {
    cert.shape.validate();
    std::vector<int> mask = checked_mask(cert.shape, cert.line_mask);
    RK_CHECK(cert.colors >= 1, "color count out of range");

    if (cert.kind == "mono-witness") {
      if (!cert.seed || !cert.witness_color || !cert.coloring)
        return fail(why, "mono-witness needs seed, witness color and coloring");
      cert.coloring->validate();
      if (cert.coloring->r != cert.colors) return fail(why, "color count mismatch");
      ConfigSet cs = generate_masked(cert.shape, *cert.seed, mask);
      for (const auto& p : cs.points) {
        if (!cert.coloring->domain.contains(p)) return fail(why, "generated point leaves domain");
        if (cert.coloring->at(p) != *cert.witness_color)
          return fail(why, "generated point has wrong color");
      }
      return true;
    }

    if (cert.kind == "bad-coloring") {
      if (!cert.coloring) return fail(why, "bad-coloring needs the coloring");
      cert.coloring->validate();
      if (cert.coloring->r != cert.colors) return fail(why, "color count mismatch");
      const Box& dom = cert.coloring->domain;
      if (dom.dim() != 1 || dom.range[0].first != 1)
        return fail(why, "bad-coloring replay needs a [1, n] domain");
      long n = to_long(dom.range[0].second);
      ConfigEnumeration en = enumerate_configs(cert.shape, mask, n, budget);
      if (cert.proof_mode == "exhaustive" && !en.complete)
        return fail(why, "enumeration is not provably complete for this shape");
      if (has_mono_config(en, *cert.coloring))
        return fail(why, "coloring admits a monochromatic configuration");
      return true;
    }

    if (cert.kind == "minimal-n") {
      if (!cert.minimal_n) return fail(why, "minimal-n needs the value of n");
      long n = *cert.minimal_n;
      RK_CHECK(n >= 1, "minimal n must be >= 1");
      ConfigEnumeration en = enumerate_configs(cert.shape, mask, n, budget);
      if (cert.proof_mode == "exhaustive" && !en.complete)
        return fail(why, "enumeration is not provably complete for this shape");
      std::vector<std::vector<int>> cfgs;
      for (const auto& ec : en.configs) {
        std::vector<int> c;
        for (long p : ec.points) c.push_back(static_cast<int>(p - 1));
        cfgs.push_back(std::move(c));
      }
      if (find_bad_coloring(static_cast<size_t>(n), cfgs, cert.colors, budget))
        return fail(why, "a coloring of [1, n] avoids all configurations");
      if (n > 1) {
        if (!cert.coloring_below) return fail(why, "minimal-n with n > 1 needs the coloring below");
        cert.coloring_below->validate();
        const Box& dom = cert.coloring_below->domain;
        if (cert.coloring_below->r != cert.colors) return fail(why, "color count mismatch");
        if (dom.dim() != 1 || dom.range[0].first != 1 || dom.range[0].second != n - 1)
          return fail(why, "coloring below must live on [1, n-1]");
        ConfigEnumeration below = enumerate_configs(cert.shape, mask, n - 1, budget);
        if (cert.proof_mode == "exhaustive" && !below.complete)
          return fail(why, "enumeration is not provably complete for this shape");
        if (has_mono_config(below, *cert.coloring_below))
          return fail(why, "coloring below admits a monochromatic configuration");
      }
      return true;
    }

    return fail(why, "unknown certificate kind: " + cert.kind);
  } catch (const RamseyError& e) {
    return fail(why, e.what());
  }
}

}  // namespace ramsey
