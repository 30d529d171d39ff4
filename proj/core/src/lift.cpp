#include "ramsey/lift.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace ramsey {

namespace {

void add_block(IntMatrix& dst, const IntMatrix& src, int col_off) {
  RK_CHECK(src.rows == dst.rows && col_off + src.cols <= dst.cols, "block placement out of range");
  for (int i = 0; i < src.rows; ++i)
    for (int j = 0; j < src.cols; ++j) dst.at(i, col_off + j) += src.at(i, j);
}

IntMatrix vstack(const std::vector<IntMatrix>& mats) {
  RK_CHECK(!mats.empty(), "empty stack");
  int cols = mats[0].cols, rows = 0;
  for (const auto& m : mats) {
    RK_CHECK(m.cols == cols, "stack width mismatch");
    rows += m.rows;
  }
  IntMatrix out(rows, cols);
  int off = 0;
  for (const auto& m : mats) {
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < cols; ++j) out.at(off + i, j) = m.at(i, j);
    off += m.rows;
  }
  return out;
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > ~0ULL / b) return ~0ULL;
  return a * b;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  return a > ~0ULL - b ? ~0ULL : a + b;
}

unsigned long long sat_pow(unsigned long long base, int exp) {
  unsigned long long v = 1;
  for (int i = 0; i < exp; ++i) v = sat_mul(v, base);
  return v;
}

struct LiftCtx {
  int d, m, k, mk, n, N, M;
  IntMatrix b, c_small, c_big;
  std::vector<IntMatrix> amats;  // concordance maps of the alphabet family
};

// seed entry u_j as a homomorphism G^arity -> G^d; the variable word enters
// through wext (0 = star). Stars form A, letters form B.
IntMatrix u_mat(const LiftCtx& cx, int j, const std::vector<int>& wext, int arity) {
  IntMatrix u(cx.d, arity * cx.d);
  if (j > cx.mk) {
    add_block(u, cx.b, (cx.M - cx.m + j) * cx.d);
  } else if (j == cx.mk) {
    for (int i = 0; i < cx.n; ++i)
      if (wext[i] != 0) add_block(u, cx.amats[wext[i] - 1], i * cx.mk * cx.d);
    add_block(u, cx.b, cx.N * cx.d);
  } else {
    for (int i = 0; i < cx.n; ++i)
      if (wext[i] == 0) add_block(u, cx.b, (i * cx.mk + j) * cx.d);
  }
  return u;
}

IntMatrix compose_with_u(const LiftCtx& cx, const PolyMap& f, int j,
                         const std::vector<int>& wext, int arity) {
  auto fm = f.matrix();
  RK_CHECK(fm.has_value(), "family member has no matrix form");
  std::vector<IntMatrix> args;
  for (int i = 0; i < j; ++i) args.push_back(u_mat(cx, i, wext, arity));
  return *fm * vstack(args);
}

std::vector<Int> flat_args(const SeedVector& t, int from, int count) {
  std::vector<Int> v;
  for (int i = from; i < from + count; ++i) v.insert(v.end(), t[i].begin(), t[i].end());
  return v;
}

std::vector<Int> as_word_point(const Word& w) {
  std::vector<Int> p;
  p.reserve(w.size());
  for (int x : w) p.emplace_back(x);
  return p;
}

int line_color(const std::vector<std::vector<Int>>& pts, const Coloring& col) {
  if (pts.empty()) return -1;
  int c = -1;
  for (const auto& p : pts) {
    int x = col.at(p);
    if (c == -1) c = x;
    else if (x != c) return -2;
  }
  return c;
}

bool subset_of(const std::vector<std::vector<Int>>& small,
               const std::vector<std::vector<Int>>& big) {
  std::set<std::vector<Int>> s(big.begin(), big.end());
  for (const auto& p : small)
    if (!s.count(p)) return false;
  return true;
}

}  // namespace

LiftPlan lift(const Shape& shape, int r, int k, std::optional<int> n_override, size_t max_terms) {
  shape.validate();
  RK_CHECK(r >= 1, "colors must be >= 1");
  RK_CHECK(k >= 0 && k <= shape.m - 1, "k out of range");
  LiftPlan plan;
  plan.base = normalize_for_lift(shape);
  plan.r = r;
  plan.k = k;
  for (const auto& fam : plan.base.families)
    for (const auto& f : fam) RK_CHECK(f.is_homomorphism(), "lift needs homomorphism families");
  auto conc = concordance_witness(plan.base);
  RK_CHECK(conc.has_value(), "no concordance witness for this shape");
  plan.b = conc->b;
  plan.a = conc->a;

  const int m = plan.base.m, d = plan.base.d, mk = m - k;
  const auto& alphabet = plan.base.family(mk);
  const int K = static_cast<int>(alphabet.size());

  if (n_override) {
    RK_CHECK(*n_override >= 1, "word length override must be >= 1");
    plan.n = *n_override;
  } else if (K == 1 || r == 1) {
    plan.n = 1;
  } else if (K == 2 && r == 2) {
    SearchBudget hb;
    HjResult hj = hj_number(2, 2, 6, hb);
    RK_CHECK(hj.n.has_value(), "hales-jewett search failed");
    plan.n = *hj.n;
  } else {
    throw RamseyError("no known hales-jewett length for alphabet " + std::to_string(K) + " and " +
                      std::to_string(r) + " colors; pass the word length explicitly");
  }
  const int n = plan.n;
  const int N = n * mk, M = N + k;
  plan.big_n = N;
  plan.big_m = M;

  // size estimate before materializing anything
  unsigned long long est = sat_pow(K, n);
  for (int j = mk + 1; j <= m; ++j)
    est = sat_add(est, sat_mul(plan.base.family(j).size(), sat_pow(K + 1, n)));
  for (int j = 0; j < mk; ++j)
    for (int a = 0; a < n; ++a)
      est = sat_add(est, sat_mul(j == 0 ? 1 : plan.base.family(j).size(), sat_pow(2, a)));
  if (est > max_terms)
    throw RamseyError("lifted families would hold about " + std::to_string(est) +
                      " maps, over the budget of " + std::to_string(max_terms));

  LiftCtx cx;
  cx.d = d;
  cx.m = m;
  cx.k = k;
  cx.mk = mk;
  cx.n = n;
  cx.N = N;
  cx.M = M;
  cx.b = plan.b;
  cx.c_small = plan.base.c;
  cx.c_big = plan.base.c * plan.b;
  for (const PolyMap& f : plan.a[mk - 1]) {
    auto am = f.matrix();
    RK_CHECK(am.has_value(), "concordance map has no matrix form");
    cx.amats.push_back(*am);
  }
  std::vector<IntMatrix> alpha_b;  // f o bold(b) for each alphabet letter
  for (const PolyMap& f : alphabet) {
    auto fm = f.compose_each_arg(plan.b).matrix();
    RK_CHECK(fm.has_value(), "family member has no matrix form");
    alpha_b.push_back(*fm);
  }

  std::vector<std::vector<PolyMap>> H(M);

  // line N: all sums of f_i o bold(b) over the word blocks T_i
  {
    std::vector<int> word(n, 0);  // letters 0..K-1 here
    while (true) {
      IntMatrix mat(d, N * d);
      for (int i = 0; i < n; ++i) add_block(mat, alpha_b[word[i]], i * mk * d);
      H[N - 1].push_back(PolyMap::from_matrix(N, d, mat));
      int i = n - 1;
      while (i >= 0 && word[i] == K - 1) word[i--] = 0;
      if (i < 0) break;
      ++word[i];
    }
  }

  // lines M-m+j for j > m-k: t -> f(u_0..u_{j-1}) over every word descriptor
  for (int j = mk + 1; j <= m; ++j) {
    int arity = M - m + j;
    std::vector<int> wext(n, 0);  // 0 = star, 1..K letters
    while (true) {
      for (const PolyMap& f : plan.base.family(j))
        H[arity - 1].push_back(PolyMap::from_matrix(arity, d, compose_with_u(cx, f, j, wext, arity)));
      int i = n - 1;
      while (i >= 0 && wext[i] == K) wext[i--] = 0;
      if (i < 0) break;
      ++wext[i];
    }
  }

  // lines a(m-k)+j for j < m-k: partial sums of C over the star block plus
  // the f term; the star set A ranges over subsets with maximum a
  for (int j = 0; j < mk; ++j) {
    for (int a = 0; a < n; ++a) {
      int arity = a * mk + j;
      if (arity == 0) continue;  // line 0 containment is exact, no map needed
      for (unsigned sub = 0; sub < (1u << a); ++sub) {
        std::vector<int> wext(n, 1);  // letters outside A are irrelevant here
        wext[a] = 0;
        for (int i = 0; i < a; ++i)
          if (sub & (1u << i)) wext[i] = 0;
        IntMatrix mat(d, arity * d);
        for (int i = 0; i < a; ++i)
          if (wext[i] == 0) add_block(mat, cx.c_big, (i * mk + j) * d);
        if (j == 0) {
          H[arity - 1].push_back(PolyMap::from_matrix(arity, d, mat));
        } else {
          for (const PolyMap& f : plan.base.family(j))
            H[arity - 1].push_back(
                PolyMap::from_matrix(arity, d, compose_with_u(cx, f, j, wext, arity) + mat));
        }
      }
    }
  }

  for (auto& fam : H) canonicalize_family(fam);

  plan.big.d = d;
  plan.big.m = M;
  plan.big.families = std::move(H);
  plan.big.c = cx.c_big;
  plan.big.validate();
  return plan;
}

ExtractResult extract(const LiftPlan& plan, const SeedVector& t, const Coloring& coloring,
                      const SearchBudget& budget) {
  ExtractResult res;
  try {
    const int d = plan.base.d, m = plan.base.m, k = plan.k, mk = m - k;
    const int n = plan.n, N = plan.big_n, M = plan.big_m;
    RK_CHECK(static_cast<int>(t.size()) == M + 1, "seed size mismatch for the lifted shape");
    ConfigSet big = generate(plan.big, t);
    for (const auto& p : big.points)
      RK_CHECK(coloring.domain.contains(p), "coloring does not cover the generated set");

    for (int line = M - k + 1; line <= M; ++line) {
      if (line_color(big.lines[line], coloring) == -2) {
        res.reason = "precondition failed: line " + std::to_string(line) +
                     " of the big set is not monochromatic";
        return res;
      }
    }

    const auto& alphabet = plan.base.family(mk);
    const int K = static_cast<int>(alphabet.size());
    const IntMatrix& cbig = plan.big.c;

    // induced coloring of words by the matching points of line N
    Box wbox = word_box(K, n);
    std::vector<uint8_t> wcolors(wbox.volume());
    {
      Word word(n, 1);
      while (true) {
        std::vector<Int> p(d, Int(0));
        for (int i = 0; i < n; ++i) {
          std::vector<Int> args;
          for (int q = 0; q < mk; ++q) {
            std::vector<Int> bp = plan.b.apply(t[i * mk + q]);
            args.insert(args.end(), bp.begin(), bp.end());
          }
          std::vector<Int> v = alphabet[word[i] - 1].eval(args);
          for (int x = 0; x < d; ++x) p[x] += v[x];
        }
        std::vector<Int> cn = cbig.apply(t[N]);
        for (int x = 0; x < d; ++x) p[x] += cn[x];
        RK_CHECK(coloring.domain.contains(p), "word point leaves the coloring domain");
        wcolors[wbox.index(as_word_point(word))] = static_cast<uint8_t>(coloring.at(p));
        int i = n - 1;
        while (i >= 0 && word[i] == K) word[i--] = 1;
        if (i < 0) break;
        ++word[i];
      }
    }
    Coloring induced = Coloring::from_values(wbox, coloring.r, std::move(wcolors));
    auto vw = find_mono_line(K, n, induced, budget);
    if (!vw) {
      res.reason = "n insufficient for this coloring: no monochromatic combinatorial line";
      return res;
    }
    res.vword = *vw;

    std::vector<int> A, B;
    for (int i = 0; i < n; ++i) ((*vw)[i] == 0 ? A : B).push_back(i);
    int a_max = A.back();

    // assemble the extracted seed from the star/letter split
    SeedVector u(m + 1);
    for (int j = 0; j <= m; ++j) {
      std::vector<Int> val(d, Int(0));
      if (j > mk) {
        val = plan.b.apply(t[M - m + j]);
      } else if (j == mk) {
        for (int i : B) {
          std::vector<Int> w = plan.a[mk - 1][(*vw)[i] - 1].eval(flat_args(t, i * mk, mk));
          for (int x = 0; x < d; ++x) val[x] += w[x];
        }
        std::vector<Int> bn = plan.b.apply(t[N]);
        for (int x = 0; x < d; ++x) val[x] += bn[x];
      } else {
        for (int i : A) {
          std::vector<Int> w = plan.b.apply(t[i * mk + j]);
          for (int x = 0; x < d; ++x) val[x] += w[x];
        }
      }
      bool zero = true;
      for (const Int& x : val)
        if (x != 0) zero = false;
      if (zero) {
        res.reason = "extract produced a zero seed entry u_" + std::to_string(j);
        return res;
      }
      u[j] = std::move(val);
    }
    res.s = u;

    ConfigSet small = generate(plan.base, u);
    res.line_colors.resize(m + 1);
    for (int j = 0; j <= m; ++j) res.line_colors[j] = line_color(small.lines[j], coloring);

    for (int j = 0; j <= m; ++j) {
      LinePlacement pl;
      pl.small_line = j;
      if (j < mk) {
        pl.big_line = a_max * mk + j;
        pl.containment_case = 0;
      } else if (j == mk) {
        pl.big_line = N;
        pl.containment_case = 1;
      } else {
        pl.big_line = M - m + j;
        pl.containment_case = 2;
      }
      if (!subset_of(small.lines[j], big.lines[pl.big_line])) {
        res.reason = "containment failed: line " + std::to_string(j) +
                     " of the small set is not inside line " + std::to_string(pl.big_line) +
                     " of the big set";
        return res;
      }
      res.placements.push_back(pl);
    }

    for (int j = mk; j <= m; ++j) {
      if (res.line_colors[j] == -2) {
        res.reason = "line " + std::to_string(j) + " of the small set is not monochromatic";
        return res;
      }
    }
    res.ok = true;
  } catch (const RamseyError& e) {
    res.ok = false;
    res.reason = e.what();
  }
  return res;
}

ExhaustiveLiftReport verify_lift_exhaustive(const LiftPlan& plan, const SeedVector& t,
                                            const SearchBudget& budget) {
  ConfigSet big = generate(plan.big, t);
  const auto& pts = big.points;
  const int P = static_cast<int>(pts.size());
  const int r = plan.r;
  unsigned long long total = sat_pow(r, P);
  RK_CHECK(total <= (1ULL << 22),
           "exhaustive sweep too large: " + std::to_string(r) + "^" + std::to_string(P) +
               " colorings");

  Box bbox;
  bbox.range.resize(plan.big.d);
  for (int x = 0; x < plan.big.d; ++x) bbox.range[x] = {pts[0][x], pts[0][x]};
  for (const auto& p : pts)
    for (int x = 0; x < plan.big.d; ++x) {
      if (p[x] < bbox.range[x].first) bbox.range[x].first = p[x];
      if (p[x] > bbox.range[x].second) bbox.range[x].second = p[x];
    }
  std::vector<size_t> pidx;
  for (const auto& p : pts) pidx.push_back(bbox.index(p));

  auto sweep = [&](unsigned long long lo, unsigned long long hi) {
    ExhaustiveLiftReport rep;
    std::vector<uint8_t> vals(bbox.volume(), 0);
    for (unsigned long long idx = lo; idx < hi; ++idx) {
      unsigned long long rem = idx;
      for (int i = 0; i < P; ++i) {
        vals[pidx[i]] = static_cast<uint8_t>(rem % r);
        rem /= r;
      }
      Coloring col = Coloring::from_values(bbox, r, vals);
      bool pre = true;
      for (int line = plan.big_m - plan.k + 1; line <= plan.big_m && pre; ++line)
        if (line_color(big.lines[line], col) == -2) pre = false;
      if (!pre) continue;
      ++rep.colorings;
      ExtractResult er = extract(plan, t, col, budget);
      if (er.ok) {
        ++rep.successes;
        for (const auto& pl : er.placements)
          if (er.line_colors[pl.small_line] != -1) ++rep.case_seen[pl.containment_case];
      } else if (rep.failures.size() < 5) {
        rep.failures.push_back(col.rle() + " : " + er.reason);
      }
    }
    return rep;
  };

  int threads = std::max(1, budget.threads);
  ExhaustiveLiftReport rep;
  if (threads == 1 || total < 64) {
    rep = sweep(0, total);
  } else {
    std::vector<std::future<ExhaustiveLiftReport>> futs;
    unsigned long long chunk = (total + threads - 1) / threads;
    for (int i = 0; i < threads; ++i) {
      unsigned long long lo = chunk * i, hi = std::min(total, chunk * (i + 1));
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, sweep, lo, hi));
    }
    for (auto& f : futs) {
      ExhaustiveLiftReport part = f.get();
      rep.colorings += part.colorings;
      rep.successes += part.successes;
      for (int c = 0; c < 3; ++c) rep.case_seen[c] += part.case_seen[c];
      for (const auto& s : part.failures)
        if (rep.failures.size() < 5) rep.failures.push_back(s);
    }
  }
  return rep;
}

FullLift full_lift(const Shape& shape, int r, std::optional<int> chain_len_override,
                   std::optional<int> n_override, size_t max_terms) {
  shape.validate();
  RK_CHECK(r >= 1, "colors must be >= 1");
  FullLift fl;
  fl.original = shape;
  fl.r = r;
  if (r == 1) {  // nothing to prove with one color
    fl.base = shape;
    fl.chain_len = 0;
    fl.h0 = shape;
    fl.final_shape = shape;
    return fl;
  }
  fl.base = normalize_for_lift(shape);
  for (const auto& fam : fl.base.families)
    for (const auto& f : fam) RK_CHECK(f.is_homomorphism(), "lift needs homomorphism families");
  const int m = fl.base.m, d = fl.base.d;
  fl.chain_len = chain_len_override.value_or(m * (r - 1));
  RK_CHECK(fl.chain_len >= m, "chain too short for the final reindexing");

  // starting families: every reindexing f(x_{i_1},...,x_{i_l}) of a base map
  unsigned long long est = 0;
  Shape h0;
  h0.d = d;
  h0.m = fl.chain_len;
  h0.c = fl.base.c;
  h0.families.resize(fl.chain_len);
  for (int j = 1; j <= fl.chain_len; ++j) {
    for (int l = 1; l <= std::min(j, m); ++l) {
      std::vector<int> idx(l);
      for (int i = 0; i < l; ++i) idx[i] = i;
      while (true) {
        for (const PolyMap& f : fl.base.family(l)) {
          est = sat_add(est, 1);
          if (est > max_terms)
            throw RamseyError("starting families would hold over " + std::to_string(max_terms) +
                              " maps");
          auto fm = f.matrix();
          RK_CHECK(fm.has_value(), "family member has no matrix form");
          IntMatrix mat(d, j * d);
          for (int q = 0; q < l; ++q)
            for (int row = 0; row < d; ++row)
              for (int col = 0; col < d; ++col)
                mat.at(row, idx[q] * d + col) += fm->at(row, q * d + col);
          h0.families[j - 1].push_back(PolyMap::from_matrix(j, d, mat));
        }
        int q = l - 1;
        while (q >= 0 && idx[q] == j - l + q) --q;
        if (q < 0) break;
        ++idx[q];
        for (int x = q + 1; x < l; ++x) idx[x] = idx[x - 1] + 1;
      }
    }
    canonicalize_family(h0.families[j - 1]);
  }
  h0.validate();
  fl.h0 = h0;

  Shape cur = h0;
  for (int step = 0; step < fl.chain_len; ++step) {
    LiftPlan plan = lift(cur, r, fl.chain_len - 1 - step, n_override, max_terms);
    cur = plan.big;
    fl.plans.push_back(std::move(plan));
  }
  fl.final_shape = cur;
  return fl;
}

FullExtractResult full_extract(const FullLift& fl, const SeedVector& t, const Coloring& coloring,
                               const SearchBudget& budget) {
  FullExtractResult res;
  try {
    SeedVector cur = t;
    for (size_t i = fl.plans.size(); i-- > 0;) {
      ExtractResult er = extract(fl.plans[i], cur, coloring, budget);
      if (!er.ok) {
        res.reason = "stage " + std::to_string(fl.plans.size() - 1 - i) + ": " + er.reason;
        res.stages.push_back(std::move(er));
        return res;
      }
      cur = er.s;
      res.stages.push_back(std::move(er));
    }
    res.t0 = cur;

    ConfigSet h0set = generate(fl.h0, cur);
    const int lines = fl.h0.m + 1;
    res.h0_line_colors.resize(lines);
    for (int j = 0; j < lines; ++j) {
      int c = line_color(h0set.lines[j], coloring);
      if (c == -2) {
        res.reason = "line " + std::to_string(j) + " of the chain-start set is not monochromatic";
        return res;
      }
      res.h0_line_colors[j] = c;
    }

    // pigeonhole: m+1 lines of one color
    const int m = fl.base.m;
    int color = -1;
    for (int c = 0; c < coloring.r && color == -1; ++c) {
      int cnt = 0;
      for (int j = 0; j < lines; ++j)
        if (res.h0_line_colors[j] == c) ++cnt;
      if (cnt >= m + 1) color = c;
    }
    if (color == -1) {
      std::ostringstream os;
      os << "pigeonhole insufficient: need " << m + 1 << " same-colored lines among " << lines
         << ", line colors =";
      for (int j = 0; j < lines; ++j) os << ' ' << res.h0_line_colors[j];
      res.reason = os.str();
      return res;
    }
    res.color = color;
    for (int j = 0; j < lines && static_cast<int>(res.chosen_lines.size()) < m + 1; ++j)
      if (res.h0_line_colors[j] == color) res.chosen_lines.push_back(j);

    for (int j = 0; j <= m; ++j) res.s.push_back(cur[res.chosen_lines[j]]);

    ConfigSet small = generate(fl.base, res.s);
    for (int j = 0; j <= m; ++j) {
      if (!subset_of(small.lines[j], h0set.lines[res.chosen_lines[j]])) {
        res.reason = "containment failed: line " + std::to_string(j) +
                     " of the final set is not inside line " +
                     std::to_string(res.chosen_lines[j]) + " of the chain-start set";
        return res;
      }
    }
    ConfigSet orig = generate(fl.original, res.s);
    for (const auto& p : orig.points) {
      if (coloring.at(p) != color) {
        res.reason = "final configuration is not monochromatic";
        return res;
      }
    }
    res.ok = true;
  } catch (const RamseyError& e) {
    res.ok = false;
    res.reason = e.what();
  }
  return res;
}

}  // namespace ramsey
