#include "ramsey/ip.hpp"

#include <algorithm>
#include <set>

namespace ramsey {

const std::vector<Int>& FiniteIP::value(unsigned mask) const {
  RK_CHECK(mask >= 1 && mask < (1u << generators.size()), "subset mask out of range");
  return values[mask - 1];
}

void FiniteIP::validate() const {
  RK_CHECK(d >= 1, "dimension must be >= 1");
  RK_CHECK(!generators.empty() && generators.size() <= 20, "generator count out of range");
  for (const auto& g : generators) RK_CHECK(static_cast<int>(g.size()) == d, "generator dimension mismatch");
  RK_CHECK(values.size() == (size_t(1) << generators.size()) - 1, "value table size mismatch");
}

FiniteIP fs(const std::vector<std::vector<Int>>& generators) {
  FiniteIP ip;
  RK_CHECK(!generators.empty() && generators.size() <= 20, "generator count out of range");
  ip.d = static_cast<int>(generators[0].size());
  ip.generators = generators;
  size_t n = generators.size();
  ip.values.resize((size_t(1) << n) - 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Int> v(ip.d, Int(0));
    for (size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      RK_CHECK(static_cast<int>(generators[i].size()) == ip.d, "generator dimension mismatch");
      for (int x = 0; x < ip.d; ++x) v[x] += generators[i][x];
    }
    ip.values[mask - 1] = std::move(v);
  }
  return ip;
}

FiniteIP sub_ip(const FiniteIP& ip, const std::vector<std::vector<int>>& blocks) {
  ip.validate();
  RK_CHECK(!blocks.empty(), "no blocks");
  int last_max = 0;
  std::vector<std::vector<Int>> gens;
  for (const auto& block : blocks) {
    RK_CHECK(!block.empty(), "empty block");
    int mn = block[0], mx = block[0];
    unsigned mask = 0;
    for (int i : block) {
      RK_CHECK(i >= 1 && i <= static_cast<int>(ip.generators.size()), "block index out of range");
      RK_CHECK(!(mask >> (i - 1) & 1), "repeated index inside a block");
      mask |= 1u << (i - 1);
      mn = std::min(mn, i);
      mx = std::max(mx, i);
    }
    RK_CHECK(mn > last_max, "blocks must be ordered: max of one below min of the next");
    last_max = mx;
    gens.push_back(ip.value(mask));
  }
  return fs(gens);
}

IpProbeResult finitistic_ip_vdw_probe(const std::vector<PolyMap>& family, const FiniteIP& y,
                                      int r, long max_l, const SearchBudget& budget) {
  y.validate();
  RK_CHECK(!family.empty(), "empty map family");
  RK_CHECK(r >= 1, "colors must be >= 1");
  RK_CHECK(max_l >= 1, "max interval bound must be >= 1");
  for (const PolyMap& f : family) {
    RK_CHECK(f.arity == 1 && f.dim == y.d && f.out_dim == 1,
             "probe maps must go from the IP space to Z");
  }

  // the finitely many displacements f(y_alpha)
  std::set<long> vset;
  for (const PolyMap& f : family)
    for (const auto& v : y.values) vset.insert(to_long(f.eval(v)[0]));
  std::vector<long> shifts(vset.begin(), vset.end());

  IpProbeResult res;
  std::optional<Coloring> last_bad;
  for (long l = 1; l <= max_l; ++l) {
    std::set<std::vector<int>> cfgset;
    for (long a = 1; a <= l; ++a) {
      for (long v : shifts) {
        long b = a + v;
        if (b < 1 || b > l) continue;
        std::vector<int> cfg{static_cast<int>(a - 1), static_cast<int>(b - 1)};
        std::sort(cfg.begin(), cfg.end());
        cfg.erase(std::unique(cfg.begin(), cfg.end()), cfg.end());
        cfgset.insert(std::move(cfg));
      }
    }
    std::vector<std::vector<int>> cfgs(cfgset.begin(), cfgset.end());
    SearchStats st;
    auto bad = find_bad_coloring(static_cast<size_t>(l), cfgs, r, budget, &st);
    res.stats.nodes += st.nodes;
    res.stats.seconds += st.seconds;
    if (bad) {
      last_bad = Coloring::from_values(Box::interval(1, Int(l)), r, *bad);
      continue;
    }

    // independent second pass: plain odometer over all r^l colorings, direct
    // config scan, no pruning shared with the decision engine
    unsigned long long total = 1;
    for (long i = 0; i < l; ++i) {
      RK_CHECK(total <= (1ULL << 24) / r, "second pass too large");
      total *= static_cast<unsigned>(r);
    }
    std::vector<int> col(l, 0);
    for (unsigned long long idx = 0; idx < total; ++idx) {
      unsigned long long rem = idx;
      for (long i = 0; i < l; ++i) {
        col[i] = static_cast<int>(rem % r);
        rem /= r;
      }
      bool found = false;
      for (long a = 1; a <= l && !found; ++a)
        for (long v : shifts) {
          long b = a + v;
          if (b < 1 || b > l) continue;
          if (col[a - 1] == col[b - 1]) {
            found = true;
            break;
          }
        }
      RK_CHECK(found, "second pass found a coloring the decision engine missed");
    }

    res.l = l;
    res.bad_below = last_bad;
    return res;
  }
  res.bad_below = last_bad;
  return res;
}

}  // namespace ramsey
