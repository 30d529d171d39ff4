#include "ramsey/hales_jewett.hpp"

#include <algorithm>
#include <chrono>

namespace ramsey {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Int> as_point(const Word& w) {
  std::vector<Int> p;
  p.reserve(w.size());
  for (int x : w) p.emplace_back(x);
  return p;
}

size_t checked_pow(size_t base, int exp) {
  size_t v = 1;
  for (int i = 0; i < exp; ++i) {
    RK_CHECK(v <= (size_t(1) << 28) / base, "word space too large");
    v *= base;
  }
  return v;
}

}  // namespace

Box word_box(int k, int n) {
  RK_CHECK(k >= 1 && n >= 1, "alphabet and length must be >= 1");
  Box b;
  b.range.assign(n, {Int(1), Int(k)});
  return b;
}

bool is_variable_word(const Word& w, int k) {
  bool star = false;
  for (int x : w) {
    if (x < 0 || x > k) return false;
    if (x == 0) star = true;
  }
  return star && !w.empty();
}

Word instantiate(const Word& vword, int letter) {
  Word w = vword;
  for (int& x : w)
    if (x == 0) x = letter;
  return w;
}

std::vector<Word> line_of(const Word& vword, int k) {
  std::vector<Word> line;
  for (int a = 1; a <= k; ++a) line.push_back(instantiate(vword, a));
  return line;
}

std::optional<Word> find_mono_line(int k, int n, const Coloring& coloring,
                                   const SearchBudget& budget, SearchStats* stats) {
  coloring.validate();
  RK_CHECK(coloring.domain == word_box(k, n), "coloring domain is not the word box");
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  auto t0 = std::chrono::steady_clock::now();

  // digits 0..k in lexicographic order, odometer style
  Word v(n, 0);
  while (true) {
    ++st.nodes;
    if (st.nodes >= budget.max_nodes) {
      st.node_limit_hit = true;
      break;
    }
    if ((st.nodes & 4095) == 0 && seconds_since(t0) > budget.max_seconds) {
      st.time_limit_hit = true;
      break;
    }
    if (std::find(v.begin(), v.end(), 0) != v.end()) {
      int color = -1;
      bool mono = true;
      for (int a = 1; a <= k && mono; ++a) {
        int c = coloring.at(as_point(instantiate(v, a)));
        if (color == -1) color = c;
        else if (c != color) mono = false;
      }
      if (mono) {
        st.seconds = seconds_since(t0);
        return v;
      }
    }
    int i = n - 1;
    while (i >= 0 && v[i] == k) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  st.seconds = seconds_since(t0);
  return std::nullopt;
}

HjResult hj_number(int k, int r, int max_n, const SearchBudget& budget) {
  RK_CHECK(k >= 1 && r >= 1 && max_n >= 1, "bad hales-jewett parameters");
  HjResult res;
  std::optional<Coloring> last_bad;
  for (int n = 1; n <= max_n; ++n) {
    size_t universe = checked_pow(static_cast<size_t>(k), n);
    Box box = word_box(k, n);

    // every combinatorial line as a config of word indices
    std::vector<std::vector<int>> configs;
    Word v(n, 0);
    while (true) {
      if (std::find(v.begin(), v.end(), 0) != v.end()) {
        std::vector<int> cfg;
        for (int a = 1; a <= k; ++a)
          cfg.push_back(static_cast<int>(box.index(as_point(instantiate(v, a)))));
        configs.push_back(std::move(cfg));
      }
      int i = n - 1;
      while (i >= 0 && v[i] == k) v[i--] = 0;
      if (i < 0) break;
      ++v[i];
    }

    SearchStats st;
    auto bad = find_bad_coloring(universe, configs, r, budget, &st);
    res.stats.nodes += st.nodes;
    res.stats.seconds += st.seconds;
    if (bad) {
      last_bad = Coloring::from_values(box, r, *bad);
      continue;
    }
    res.n = n;
    res.bad_below = last_bad;
    return res;
  }
  res.bad_below = last_bad;
  return res;
}

}  // namespace ramsey
