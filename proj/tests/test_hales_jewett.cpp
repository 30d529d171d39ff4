#include <random>

#include "doctest.h"
#include "ramsey/hales_jewett.hpp"

using namespace ramsey;

namespace {

std::vector<Int> word_point(const Word& w) {
  std::vector<Int> p;
  for (int ch : w) p.emplace_back(ch);
  return p;
}

// raw oracle: enumerate every variable word by odometer over {0..k}^n
std::vector<Word> all_variable_words(int k, int n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    if (is_variable_word(w, k)) out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == k) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

bool line_mono(const Word& vw, int k, const Coloring& col) {
  int c0 = col.at(word_point(instantiate(vw, 1)));
  for (const Word& w : line_of(vw, k))
    if (col.at(word_point(w)) != c0) return false;
  return true;
}

}  // namespace

TEST_CASE("word primitives") {
  CHECK(word_box(2, 3).volume() == 8);
  CHECK(is_variable_word({0, 1}, 2));
  CHECK_FALSE(is_variable_word({1, 2}, 2));
  CHECK_FALSE(is_variable_word({0, 3}, 2));  // letter out of range
  CHECK(instantiate({0, 2, 0}, 1) == Word{1, 2, 1});
  CHECK(line_of({0, 1}, 3).size() == 3);
}

TEST_CASE("mono line search agrees with the raw oracle on every coloring") {
  int k = 2, n = 2;
  Box dom = word_box(k, n);
  auto vwords = all_variable_words(k, n);
  CHECK(vwords.size() == 5);  // *1 *2 1* 2* **
  for (int v = 0; v < 16; ++v) {
    std::vector<uint8_t> vals;
    for (int i = 0; i < 4; ++i) vals.push_back((v >> i) & 1);
    Coloring col = Coloring::from_values(dom, 2, vals);
    auto found = find_mono_line(k, n, col, SearchBudget{});
    bool oracle = false;
    for (const Word& vw : vwords) oracle = oracle || line_mono(vw, k, col);
    CHECK(found.has_value() == oracle);
    if (found) CHECK(line_mono(*found, k, col));
  }
}

TEST_CASE("hales-jewett numbers at desk scale") {
  HjResult r22 = hj_number(2, 2, 5, SearchBudget{});
  REQUIRE(r22.n.has_value());
  CHECK(*r22.n == 2);
  REQUIRE(r22.bad_below.has_value());
  CHECK_FALSE(find_mono_line(2, 1, *r22.bad_below, SearchBudget{}).has_value());

  // one color: any line is monochromatic, so n = 1
  HjResult r31 = hj_number(3, 1, 3, SearchBudget{});
  REQUIRE(r31.n.has_value());
  CHECK(*r31.n == 1);

  // unary alphabet: the single word of length 1 is a full line
  HjResult r12 = hj_number(1, 2, 3, SearchBudget{});
  REQUIRE(r12.n.has_value());
  CHECK(*r12.n == 1);
}

TEST_CASE("exhaustive check that every 2-coloring of length-2 words has a line") {
  int k = 2, n = 2;
  Box dom = word_box(k, n);
  auto vwords = all_variable_words(k, n);
  for (int v = 0; v < 16; ++v) {
    std::vector<uint8_t> vals;
    for (int i = 0; i < 4; ++i) vals.push_back((v >> i) & 1);
    Coloring col = Coloring::from_values(dom, 2, vals);
    bool has = false;
    for (const Word& vw : vwords) has = has || line_mono(vw, k, col);
    CHECK(has);
  }
}

TEST_CASE("budget exhaustion surfaces in the stats") {
  SearchBudget tiny;
  tiny.max_nodes = 2;
  SearchStats st;
  Coloring col = Coloring::parity(word_box(3, 4), 2);
  auto res = find_mono_line(3, 4, col, tiny, &st);
  if (!res) CHECK((st.node_limit_hit || st.time_limit_hit));
}
