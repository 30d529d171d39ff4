#pragma once

#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Words over the alphabet {1..k}; a variable word additionally uses 0 as the
// star and must contain at least one star.
using Word = std::vector<int>;

Box word_box(int k, int n);  // [1,k]^n, the domain word colorings live on
bool is_variable_word(const Word& w, int k);
Word instantiate(const Word& vword, int letter);
std::vector<Word> line_of(const Word& vword, int k);

// First variable word (lexicographically, star before letters) whose
// combinatorial line is monochromatic, or nullopt when none exists.
std::optional<Word> find_mono_line(int k, int n, const Coloring& coloring,
                                   const SearchBudget& budget, SearchStats* stats = nullptr);

struct HjResult {
  std::optional<int> n;
  // coloring of words of length n-1 with no monochromatic line (absent when
  // n == 1 or nothing was decided)
  std::optional<Coloring> bad_below;
  SearchStats stats;
};

// Least n <= max_n such that every r-coloring of {1..k}^n contains a
// monochromatic combinatorial line.
HjResult hj_number(int k, int r, int max_n, const SearchBudget& budget);

}  // namespace ramsey
