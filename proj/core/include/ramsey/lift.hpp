#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/hales_jewett.hpp"
#include "ramsey/search.hpp"
#include "ramsey/shape.hpp"

namespace ramsey {

// A lifted shape (M, H, C) for a normalized base shape (m, F, c) and a color
// count r, together with the concordance witnesses needed to pull a
// configuration back down. Words over the alphabet F_{m-k} (canonical family
// order, letters 1..|F_{m-k}|) of length n index the maps of H_N.
struct LiftPlan {
  Shape base;  // normalized input
  int r = 2;
  int k = 0;  // lines already monochromatic coming in
  int n = 1;  // word length
  IntMatrix b;
  std::vector<std::vector<PolyMap>> a;  // a[j-1][i] pairs with base.families[j-1][i]
  int big_n = 0;                        // N = n*(m-k)
  int big_m = 0;                        // M = N + k
  Shape big;                            // (M, H, C) with C = c o b
};

// Builds the lifted shape. n_override substitutes for the Hales-Jewett
// length when hj_number is infeasible for (|F_{m-k}|, r); max_terms bounds
// the materialized family size (the construction is exponential in n).
LiftPlan lift(const Shape& shape, int r, int k, std::optional<int> n_override = {},
              size_t max_terms = 200000);

struct LinePlacement {
  int small_line = 0;
  int big_line = 0;
  int containment_case = 0;  // 0: j < m-k, 1: j == m-k, 2: j > m-k
};

struct ExtractResult {
  bool ok = false;
  std::string reason;  // names the failing check when !ok
  Word vword;          // variable word over the alphabet family, 0 = star
  SeedVector s;        // u_0..u_m, seed of the small shape
  // color of small line j; -1 empty line, -2 mixed colors
  std::vector<int> line_colors;
  std::vector<LinePlacement> placements;
};

// Pulls a small configuration out of a colored big one: colors the words by
// the matching points of line N, finds a monochromatic combinatorial line,
// and evaluates the seed u from the variable word. Requires the last k lines
// of the big configuration to be monochromatic. Never throws on a failed
// claim; the result carries the falsifying detail instead.
ExtractResult extract(const LiftPlan& plan, const SeedVector& t, const Coloring& coloring,
                      const SearchBudget& budget);

struct ExhaustiveLiftReport {
  uint64_t colorings = 0;  // colorings meeting the last-k-lines precondition
  uint64_t successes = 0;
  uint64_t case_seen[3] = {0, 0, 0};  // containment cases exercised
  std::vector<std::string> failures;  // first few failures, coloring + reason
};

// Sweeps every r-coloring of the generated big set (restricted to those
// meeting the precondition) and runs extract on each.
ExhaustiveLiftReport verify_lift_exhaustive(const LiftPlan& plan, const SeedVector& t,
                                            const SearchBudget& budget);

// Chained lift: starting family of reindexing maps, then one lift per step
// with k = chain_len - step - 1. The classical recipe chain_len = m*(r-1)
// does not always leave enough lines for the final pigeonhole; see
// full_extract, which reports that honestly. chain_len_override makes the
// longer (sufficient) chain expressible, though its later steps usually
// exceed any feasible Hales-Jewett length.
struct FullLift {
  Shape original;
  Shape base;  // normalized original
  int r = 1;
  int chain_len = 0;
  Shape h0;  // (chain_len, H0, c), H0_j = reindexings of base family maps
  std::vector<LiftPlan> plans;  // plans[i] lifts chain shape i
  Shape final_shape;
};

FullLift full_lift(const Shape& shape, int r, std::optional<int> chain_len_override = {},
                   std::optional<int> n_override = {}, size_t max_terms = 200000);

struct FullExtractResult {
  bool ok = false;
  std::string reason;
  std::vector<ExtractResult> stages;  // big-to-small order
  SeedVector t0;                      // seed of the h0 configuration
  std::vector<int> h0_line_colors;
  std::vector<int> chosen_lines;  // l_0 < ... < l_m of one color
  SeedVector s;                   // final seed for the original shape
  int color = -1;
};

// Runs every stage's extract, then the pigeonhole over the h0 lines and the
// final reindexing s_j = t0[l_j]. Verifies that the original-shape set is
// monochromatic and contained in the h0 set.
FullExtractResult full_extract(const FullLift& fl, const SeedVector& t, const Coloring& coloring,
                               const SearchBudget& budget);

}  // namespace ramsey
