#pragma once

#include <optional>
#include <vector>

#include "ramsey/linalg.hpp"
#include "ramsey/shape.hpp"

namespace ramsey {

// Ordered block partition of the columns witnessing the columns condition:
// the first block sums to zero, every later block's sum is a rational
// combination of all columns in earlier blocks.
struct ColumnsCertificate {
  std::vector<int> permutation;          // concatenation of blocks
  std::vector<std::vector<int>> blocks;  // original column indices
  std::vector<std::vector<Rat>> coeffs;  // coeffs[t-1] over earlier columns in permutation order
};

std::optional<ColumnsCertificate> check_columns(const IntMatrix& a);
bool verify_columns_certificate(const IntMatrix& a, const ColumnsCertificate& cert);

// Generalized form for systems over Z^{d'}: columns are maps Z^{d'} -> Z^{k d'}
// given as (k d') x d' matrices, blocks satisfy
//   (sum of first block) o c = 0,
//   (sum of block t) o c + sum_{i earlier} col_i o f_i = 0
// with integer endomorphism witnesses f_i.
struct GenColumnsCertificate {
  IntMatrix c;
  std::vector<int> permutation;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<IntMatrix>> witnesses;  // witnesses[t-1] over earlier columns
};

std::optional<GenColumnsCertificate> check_columns_general(const std::vector<IntMatrix>& cols,
                                                           const IntMatrix& c);
bool verify_gen_certificate(const std::vector<IntMatrix>& cols, const GenColumnsCertificate& cert);

// Tries a small candidate list for c: identity, scalars up to +-3, and (for
// square column maps) the columns and their pairwise compositions.
std::optional<GenColumnsCertificate> check_columns_general_auto(const std::vector<IntMatrix>& cols);

// B with A*B = 0 whose rows, applied to any seed, land in the classical
// (m,p,c)-structure: row for a column in block t reads
// (i_0,...,c,0,...,0) with the c entry at seed position m - t.
struct Reduction {
  IntMatrix b;
  int m = 0;
  Int p, c;
};

Reduction deuber_reduce(const IntMatrix& a, const ColumnsCertificate& cert);

}  // namespace ramsey
