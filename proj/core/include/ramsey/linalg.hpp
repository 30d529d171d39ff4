#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/matrix.hpp"

namespace ramsey {

struct RrefResult {
  RatMatrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form over Q. Pure; input passed by value.
RrefResult rref(RatMatrix m);

// Coefficients x with sum_i x_i * basis_i = v, or nullopt if v is outside the
// span. Empty basis: succeeds iff v = 0.
std::optional<std::vector<Rat>> in_span(const std::vector<Rat>& v,
                                        const std::vector<std::vector<Rat>>& basis);

// Diagonalization S = U*A*V with U, V unimodular and S zero off the diagonal.
// Enough for exact linear solving; the divisibility chain of the full Smith
// form is not needed here.
struct SmithResult {
  IntMatrix s, u, v;
};
SmithResult smith_diagonal(IntMatrix a);

struct IntSolveResult {
  std::optional<std::vector<Int>> x;  // some solution of A x = b, if one exists
  bool rational_solvable = false;
  // Set when the system solves over Q but not over Z: (diagonal entry, rhs
  // component it fails to divide).
  std::optional<std::pair<Int, Int>> obstruction;
};
IntSolveResult solve_integer_linear(const IntMatrix& a, const std::vector<Int>& b);

// Determinant via fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

// |Z^d : c(Z^d)| = |det c| when c is injective, nullopt otherwise.
std::optional<Int> index_of_image(const IntMatrix& c);

}  // namespace ramsey
