#pragma once

#include <optional>
#include <vector>

#include "ramsey/polymap.hpp"

namespace ramsey {

// Shape of a configuration family over Z^d: m+1 seed points, family F_k of
// maps (Z^d)^k -> Z^d for each line k = 1..m, and an endomorphism c applied
// to the seed that a line introduces. Line 0 of a generated set is {c(s_0)},
// line k is {f(s_0..s_{k-1}) + c(s_k) : f in F_k}. Families may be empty.
struct Shape {
  int d = 1;
  int m = 1;
  std::vector<std::vector<PolyMap>> families;  // families[k-1] = F_k, arity k
  IntMatrix c;

  void validate() const;
  void canonicalize();  // canonical family order + dedup
  const std::vector<PolyMap>& family(int k) const { return families[k - 1]; }

  bool operator==(const Shape& o) const = default;
};

// m+1 points of Z^d, all nonzero
using SeedVector = std::vector<std::vector<Int>>;

struct ConfigSet {
  std::vector<std::vector<std::vector<Int>>> lines;  // lines[k] = points of line k
  std::vector<std::vector<Int>> points;              // sorted, deduplicated
  size_t term_count = 0;                             // 1 + sum |F_k|

  bool collisions() const { return points.size() != term_count; }
};

ConfigSet generate(const Shape& shape, const SeedVector& seed);

// Like generate but restricted to a subset of line indices (sorted, in
// [0, m]). Used by searches that target only part of the configuration.
ConfigSet generate_masked(const Shape& shape, const SeedVector& seed,
                          const std::vector<int>& line_mask);

// Classical (m,p,c)-structure as a shape over Z: F_j = all inner products
// <x, xi> with xi in {-p..p}^j, so |F_j| = (2p+1)^j.
Shape from_mpc(int m, int p, const Int& c);

// Direct evaluation of the classical (m,p,c)-set, used as the oracle against
// generate(from_mpc(...)): {c s_0} union {i_0 s_0 + ... + i_{k-1} s_{k-1} + c s_k}.
std::vector<Int> mpc_points_direct(int m, int p, const Int& c, const std::vector<Int>& seed);

// Intersection shape: a set generated by the result contains, for each input
// shape, a configuration of that shape (seeds transported by the other c).
// Requires commuting c's and homomorphism families.
Shape join_shapes(const Shape& s1, const Shape& s2);

struct Concordance {
  IntMatrix b;                              // nonzero endomorphism of Z^d
  std::vector<std::vector<PolyMap>> a;      // a[k-1][i] matches families[k-1][i]
};

// Searches the two witness patterns used throughout: b = c when c is a
// nonzero scalar (a_f = f), else b = id with a_f solved from c o a_f = f.
std::optional<Concordance> concordance_witness(const Shape& shape);

// Checks c o a_f = f o bold(b) exactly for every family member.
bool verify_concordance(const Shape& shape, const Concordance& w);

// Adds to each F_k the zero map, the block projections, and arity-lifted
// copies of all lower families. Idempotent.
Shape normalize_for_lift(const Shape& shape);

// Configuration shape whose generated sets are exactly the rows of B*s: each
// row must look like (i_0,...,i_{t-1}, c, 0,...,0). d = 1.
Shape config_shape_from_matrix(const IntMatrix& b, const Int& c);

}  // namespace ramsey
