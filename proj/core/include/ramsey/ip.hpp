#pragma once

#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/polymap.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Finite IP-set: n generators in Z^d together with all 2^n - 1 subset sums.
// values[mask-1] is the sum over the bits of mask (bit i = generator i).
// Repeated generators are allowed; the value list is then a multiset.
struct FiniteIP {
  int d = 1;
  std::vector<std::vector<Int>> generators;
  std::vector<std::vector<Int>> values;

  const std::vector<Int>& value(unsigned mask) const;
  void validate() const;
};

FiniteIP fs(const std::vector<std::vector<Int>>& generators);

// Sub-IP-set generated by block sums. Blocks hold 1-based generator indices
// and must be ordered: max of one block below min of the next.
FiniteIP sub_ip(const FiniteIP& ip, const std::vector<std::vector<int>>& blocks);

struct IpProbeResult {
  std::optional<long> l;              // certified interval I = [1, l]
  std::optional<Coloring> bad_below;  // coloring of [1, l-1] with no mono pair
  SearchStats stats;
};

// Searches intervals [1, L] for the least L such that every r-coloring
// contains a monochromatic {a, a + f(y_alpha)} with both points inside.
// Family maps go Z^d -> Z (arity 1, dim = y.d, out_dim 1). A certified L is
// re-verified by an independent sweep over all r^L colorings.
IpProbeResult finitistic_ip_vdw_probe(const std::vector<PolyMap>& family, const FiniteIP& y,
                                      int r, long max_l, const SearchBudget& budget);

}  // namespace ramsey
