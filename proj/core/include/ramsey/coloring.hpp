#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/numeric.hpp"

namespace ramsey {

// Axis-aligned box in Z^d with inclusive bounds; the finite domains colorings
// live on. Kept small enough to store colors densely.
struct Box {
  std::vector<std::pair<Int, Int>> range;

  int dim() const { return static_cast<int>(range.size()); }
  bool contains(const std::vector<Int>& p) const;
  size_t volume() const;
  size_t index(const std::vector<Int>& p) const;     // mixed radix, row-major
  std::vector<Int> point(size_t idx) const;
  void validate() const;

  static Box interval(const Int& lo, const Int& hi);

  bool operator==(const Box& o) const = default;
};

struct Coloring {
  Box domain;
  int r = 2;
  std::vector<uint8_t> color;  // dense over domain, size = volume

  int at(const std::vector<Int>& p) const { return color[domain.index(p)]; }
  void validate() const;

  static Coloring constant(const Box& b, int r, int value);
  // color = (sum of coordinates) mod r, shifted to stay nonnegative
  static Coloring parity(const Box& b, int r);
  // deterministic pseudorandom fill from the 64-bit seed
  static Coloring random(const Box& b, int r, uint64_t seed);
  static Coloring from_values(const Box& b, int r, std::vector<uint8_t> values);

  // run-length encoding "countxcolor,countxcolor,..."
  std::string rle() const;
  static Coloring from_rle(const Box& b, int r, const std::string& rle);

  bool operator==(const Coloring& o) const = default;
};

}  // namespace ramsey
