#include "ramsey/coloring.hpp"

#include <random>

namespace ramsey {

void Box::validate() const {
  RK_CHECK(!range.empty(), "box must have dimension >= 1");
  for (const auto& [lo, hi] : range) RK_CHECK(lo <= hi, "box range empty");
}

bool Box::contains(const std::vector<Int>& p) const {
  if (p.size() != range.size()) return false;
  for (size_t i = 0; i < range.size(); ++i)
    if (p[i] < range[i].first || p[i] > range[i].second) return false;
  return true;
}

size_t Box::volume() const {
  Int v = 1;
  for (const auto& [lo, hi] : range) v *= hi - lo + 1;
  RK_CHECK(v.fits_ulong_p() && v.get_ui() <= (1u << 28), "box too large for dense storage");
  return static_cast<size_t>(v.get_ui());
}

size_t Box::index(const std::vector<Int>& p) const {
  RK_CHECK(contains(p), "point outside box");
  Int idx = 0;
  for (size_t i = 0; i < range.size(); ++i) {
    idx *= range[i].second - range[i].first + 1;
    idx += p[i] - range[i].first;
  }
  return static_cast<size_t>(idx.get_ui());
}

std::vector<Int> Box::point(size_t idx) const {
  std::vector<Int> p(range.size());
  Int rem = static_cast<unsigned long>(idx);
  for (size_t i = range.size(); i-- > 0;) {
    Int width = range[i].second - range[i].first + 1;
    p[i] = range[i].first + rem % width;
    rem /= width;
  }
  RK_CHECK(rem == 0, "index outside box");
  return p;
}

Box Box::interval(const Int& lo, const Int& hi) {
  Box b;
  b.range.emplace_back(lo, hi);
  b.validate();
  return b;
}

void Coloring::validate() const {
  domain.validate();
  RK_CHECK(r >= 1 && r <= 255, "color count out of range");
  RK_CHECK(color.size() == domain.volume(), "color buffer size mismatch");
  for (uint8_t c : color) RK_CHECK(c < r, "color value out of range");
}

Coloring Coloring::constant(const Box& b, int r, int value) {
  RK_CHECK(value >= 0 && value < r, "constant color out of range");
  Coloring c;
  c.domain = b;
  c.r = r;
  c.color.assign(b.volume(), static_cast<uint8_t>(value));
  return c;
}

Coloring Coloring::parity(const Box& b, int r) {
  Coloring c;
  c.domain = b;
  c.r = r;
  size_t n = b.volume();
  c.color.resize(n);
  for (size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (const Int& x : b.point(i)) s += x;
    Int m = s % r;
    if (m < 0) m += r;
    c.color[i] = static_cast<uint8_t>(m.get_ui());
  }
  return c;
}

Coloring Coloring::random(const Box& b, int r, uint64_t seed) {
  Coloring c;
  c.domain = b;
  c.r = r;
  size_t n = b.volume();
  c.color.resize(n);
  // mt19937_64 with plain modulo keeps the stream identical across platforms;
  // the slight modulo bias is irrelevant for test colorings
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < n; ++i)
    c.color[i] = static_cast<uint8_t>(rng() % static_cast<uint64_t>(r));
  return c;
}

Coloring Coloring::from_values(const Box& b, int r, std::vector<uint8_t> values) {
  Coloring c;
  c.domain = b;
  c.r = r;
  c.color = std::move(values);
  c.validate();
  return c;
}

std::string Coloring::rle() const {
  std::string out;
  size_t i = 0;
  while (i < color.size()) {
    size_t j = i;
    while (j < color.size() && color[j] == color[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(j - i) + 'x' + std::to_string(static_cast<int>(color[i]));
    i = j;
  }
  return out;
}

Coloring Coloring::from_rle(const Box& b, int r, const std::string& rle) {
  std::vector<uint8_t> values;
  size_t pos = 0;
  while (pos < rle.size()) {
    size_t x = rle.find('x', pos);
    RK_CHECK(x != std::string::npos, "bad rle run: missing x");
    size_t end = rle.find(',', x);
    if (end == std::string::npos) end = rle.size();
    size_t count = 0, col = 0;
    try {
      count = std::stoul(rle.substr(pos, x - pos));
      col = std::stoul(rle.substr(x + 1, end - x - 1));
    } catch (const std::exception&) {
      throw RamseyError("bad rle run: not a number");
    }
    RK_CHECK(count > 0, "bad rle run: zero count");
    RK_CHECK(col < static_cast<size_t>(r), "rle color out of range");
    values.insert(values.end(), count, static_cast<uint8_t>(col));
    pos = end + (end < rle.size() ? 1 : 0);
  }
  return from_values(b, r, std::move(values));
}

}  // namespace ramsey
