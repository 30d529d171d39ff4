#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/shape.hpp"

namespace ramsey {

struct SearchBudget {
  uint64_t max_nodes = 50'000'000;
  double max_seconds = 55.0;
  int threads = 1;
  // optional per-coordinate bounds for seed entries; when absent, bounds are
  // derived from the coloring domain (find_mono) or the interval (config
  // enumeration fallback)
  std::optional<Box> seed_box;
};

struct SearchStats {
  uint64_t nodes = 0;
  bool node_limit_hit = false;
  bool time_limit_hit = false;
  double seconds = 0.0;
};

// full line mask 0..m
std::vector<int> all_lines(const Shape& shape);

struct MonoWitness {
  SeedVector seed;
  int color = 0;
};

// Scans seeds in ascending max-norm shells (each shell in lexicographic
// order), pruning as soon as a masked line leaves the domain or mixes colors.
// Deterministic: the returned witness is the first in scan order. A nullopt
// return means no witness within the scanned range and budget, not a proof of
// absence.
std::optional<MonoWitness> find_mono(const Shape& shape, const std::vector<int>& line_mask,
                                     const Coloring& coloring, const SearchBudget& budget,
                                     SearchStats* stats = nullptr);

// One generated configuration, kept with a seed that produces it.
struct EnumeratedConfig {
  std::vector<long> points;  // sorted, deduplicated, 1-based positions
  SeedVector seed;
};

struct ConfigEnumeration {
  std::vector<EnumeratedConfig> configs;
  // true when interval propagation bounded every seed coordinate, so the list
  // provably contains all configurations inside [1, n]
  bool complete = false;
  SearchStats stats;
};

// All masked configurations of a d=1 shape with homomorphism families that
// land inside [1, n]. Seed coordinates are eliminated greedily: a coordinate
// whose value is pinned to an interval by some fully-determined line term is
// enumerated exactly; leftovers (non-triangular shapes) fall back to the
// budget seed box or [-n, n] and clear the complete flag.
ConfigEnumeration enumerate_configs(const Shape& shape, const std::vector<int>& line_mask,
                                    long n, const SearchBudget& budget);

// Decides whether some r-coloring of {0..universe-1} leaves every config
// non-monochromatic. Returns such a coloring (lexicographically least under
// canonical color introduction) or nullopt when every coloring contains a
// monochromatic config. Exact within budget; throws on budget exhaustion.
std::optional<std::vector<uint8_t>> find_bad_coloring(size_t universe,
                                                      const std::vector<std::vector<int>>& configs,
                                                      int r, const SearchBudget& budget,
                                                      SearchStats* stats = nullptr);

struct PartitionResult {
  std::optional<long> n;  // least N such that every r-coloring of [1,N] works
  // config enumeration was provably complete at every N tried
  bool exhaustive = false;
  std::optional<Coloring> bad_below;  // bad coloring at n-1 (absent when n == 1)
  SearchStats stats;
};

// Least N <= max_n such that every r-coloring of [1, N] admits a
// monochromatic masked configuration. n is nullopt when max_n is not enough.
PartitionResult min_partition_number(const Shape& shape, const std::vector<int>& line_mask, int r,
                                     long max_n, const SearchBudget& budget);

// Self-contained replayable search result.
struct Certificate {
  std::string kind;  // mono-witness | bad-coloring | minimal-n
  std::string engine_version;
  Shape shape;
  std::vector<int> line_mask;
  int colors = 2;
  std::string proof_mode;  // exhaustive | assumed
  std::optional<SeedVector> seed;             // mono-witness
  std::optional<int> witness_color;           // mono-witness
  std::optional<Coloring> coloring;           // mono-witness target / bad coloring
  std::optional<long> minimal_n;              // minimal-n
  std::optional<Coloring> coloring_below;     // minimal-n, bad coloring at n-1
};

Certificate make_mono_certificate(const Shape& shape, const std::vector<int>& line_mask,
                                  const Coloring& coloring, const MonoWitness& witness);
Certificate make_bad_certificate(const Shape& shape, const std::vector<int>& line_mask,
                                 const Coloring& coloring, bool exhaustive);
Certificate make_minimal_n_certificate(const Shape& shape, const std::vector<int>& line_mask,
                                       int colors, const PartitionResult& result);

// Replays the claim from scratch. mono-witness regenerates the configuration
// and rechecks containment and color; bad-coloring re-enumerates configs and
// checks none is monochromatic; minimal-n redecides at n and at n-1.
bool verify_certificate(const Certificate& cert, const SearchBudget& budget,
                        std::string* why = nullptr);

}  // namespace ramsey
