#pragma once

#include "motifgraphs/topology.hpp"

#include <cstdint>
#include <vector>

namespace motifgraphs {

// splitmix64-style finalizer over a two-word combine; the per-slot coin is
// a pure function of (seed, slot index), so realizations are reproducible
// independent of evaluation order or thread count.
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits.
inline double unit_from_hash(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct DecorationRealization {
  double p = 0.0;
  std::uint64_t seed = 0;
  std::vector<bool> active;  // parallel to GraphTopology::slots

  std::uint64_t active_count() const;
};

// Independent Bernoulli(p) per slot, keyed by (seed, slot index).
DecorationRealization sample_decorations(const GraphTopology& g, double p, std::uint64_t seed);

// n realizations with per-sample seeds mix64(base_seed, sample index).
std::vector<DecorationRealization> sample_ensemble(const GraphTopology& g, double p,
                                                   std::uint64_t base_seed, int n);

// Sorted adjacency lists over basic bonds plus (if given) active decorations.
std::vector<std::vector<std::uint32_t>> adjacency_lists(
    const GraphTopology& g, const DecorationRealization* realization = nullptr);

}  // namespace motifgraphs
