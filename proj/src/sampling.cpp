#include "motifgraphs/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace motifgraphs {

std::uint64_t DecorationRealization::active_count() const {
  return static_cast<std::uint64_t>(std::count(active.begin(), active.end(), true));
}

DecorationRealization sample_decorations(const GraphTopology& g, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  DecorationRealization out;
  out.p = p;
  out.seed = seed;
  out.active.resize(g.slots.size());
  for (std::size_t i = 0; i < g.slots.size(); ++i)
    out.active[i] = unit_from_hash(mix64(seed, i)) < p;
  return out;
}

std::vector<DecorationRealization> sample_ensemble(const GraphTopology& g, double p,
                                                   std::uint64_t base_seed, int n) {
  if (n < 0) throw std::invalid_argument("ensemble size must be >= 0");
  std::vector<DecorationRealization> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(sample_decorations(g, p, mix64(base_seed, static_cast<std::uint64_t>(i))));
  return out;
}

std::vector<std::vector<std::uint32_t>> adjacency_lists(const GraphTopology& g,
                                                        const DecorationRealization* realization) {
  std::vector<std::vector<std::uint32_t>> adj(g.nodes.size());
  for (auto [u, v] : g.basic_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (realization) {
    if (realization->active.size() != g.slots.size())
      throw std::invalid_argument("realization does not match topology");
    for (std::size_t i = 0; i < g.slots.size(); ++i)
      if (realization->active[i]) {
        adj[g.slots[i].u].push_back(g.slots[i].v);
        adj[g.slots[i].v].push_back(g.slots[i].u);
      }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace motifgraphs
