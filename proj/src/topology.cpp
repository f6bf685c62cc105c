#include "motifgraphs/topology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace motifgraphs {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("count overflows 64 bits");
    out *= base;
  }
  return out;
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// One gluing step: q relabeled copies of prev, externals identified pairwise.
GraphTopology glue_step(const MotifSpec& m, const GraphTopology& prev, int level) {
  const int q = m.q;
  const std::size_t n_prev = prev.nodes.size();
  const std::size_t total = n_prev * static_cast<std::size_t>(q);
  const auto prov = [&](int copy, std::uint32_t u) {
    return static_cast<std::uint32_t>(static_cast<std::size_t>(copy - 1) * n_prev + u);
  };

  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  // union by smaller provisional id so roots are deterministic
  const auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };

  std::map<std::uint32_t, std::pair<std::uint8_t, std::uint8_t>> glue_info;
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j) {
      std::uint32_t a = prov(i, prev.external_ids[j - 1]);
      std::uint32_t b = prov(j, prev.external_ids[i - 1]);
      unite(a, b);
      glue_info[find_root(parent, a)] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
    }

  // new externals first (motif order), then remaining roots by provisional id
  constexpr std::uint32_t unassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> new_id(total, unassigned);
  std::vector<std::uint32_t> ext_prov(q);
  std::uint32_t next = 0;
  for (int i = 1; i <= q; ++i) {
    ext_prov[i - 1] = prov(i, prev.external_ids[i - 1]);
    new_id[find_root(parent, ext_prov[i - 1])] = next++;
  }
  for (std::uint32_t u = 0; u < total; ++u) {
    std::uint32_t root = find_root(parent, u);
    if (new_id[root] == unassigned) new_id[root] = next++;
  }
  const auto mapped = [&](int copy, std::uint32_t u) {
    return new_id[find_root(parent, prov(copy, u))];
  };

  GraphTopology g;
  g.motif = prev.motif;
  g.k = level;
  g.nodes.resize(next);
  std::vector<char> done(next, 0);
  for (int i = 1; i <= q; ++i) {
    std::uint32_t id = new_id[find_root(parent, ext_prov[i - 1])];
    g.nodes[id] = NodeRecord{id, static_cast<std::uint16_t>(level), std::nullopt,
                             static_cast<std::uint8_t>(i)};
    g.external_ids.push_back(id);
    done[id] = 1;
  }
  for (std::uint32_t u = 0; u < total; ++u) {
    std::uint32_t root = find_root(parent, u);
    std::uint32_t id = new_id[root];
    if (done[id]) continue;
    done[id] = 1;
    if (auto it = glue_info.find(root); it != glue_info.end()) {
      g.nodes[id] = NodeRecord{id, static_cast<std::uint16_t>(level - 1), it->second, std::nullopt};
    } else {
      const NodeRecord& old = prev.nodes[u % n_prev];
      g.nodes[id] = NodeRecord{id, old.level_class, old.glue_pair, old.external_index};
    }
  }

  g.basic_edges.reserve(prev.basic_edges.size() * q);
  for (int c = 1; c <= q; ++c)
    for (auto [u, v] : prev.basic_edges) {
      std::uint32_t a = mapped(c, u), b = mapped(c, v);
      g.basic_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  g.slots.reserve(prev.slots.size() * q + m.edges.size());
  for (int c = 1; c <= q; ++c)
    for (const SlotRecord& s : prev.slots) {
      std::uint32_t a = mapped(c, s.u), b = mapped(c, s.v);
      g.slots.push_back({std::min(a, b), std::max(a, b), s.creation_level});
    }
  for (auto [i, j] : m.edges) {
    std::uint32_t a = g.external_ids[i - 1], b = g.external_ids[j - 1];
    g.slots.push_back({std::min(a, b), std::max(a, b), static_cast<std::uint16_t>(level)});
  }
  return g;
}

}  // namespace

GraphTopology build_topology(MotifId motif, int k, std::uint64_t node_cap) {
  const MotifSpec& m = get_motif(motif);
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  if (node_count(motif, k) > node_cap)
    throw capacity_error("node count " + std::to_string(node_count(motif, k)) +
                         " exceeds cap " + std::to_string(node_cap));

  GraphTopology g;
  g.motif = motif;
  g.k = 1;
  for (int i = 1; i <= m.q; ++i) {
    g.nodes.push_back(NodeRecord{static_cast<std::uint32_t>(i - 1), 1, std::nullopt,
                                 static_cast<std::uint8_t>(i)});
    g.external_ids.push_back(static_cast<std::uint32_t>(i - 1));
  }
  for (auto [i, j] : m.edges)
    g.basic_edges.emplace_back(static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1));

  for (int level = 2; level <= k; ++level) g = glue_step(m, g, level);
  return g;
}

std::map<int, std::uint64_t> level_partition(const GraphTopology& g) {
  std::map<int, std::uint64_t> out;
  for (const NodeRecord& n : g.nodes) ++out[n.level_class];
  return out;
}

std::uint64_t node_count(MotifId motif, int k) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const std::uint64_t q = get_motif(motif).q;
  return (checked_pow(q, k) + q) / 2;
}

std::uint64_t basic_edge_count(MotifId motif, int k) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const MotifSpec& m = get_motif(motif);
  return m.r * checked_pow(m.q, k - 1);
}

std::uint64_t slot_count(MotifId motif, int k) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const MotifSpec& m = get_motif(motif);
  return m.r * ((checked_pow(m.q, k - 1) - 1) / (m.q - 1));
}

std::uint64_t level_class_size(MotifId motif, int k, int l) {
  if (k < 1 || l < 1 || l > k) throw std::invalid_argument("level class out of range");
  const std::uint64_t q = get_motif(motif).q;
  if (l == k) return q;
  return checked_pow(q, k - l) * (q - 1) / 2;
}

double expected_edge_count(MotifId motif, int k, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  return static_cast<double>(basic_edge_count(motif, k)) +
         p * static_cast<double>(slot_count(motif, k));
}

std::vector<int> basic_degrees(const GraphTopology& g) {
  std::vector<int> deg(g.nodes.size(), 0);
  for (auto [u, v] : g.basic_edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<int> incident_slot_counts(const GraphTopology& g) {
  std::vector<int> cnt(g.nodes.size(), 0);
  for (const SlotRecord& s : g.slots) {
    ++cnt[s.u];
    ++cnt[s.v];
  }
  return cnt;
}

}  // namespace motifgraphs
