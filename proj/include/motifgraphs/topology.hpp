#pragma once

#include "motifgraphs/motif.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace motifgraphs {

// Hard cap on node count for a single build.
inline constexpr std::uint64_t default_node_cap = std::uint64_t{1} << 22;

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NodeRecord {
  std::uint32_t id = 0;
  // Level at which the node appeared as an external node; external nodes of the
  // finished graph carry level_class == k.
  std::uint16_t level_class = 0;
  // Exactly one of the two is set: glued (internal) nodes carry the motif index
  // pair (i, j), i < j, of the two copies merged at them; external nodes carry
  // their motif index.
  std::optional<std::pair<std::uint8_t, std::uint8_t>> glue_pair;
  std::optional<std::uint8_t> external_index;
};

struct SlotRecord {
  std::uint32_t u = 0, v = 0;   // endpoints, u < v
  std::uint16_t creation_level = 0;  // 2..k
};

// Deterministic level-k hierarchical graph: basic bonds plus decoration slots.
struct GraphTopology {
  MotifId motif = MotifId::M1;
  int k = 0;
  std::vector<NodeRecord> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> basic_edges;
  std::vector<SlotRecord> slots;
  std::vector<std::uint32_t> external_ids;  // external_ids[i-1] = node id of motif index i
};

// Builds level k from q copies of level k-1: external node j of copy i is
// identified with external node i of copy j; the surviving externals (node i of
// copy i) get the smallest ids. Throws capacity_error if the node count would
// exceed node_cap.
GraphTopology build_topology(MotifId motif, int k, std::uint64_t node_cap = default_node_cap);

std::map<int, std::uint64_t> level_partition(const GraphTopology& g);

// Closed-form counts.
std::uint64_t node_count(MotifId motif, int k);        // (q^k + q) / 2
std::uint64_t basic_edge_count(MotifId motif, int k);  // r q^{k-1}
std::uint64_t slot_count(MotifId motif, int k);        // r (q^{k-1} - 1) / (q - 1)
std::uint64_t level_class_size(MotifId motif, int k, int l);

// r q^{k-1} + p * r (q^{k-1} - 1) / (q - 1)
double expected_edge_count(MotifId motif, int k, double p);

// Per-node degree over basic bonds only.
std::vector<int> basic_degrees(const GraphTopology& g);
// Per-node number of incident decoration slots.
std::vector<int> incident_slot_counts(const GraphTopology& g);

}  // namespace motifgraphs
