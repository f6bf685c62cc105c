#pragma once

#include "motifgraphs/sampling.hpp"
#include "motifgraphs/topology.hpp"

#include <cstdint>
#include <map>

namespace motifgraphs {

struct StructureReport {
  double clustering_avg = 0.0;
  std::map<int, double> per_level_clustering;  // level class -> mean local coefficient
  std::uint32_t diameter = 0;
  double boundary_ratio = 0.0;
};

// Mean local clustering coefficient 2 N(i) / (n(i) (n(i) - 1)) over all nodes
// (0 for degree < 2), on basic bonds plus active decorations.
double clustering_average(const GraphTopology& g, const DecorationRealization& real);
std::map<int, double> clustering_per_level(const GraphTopology& g,
                                           const DecorationRealization& real);

// Exact diameter by BFS from every node (parallel over sources).
std::uint32_t diameter(const GraphTopology& g, const DecorationRealization& real);

// (k (q-1)^2 + (q-1)(k+2)) / ((q^k + q) / 2): external-plus-frontier share of
// the node count, vanishing as k grows.
double boundary_ratio_closed(MotifId motif, int k);

// Finite-k closed forms for the triangle graph, k >= 2 bare / k >= 1 decorated.
double clustering_m1_bare_closed(int k);
double clustering_m1_decorated_closed(int k);
// Partial sum of the reference series 4 * sum_{l=1}^{terms} 3^{-l} / (4l - 1).
// Note: clustering_m1_decorated_closed converges to a slightly larger value;
// this series is kept as a comparison target.
double clustering_m1_decorated_limit(int terms);

StructureReport structure_report(const GraphTopology& g, const DecorationRealization& real);

}  // namespace motifgraphs
