#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "motifgraphs/ising.hpp"
#include "motifgraphs/topology.hpp"

// Exhaustive-enumeration ground truth for the recursion engine and the degree
// model, tractable only on small instances. Nothing here shares code paths
// with the implementations it checks.
namespace motifgraphs {

// Spins on the three external nodes of the triangle hierarchy.
struct BoundarySpins {
  int a = 1;
  int b = 1;
  int c = 1;
};

// Observable on the spins of the corner triangle (external 1 and its two
// neighbors along basic edges). Must be symmetric in the last two arguments
// for boundary-sector bookkeeping to be well defined.
using SpinObservable = std::function<double(int, int, int)>;

// Annealed partition function of the level-k triangle graph with fixed
// boundary spins: sum over all internal spin assignments of
//   prod_basic exp(K s_u s_v) * prod_slot (p exp(L s_u s_v) + 1 - p).
// The per-slot factor is the exact expectation over the independent on/off
// bond variable, so no subset enumeration is needed. Supports k in {2, 3}.
double brute_force_partition(const IsingParams& params, int k, const BoundarySpins& boundary);

// Expectation of f at the corner triangle under the same weight, normalized
// by the partition function. First argument of f is the spin at external 1.
double brute_force_observable(const IsingParams& params, int k, const SpinObservable& f,
                              const BoundarySpins& boundary);

// Exact degree law of one node, enumerating every on/off pattern of its
// incident decoration slots. Requires at most 20 incident slots.
std::map<int, double> brute_force_degree_law(const GraphTopology& g, std::uint32_t node, double p);

}  // namespace motifgraphs
