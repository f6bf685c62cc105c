#include "motifgraphs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "motifgraphs/motif.hpp"

namespace motifgraphs {

namespace {

struct EnumContext {
  GraphTopology g;
  std::vector<std::uint32_t> internal_ids;
  std::array<std::uint32_t, 3> corner;  // external 1, then its two neighbors (ascending)
};

EnumContext make_context(int k) {
  if (k < 2 || k > 3) throw std::invalid_argument("brute force supports k in {2, 3} only");
  EnumContext ctx{build_topology(MotifId::M1, k), {}, {}};
  const auto& ext = ctx.g.external_ids;
  for (std::uint32_t id = 0; id < ctx.g.nodes.size(); ++id)
    if (std::find(ext.begin(), ext.end(), id) == ext.end()) ctx.internal_ids.push_back(id);

  std::vector<std::uint32_t> nbrs;
  for (const auto& e : ctx.g.basic_edges) {
    if (e.first == ext[0]) nbrs.push_back(e.second);
    if (e.second == ext[0]) nbrs.push_back(e.first);
  }
  std::sort(nbrs.begin(), nbrs.end());
  if (nbrs.size() != 2) throw std::logic_error("corner node must have exactly two basic neighbors");
  ctx.corner = {ext[0], nbrs[0], nbrs[1]};
  return ctx;
}

// Runs fn(weight, spins) over all internal spin assignments with the boundary fixed.
template <typename Fn>
void enumerate(const EnumContext& ctx, const IsingParams& params, const BoundarySpins& boundary,
               Fn&& fn) {
  const std::size_t m = ctx.internal_ids.size();
  std::vector<int> spin(ctx.g.nodes.size(), 0);
  spin[ctx.g.external_ids[0]] = boundary.a;
  spin[ctx.g.external_ids[1]] = boundary.b;
  spin[ctx.g.external_ids[2]] = boundary.c;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t i = 0; i < m; ++i) spin[ctx.internal_ids[i]] = (mask >> i) & 1 ? 1 : -1;
    double w = 1.0;
    for (const auto& e : ctx.g.basic_edges) w *= std::exp(params.K * spin[e.first] * spin[e.second]);
    for (const auto& s : ctx.g.slots)
      w *= params.p * std::exp(params.L * spin[s.u] * spin[s.v]) + 1.0 - params.p;
    fn(w, spin);
  }
}

void check_annealed_params(const IsingParams& params) {
  if (!std::isfinite(params.K) || !std::isfinite(params.L))
    throw std::invalid_argument("couplings must be finite");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
}

}  // namespace

double brute_force_partition(const IsingParams& params, int k, const BoundarySpins& boundary) {
  check_annealed_params(params);
  const EnumContext ctx = make_context(k);
  double z = 0.0;
  enumerate(ctx, params, boundary, [&](double w, const std::vector<int>&) { z += w; });
  return z;
}

double brute_force_observable(const IsingParams& params, int k, const SpinObservable& f,
                              const BoundarySpins& boundary) {
  check_annealed_params(params);
  const EnumContext ctx = make_context(k);
  double z = 0.0, acc = 0.0;
  enumerate(ctx, params, boundary, [&](double w, const std::vector<int>& spin) {
    z += w;
    acc += w * f(spin[ctx.corner[0]], spin[ctx.corner[1]], spin[ctx.corner[2]]);
  });
  return acc / z;
}

std::map<int, double> brute_force_degree_law(const GraphTopology& g, std::uint32_t node, double p) {
  if (node >= g.nodes.size()) throw std::invalid_argument("node id out of range");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
  int base = 0;
  for (const auto& e : g.basic_edges) base += (e.first == node) + (e.second == node);
  int slots = 0;
  for (const auto& s : g.slots) slots += (s.u == node) + (s.v == node);
  if (slots > 20) throw std::invalid_argument("node has more than 20 incident slots");

  std::map<int, double> law;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
    const int active = std::popcount(mask);
    law[base + active] += std::pow(p, active) * std::pow(1.0 - p, slots - active);
  }
  return law;
}

}  // namespace motifgraphs
