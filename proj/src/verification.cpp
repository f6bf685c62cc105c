#include "motifgraphs/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "motifgraphs/degree.hpp"
#include "motifgraphs/ising.hpp"
#include "motifgraphs/motif.hpp"
#include "motifgraphs/oracle.hpp"
#include "motifgraphs/sampling.hpp"
#include "motifgraphs/topology.hpp"

namespace motifgraphs {

namespace {

struct Draw {
  double K, L, p;
};

// Deterministic parameter draws: couplings from the counter hash in
// [-1.5, 1.5], p cycling a fixed set including both degenerate endpoints.
std::vector<Draw> parameter_draws(int n, std::uint64_t salt) {
  static constexpr double ps[4] = {0.0, 0.3, 0.7, 1.0};
  std::vector<Draw> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back({-1.5 + 3.0 * unit_from_hash(mix64(salt, 2 * i)),
                   -1.5 + 3.0 * unit_from_hash(mix64(salt, 2 * i + 1)), ps[i % 4]});
  return out;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

VerificationLine partition_vs_recursion() {
  double worst = 0.0;
  for (const Draw& d : parameter_draws(20, 1001)) {
    const IsingParams params{d.K, d.L, d.p};
    const ABTrajectory ab = recursion_ab(params, 3);
    for (int k = 2; k <= 3; ++k) {
      const double a = brute_force_partition(params, k, {1, 1, 1});
      const double b = brute_force_partition(params, k, {1, 1, -1});
      worst = std::max(worst, rel_err(std::exp(ab.log_a[k - 1]), a));
      worst = std::max(worst, rel_err(std::exp(ab.log_b[k - 1]), b));
    }
  }
  return {"partition_vs_recursion", worst <= 1e-10,
          "worst rel err " + fmt(worst) + " over 20 draws, k in {2,3}"};
}

VerificationLine observable_vs_transfer() {
  const auto f = [](int a, int b, int c) { return 2.0 + a + 0.5 * b * c; };
  const Vec3 y1{f(1, 1, 1), f(1, 1, -1), f(1, -1, -1)};
  double worst = 0.0;
  for (const Draw& d : parameter_draws(10, 2002)) {
    const IsingParams params{d.K, d.L, d.p};
    const IsingTrajectory traj = evolve_y(params, y1, 2);
    for (int k = 2; k <= 3; ++k) {
      const Vec3 want{brute_force_observable(params, k, f, {1, 1, 1}),
                      brute_force_observable(params, k, f, {1, 1, -1}),
                      brute_force_observable(params, k, f, {1, -1, -1})};
      for (int i = 0; i < 3; ++i) worst = std::max(worst, rel_err(traj.y[k - 1][i], want[i]));
    }
  }
  return {"observable_vs_transfer", worst <= 1e-10,
          "worst rel err " + fmt(worst) + " over 10 draws, k in {2,3}"};
}

VerificationLine boundary_symmetry() {
  double worst = 0.0;
  for (const Draw& d : parameter_draws(6, 3003)) {
    const IsingParams params{d.K, d.L, d.p};
    for (int k = 2; k <= 3; ++k) {
      const double mixed = brute_force_partition(params, k, {1, 1, -1});
      worst = std::max(worst, rel_err(brute_force_partition(params, k, {1, -1, 1}), mixed));
      worst = std::max(worst, rel_err(brute_force_partition(params, k, {-1, 1, 1}), mixed));
      worst = std::max(worst, rel_err(brute_force_partition(params, k, {1, -1, -1}), mixed));
      worst = std::max(worst, rel_err(brute_force_partition(params, k, {-1, -1, -1}),
                                      brute_force_partition(params, k, {1, 1, 1})));
    }
  }
  return {"boundary_symmetry", worst <= 1e-12,
          "worst rel err " + fmt(worst) + " across relabelings and global flips"};
}

// The corrected three-term update must match the oracle, and the defective
// variant (missing one B factor on the leading term) must visibly not.
VerificationLine defective_update_control() {
  const IsingParams params{0.5, 0.3, 0.5};
  const double a1 = std::exp(3.0 * params.K), b1 = std::exp(-params.K);
  const double rm = r_minus(params.L, params.p);
  const double corrected = rm * (a1 * a1 * b1 + 4.0 * a1 * b1 * b1 + 3.0 * b1 * b1 * b1);
  const double defective = rm * (a1 * a1 + 4.0 * a1 * b1 * b1 + 3.0 * b1 * b1 * b1);
  const double oracle = brute_force_partition(params, 2, {1, 1, -1});
  const bool pass = rel_err(corrected, oracle) <= 1e-10 && rel_err(defective, oracle) > 0.10;
  return {"defective_update_control", pass,
          "corrected err " + fmt(rel_err(corrected, oracle)) + ", defective err " +
              fmt(rel_err(defective, oracle)) + " (must exceed 0.1)"};
}

VerificationLine degree_law_vs_mixture() {
  const double p = 0.37;
  double worst = 0.0;
  std::string failure;
  for (MotifId motif : {MotifId::M1, MotifId::M2, MotifId::M3, MotifId::M4, MotifId::M5}) {
    const GraphTopology g = build_topology(motif, 3);
    const DegreeMixture mix = mixture_model(motif, 3, p);
    const std::vector<int> bases = basic_degrees(g);
    const std::vector<int> slot_counts = incident_slot_counts(g);

    std::map<int, double> aggregate;
    for (std::uint32_t node = 0; node < g.nodes.size(); ++node) {
      bool represented = false;
      for (const auto& comp : mix.components)
        represented |= comp.base == bases[node] && comp.slots == slot_counts[node];
      if (!represented && failure.empty())
        failure = "node " + std::to_string(node) + " of " + to_string(motif) +
                  " has no mixture component";
      for (const auto& [deg, prob] : brute_force_degree_law(g, node, p))
        aggregate[deg] += prob / static_cast<double>(g.nodes.size());
    }
    for (const auto& [deg, prob] : aggregate)
      worst = std::max(worst, std::abs(prob - mix.pmf(deg)));
  }
  const bool pass = failure.empty() && worst <= 1e-12;
  return {"degree_law_vs_mixture", pass,
          failure.empty() ? "worst abs pmf gap " + fmt(worst) + " across all motifs, k=3"
                          : failure};
}

}  // namespace

std::vector<VerificationLine> run_verification() {
  return {partition_vs_recursion(), observable_vs_transfer(), boundary_symmetry(),
          defective_update_control(), degree_law_vs_mixture()};
}

}  // namespace motifgraphs
