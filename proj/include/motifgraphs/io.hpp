#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motifgraphs/degree.hpp"
#include "motifgraphs/ising.hpp"
#include "motifgraphs/sampling.hpp"
#include "motifgraphs/structure.hpp"
#include "motifgraphs/topology.hpp"

// Document assembly for the CLI: every serializer is a pure function of its
// inputs and produces byte-stable output (sorted JSON keys, shortest
// round-trip doubles), so identical runs write identical files.
namespace motifgraphs {

// Shortest decimal string that round-trips the value (std::to_chars).
std::string fmt_double(double v);

constexpr int schema_version = 1;

std::string graph_json(const GraphTopology& g);

// Ensemble export: one edge list per realization, edges tagged basic/decoration.
std::string sample_json(const GraphTopology& g, double p, std::uint64_t seed, int samples);
std::string sample_csv(const GraphTopology& g, double p, std::uint64_t seed, int samples);

std::string fit_json(const FitReport& r);
std::string fit_csv(const FitReport& r);  // header: degree,empirical_prob,model_prob

// Per-level series for one motif: row k covers the realization sampled on the
// level-k graph with seed mix64(seed, k).
struct StructureRow {
  int k = 0;
  double q = 0.0;  // mean local clustering
  std::uint32_t diam = 0;
  double boundary_ratio = 0.0;
};
std::vector<StructureRow> structure_series(MotifId motif, int k_max, double p,
                                           std::uint64_t seed);
std::string structure_json(MotifId motif, double p, std::uint64_t seed,
                           const std::vector<StructureRow>& rows);
std::string structure_csv(const std::vector<StructureRow>& rows);  // k,Q_k,diam,boundary_ratio

std::string trajectory_json(const IsingTrajectory& traj);
std::string trajectory_csv(const IsingTrajectory& traj);

// One classified grid point; optional fields are empty when the map has no
// finite fixed points (t > 9/5) or no transition (t <= 1).
struct PhaseRow {
  double L = 0.0, p = 0.0, K = 0.0;
  double t = 0.0;
  double x1 = 0.0;
  std::optional<double> x_star1, x_star2, K_star;
  PhaseLabel verdict = PhaseLabel::Unordered;
};
PhaseRow make_phase_row(const IsingParams& params);

std::string phase_json(const std::vector<PhaseRow>& rows);
std::string phase_csv(const std::vector<PhaseRow>& rows);  // L,p,K,t,x1,x_star1,x_star2,K_star,verdict

// Writes via a sibling temp file and rename, so readers never see partial
// content. Creates parent directories as needed.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace motifgraphs
