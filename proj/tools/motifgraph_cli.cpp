#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "motifgraphs/degree.hpp"
#include "motifgraphs/io.hpp"
#include "motifgraphs/ising.hpp"
#include "motifgraphs/motif.hpp"
#include "motifgraphs/parallel.hpp"
#include "motifgraphs/sampling.hpp"
#include "motifgraphs/topology.hpp"
#include "motifgraphs/verification.hpp"

namespace {

using namespace motifgraphs;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file_atomic(out_path, content);
}

std::string graph_csv(const GraphTopology& g) {
  std::string out = "kind,u,v,creation_level\n";
  for (const auto& e : g.basic_edges)
    out += "basic," + std::to_string(e.first) + "," + std::to_string(e.second) + ",\n";
  for (const auto& s : g.slots)
    out += "slot," + std::to_string(s.u) + "," + std::to_string(s.v) + "," +
           std::to_string(s.creation_level) + "\n";
  return out;
}

std::vector<double> grid_axis(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) throw std::invalid_argument("grid max must be >= min");
  std::vector<double> values;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  values.reserve(n + 1);
  for (int i = 0; i <= n; ++i) values.push_back(lo + i * step);
  return values;
}

int run_verify() {
  const auto lines = run_verification();
  int passed = 0;
  for (const auto& line : lines) {
    passed += line.pass;
    std::cout << (line.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << line.suite
              << " " << line.detail << "\n";
  }
  std::cout << passed << "/" << lines.size() << " suites passed\n";
  return passed == static_cast<int>(lines.size()) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hierarchical motif graph toolkit: construction, sampling, degree and "
               "structure analytics, annealed spin renormalization"};
  app.require_subcommand(1);

  std::string motif_name = "m1";
  int k = 1;
  double p = 0.5;
  std::uint64_t seed = 42;
  int samples = 100;
  double K = 0.0, L = 0.0;
  std::vector<double> y1;
  std::string format = "json";
  std::string out_path;
  double k_lo = 0, k_hi = 0, k_step = 1;
  double l_lo = 0, l_hi = 0, l_step = 1;
  double p_lo = 0.5, p_hi = 0.5, p_step = 1;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "output file (stdout when omitted)");
  };
  const auto add_motif_k = [&](CLI::App* cmd) {
    cmd->add_option("--motif", motif_name, "motif id, m1..m5")->required();
    cmd->add_option("--k", k, "hierarchy level")->required()->check(CLI::Range(1, 64));
  };
  const auto add_p = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "decoration probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  };

  CLI::App* build = app.add_subcommand("build", "construct a graph and export its topology");
  add_motif_k(build);
  add_format(build);

  CLI::App* sample = app.add_subcommand("sample", "sample decorated realizations as edge lists");
  add_motif_k(sample);
  add_p(sample);
  sample->add_option("--seed", seed, "master seed")->capture_default_str();
  sample->add_option("--samples", samples, "realization count")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  add_format(sample);

  CLI::App* degree_stats =
      app.add_subcommand("degree-stats", "empirical degree statistics against the mixture model");
  add_motif_k(degree_stats);
  add_p(degree_stats);
  degree_stats->add_option("--seed", seed, "master seed")->capture_default_str();
  degree_stats->add_option("--samples", samples, "realization count")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  add_format(degree_stats);

  CLI::App* structure =
      app.add_subcommand("structure", "clustering, diameter, boundary share for levels 1..k");
  add_motif_k(structure);
  add_p(structure);
  structure->add_option("--seed", seed, "master seed")->capture_default_str();
  add_format(structure);

  CLI::App* iterate = app.add_subcommand(
      "ising-iterate", "run the coupling map and observable transfer recursion");
  iterate->add_option("--K", K, "basic bond coupling")->required();
  iterate->add_option("--L", L, "decoration bond coupling")->required();
  add_p(iterate);
  int iter_k = 100;
  iterate->add_option("--k", iter_k, "iteration count")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  iterate
      ->add_option("--y1", y1,
                   "initial observable 3-vector by boundary sector (default 3.5 2.5 1.5)")
      ->expected(3);
  add_format(iterate);

  CLI::App* phase = app.add_subcommand("ising-phase", "classify one parameter point");
  phase->add_option("--K", K, "basic bond coupling")->required();
  phase->add_option("--L", L, "decoration bond coupling")->required();
  add_p(phase);
  add_format(phase);

  CLI::App* diagram = app.add_subcommand("phase-diagram", "classify a parameter grid");
  diagram->add_option("--K-min", k_lo, "")->required();
  diagram->add_option("--K-max", k_hi, "")->required();
  diagram->add_option("--K-step", k_step, "")->capture_default_str();
  diagram->add_option("--L-min", l_lo, "")->required();
  diagram->add_option("--L-max", l_hi, "")->required();
  diagram->add_option("--L-step", l_step, "")->capture_default_str();
  diagram->add_option("--p-min", p_lo, "")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  diagram->add_option("--p-max", p_hi, "")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  diagram->add_option("--p-step", p_step, "")->capture_default_str();
  add_format(diagram);

  CLI::App* verify = app.add_subcommand("verify", "run the oracle comparison suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (build->parsed()) {
      const GraphTopology g = build_topology(motif_from_string(motif_name), k);
      emit(format == "json" ? graph_json(g) : graph_csv(g), out_path);
    } else if (sample->parsed()) {
      const GraphTopology g = build_topology(motif_from_string(motif_name), k);
      emit(format == "json" ? sample_json(g, p, seed, samples) : sample_csv(g, p, seed, samples),
           out_path);
    } else if (degree_stats->parsed()) {
      const GraphTopology g = build_topology(motif_from_string(motif_name), k);
      const FitReport report = degree_fit(g, p, samples, seed);
      emit(format == "json" ? fit_json(report) : fit_csv(report), out_path);
    } else if (structure->parsed()) {
      const MotifId motif = motif_from_string(motif_name);
      const auto rows = structure_series(motif, k, p, seed);
      emit(format == "json" ? structure_json(motif, p, seed, rows) : structure_csv(rows),
           out_path);
    } else if (iterate->parsed()) {
      const IsingParams params{K, L, p};
      const Vec3 start =
          y1.empty() ? Vec3{3.5, 2.5, 1.5} : Vec3{y1[0], y1[1], y1[2]};
      const IsingTrajectory traj = evolve_y(params, start, iter_k);
      emit(format == "json" ? trajectory_json(traj) : trajectory_csv(traj), out_path);
    } else if (phase->parsed()) {
      const PhaseRow row = make_phase_row({K, L, p});
      std::cerr << "verdict=" << to_string(row.verdict)
                << " K_star=" << (row.K_star ? fmt_double(*row.K_star) : "none") << "\n";
      const std::vector<PhaseRow> rows{row};
      emit(format == "json" ? phase_json(rows) : phase_csv(rows), out_path);
    } else if (diagram->parsed()) {
      const auto ls = grid_axis(l_lo, l_hi, l_step);
      const auto ps = grid_axis(p_lo, p_hi, p_step);
      const auto ks = grid_axis(k_lo, k_hi, k_step);
      const std::size_t total = ls.size() * ps.size() * ks.size();
      if (total > 2000000) throw std::invalid_argument("grid exceeds 2e6 points");
      std::vector<IsingParams> grid;
      grid.reserve(total);
      for (double lv : ls)
        for (double pv : ps)
          for (double kv : ks) grid.push_back({kv, lv, pv});
      std::vector<PhaseRow> rows(grid.size());
      parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) rows[i] = make_phase_row(grid[i]);
      });
      emit(format == "json" ? phase_json(rows) : phase_csv(rows), out_path);
    } else if (verify->parsed()) {
      return run_verify();
    }
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
