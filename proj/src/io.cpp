#include "motifgraphs/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "motifgraphs/motif.hpp"

namespace motifgraphs {

namespace {

using nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string{};
}

}  // namespace

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string graph_json(const GraphTopology& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes)
    nodes.push_back({{"id", n.id},
                     {"level_class", n.level_class},
                     {"external", n.external_index.has_value()}});
  json edges = json::array();
  for (const auto& e : g.basic_edges) edges.push_back({e.first, e.second});
  json slots = json::array();
  for (const auto& s : g.slots)
    slots.push_back({{"u", s.u}, {"v", s.v}, {"creation_level", s.creation_level}});
  return dump({{"schema_version", schema_version},
               {"motif", to_string(g.motif)},
               {"k", g.k},
               {"nodes", nodes},
               {"basic_edges", edges},
               {"slots", slots}});
}

std::string sample_json(const GraphTopology& g, double p, std::uint64_t seed, int samples) {
  json reals = json::array();
  for (const auto& real : sample_ensemble(g, p, seed, samples)) {
    json edges = json::array();
    for (const auto& e : g.basic_edges) edges.push_back({{"kind", "basic"}, {"u", e.first}, {"v", e.second}});
    for (std::size_t i = 0; i < g.slots.size(); ++i)
      if (real.active[i])
        edges.push_back({{"kind", "decoration"}, {"u", g.slots[i].u}, {"v", g.slots[i].v}});
    reals.push_back({{"index", reals.size()},
                     {"seed", real.seed},
                     {"active_slots", real.active_count()},
                     {"edges", edges}});
  }
  return dump({{"schema_version", schema_version},
               {"motif", to_string(g.motif)},
               {"k", g.k},
               {"p", p},
               {"seed", seed},
               {"samples", samples},
               {"realizations", reals}});
}

std::string sample_csv(const GraphTopology& g, double p, std::uint64_t seed, int samples) {
  std::string out = "sample,kind,u,v\n";
  const auto ensemble = sample_ensemble(g, p, seed, samples);
  for (int i = 0; i < samples; ++i) {
    const auto& real = ensemble[i];
    const std::string prefix = std::to_string(i);
    for (const auto& e : g.basic_edges)
      out += prefix + ",basic," + std::to_string(e.first) + "," + std::to_string(e.second) + "\n";
    for (std::size_t s = 0; s < g.slots.size(); ++s)
      if (real.active[s])
        out += prefix + ",decoration," + std::to_string(g.slots[s].u) + "," +
               std::to_string(g.slots[s].v) + "\n";
  }
  return out;
}

std::string fit_json(const FitReport& r) {
  json hist = json::array();
  std::map<int, std::pair<double, double>> merged;
  for (const auto& [d, v] : r.empirical) merged[d].first = v;
  for (const auto& [d, v] : r.model) merged[d].second = v;
  for (const auto& [d, pair] : merged)
    hist.push_back({{"degree", d}, {"empirical_prob", pair.first}, {"model_prob", pair.second}});
  json char_fn = json::array();
  for (std::size_t i = 0; i < r.char_t.size(); ++i)
    char_fn.push_back({{"t", r.char_t[i]},
                       {"empirical_re", r.char_empirical[i].real()},
                       {"empirical_im", r.char_empirical[i].imag()},
                       {"model_re", r.char_model[i].real()},
                       {"model_im", r.char_model[i].imag()}});
  return dump({{"schema_version", schema_version},
               {"motif", to_string(r.motif)},
               {"k", r.k},
               {"p", r.p},
               {"samples", r.samples},
               {"seed", r.seed},
               {"histogram", hist},
               {"char_fn", char_fn},
               {"tv_distance", r.tv_distance},
               {"empirical_mean", r.empirical_mean},
               {"empirical_se", r.empirical_se},
               {"closed_mean", r.closed_mean}});
}

std::string fit_csv(const FitReport& r) {
  std::map<int, std::pair<double, double>> merged;
  for (const auto& [d, v] : r.empirical) merged[d].first = v;
  for (const auto& [d, v] : r.model) merged[d].second = v;
  std::string out = "degree,empirical_prob,model_prob\n";
  for (const auto& [d, pair] : merged)
    out += std::to_string(d) + "," + fmt_double(pair.first) + "," + fmt_double(pair.second) + "\n";
  return out;
}

std::vector<StructureRow> structure_series(MotifId motif, int k_max, double p,
                                           std::uint64_t seed) {
  std::vector<StructureRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    const GraphTopology g = build_topology(motif, k);
    const DecorationRealization real = sample_decorations(g, p, mix64(seed, k));
    rows.push_back({k, clustering_average(g, real), diameter(g, real),
                    boundary_ratio_closed(motif, k)});
  }
  return rows;
}

std::string structure_json(MotifId motif, double p, std::uint64_t seed,
                           const std::vector<StructureRow>& rows) {
  json out_rows = json::array();
  for (const auto& row : rows)
    out_rows.push_back({{"k", row.k},
                        {"Q_k", row.q},
                        {"diam", row.diam},
                        {"boundary_ratio", row.boundary_ratio}});
  return dump({{"schema_version", schema_version},
               {"motif", to_string(motif)},
               {"p", p},
               {"seed", seed},
               {"rows", out_rows}});
}

std::string structure_csv(const std::vector<StructureRow>& rows) {
  std::string out = "k,Q_k,diam,boundary_ratio\n";
  for (const auto& row : rows)
    out += std::to_string(row.k) + "," + fmt_double(row.q) + "," + std::to_string(row.diam) +
           "," + fmt_double(row.boundary_ratio) + "\n";
  return out;
}

std::string trajectory_json(const IsingTrajectory& traj) {
  json y = json::array();
  for (const auto& v : traj.y) y.push_back({v[0], v[1], v[2]});
  return dump({{"schema_version", schema_version},
               {"K", traj.params.K},
               {"L", traj.params.L},
               {"p", traj.params.p},
               {"k_max", traj.x.size()},
               {"x", traj.x},
               {"dobrushin_S", traj.dobrushin_s},
               {"diameter_Y", traj.y_range},
               {"y", y},
               {"diverged", traj.diverged},
               {"verdict", to_string(traj.verdict)}});
}

std::string trajectory_csv(const IsingTrajectory& traj) {
  // Row 0 carries the initial observable spread; row k >= 1 the state after
  // applying T(x_k): x_k, D(S_k), d(Y_{k+1}).
  std::string out = "step,x,dobrushin_S,diameter_Y\n";
  out += "0,,," + fmt_double(traj.y_range[0]) + "\n";
  for (std::size_t k = 0; k < traj.x.size(); ++k)
    out += std::to_string(k + 1) + "," + fmt_double(traj.x[k]) + "," +
           fmt_double(traj.dobrushin_s[k]) + "," + fmt_double(traj.y_range[k + 1]) + "\n";
  return out;
}

PhaseRow make_phase_row(const IsingParams& params) {
  PhaseRow row;
  row.L = params.L;
  row.p = params.p;
  row.K = params.K;
  row.t = t_param(params.L, params.p);
  row.x1 = std::min(std::exp(4.0 * params.K), x_guard);
  const FixedPointSet fp = fixed_points(row.t);
  row.x_star1 = fp.stable;
  row.x_star2 = fp.unstable;
  row.K_star = critical_coupling(params.L, params.p);
  row.verdict = classify_phase(params);
  return row;
}

std::string phase_json(const std::vector<PhaseRow>& rows) {
  json out_rows = json::array();
  for (const auto& row : rows)
    out_rows.push_back({{"L", row.L},
                        {"p", row.p},
                        {"K", row.K},
                        {"t", row.t},
                        {"x1", row.x1},
                        {"x_star1", optional_json(row.x_star1)},
                        {"x_star2", optional_json(row.x_star2)},
                        {"K_star", optional_json(row.K_star)},
                        {"verdict", to_string(row.verdict)}});
  return dump({{"schema_version", schema_version}, {"rows", out_rows}});
}

std::string phase_csv(const std::vector<PhaseRow>& rows) {
  std::string out = "L,p,K,t,x1,x_star1,x_star2,K_star,verdict\n";
  for (const auto& row : rows)
    out += fmt_double(row.L) + "," + fmt_double(row.p) + "," + fmt_double(row.K) + "," +
           fmt_double(row.t) + "," + fmt_double(row.x1) + "," + optional_cell(row.x_star1) +
           "," + optional_cell(row.x_star2) + "," + optional_cell(row.K_star) + "," +
           to_string(row.verdict) + "\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace motifgraphs
