#include "motifgraphs/structure.hpp"

#include "motifgraphs/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace motifgraphs {

namespace {

// local coefficient per node, using sorted adjacency lists
std::vector<double> local_clustering(const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<double> out(n, 0.0);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      const auto& nb = adj[v];
      const std::size_t d = nb.size();
      if (d < 2) continue;
      std::uint64_t links = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
          links += std::binary_search(adj[nb[a]].begin(), adj[nb[a]].end(), nb[b]) ? 1 : 0;
      out[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
    }
  });
  return out;
}

}  // namespace

double clustering_average(const GraphTopology& g, const DecorationRealization& real) {
  const auto adj = adjacency_lists(g, &real);
  const auto local = local_clustering(adj);
  double sum = 0.0;
  for (double q : local) sum += q;
  return sum / static_cast<double>(local.size());
}

std::map<int, double> clustering_per_level(const GraphTopology& g,
                                           const DecorationRealization& real) {
  const auto adj = adjacency_lists(g, &real);
  const auto local = local_clustering(adj);
  std::map<int, std::pair<double, std::uint64_t>> acc;
  for (std::size_t v = 0; v < local.size(); ++v) {
    auto& slot = acc[g.nodes[v].level_class];
    slot.first += local[v];
    ++slot.second;
  }
  std::map<int, double> out;
  for (const auto& [level, slot] : acc) out[level] = slot.first / slot.second;
  return out;
}

std::uint32_t diameter(const GraphTopology& g, const DecorationRealization& real) {
  const auto adj = adjacency_lists(g, &real);
  const std::size_t n = adj.size();
  // flatten to CSR for the BFS inner loop
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    offsets[v + 1] = offsets[v] + static_cast<std::uint32_t>(adj[v].size());
  std::vector<std::uint32_t> targets(offsets[n]);
  for (std::size_t v = 0; v < n; ++v)
    std::copy(adj[v].begin(), adj[v].end(), targets.begin() + offsets[v]);

  std::vector<std::uint32_t> ecc(n, 0);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> dist(n);
    std::vector<std::uint32_t> queue(n);
    for (std::size_t src = begin; src < end; ++src) {
      std::fill(dist.begin(), dist.end(), std::numeric_limits<std::uint32_t>::max());
      std::size_t head = 0, tail = 0;
      dist[src] = 0;
      queue[tail++] = static_cast<std::uint32_t>(src);
      std::uint32_t far = 0;
      std::size_t visited = 0;
      while (head < tail) {
        const std::uint32_t u = queue[head++];
        ++visited;
        far = dist[u];
        for (std::uint32_t e = offsets[u]; e < offsets[u + 1]; ++e) {
          const std::uint32_t w = targets[e];
          if (dist[w] == std::numeric_limits<std::uint32_t>::max()) {
            dist[w] = dist[u] + 1;
            queue[tail++] = w;
          }
        }
      }
      if (visited != n) throw std::runtime_error("graph is not connected");
      ecc[src] = far;
    }
  });
  return *std::max_element(ecc.begin(), ecc.end());
}

double boundary_ratio_closed(MotifId motif, int k) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const double q = get_motif(motif).q;
  double qk = 1.0;
  for (int i = 0; i < k; ++i) qk *= q;
  return (k * (q - 1.0) * (q - 1.0) + (q - 1.0) * (k + 2.0)) / ((qk + q) / 2.0);
}

double clustering_m1_bare_closed(int k) {
  if (k < 2) throw std::invalid_argument("closed form needs k >= 2");
  double v1 = 1.0;  // |level class 1| = 3^{ k-1 }
  for (int i = 0; i < k - 1; ++i) v1 *= 3.0;
  const double v = (v1 * 3.0 + 3.0) / 2.0;
  return 1.0 / 3.0 + v1 / (6.0 * v) + 2.0 / v;
}

double clustering_m1_decorated_closed(int k) {
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  // With every slot active, a class-l internal node has degree 4l and its
  // neighborhood spans 6l-2 links: per glued side, l-1 same-level pairs plus
  // l-1 consecutive-level pairs plus 1 basic pair, and 2 pairs bridging the
  // two sides (one basic at l=1, otherwise via the level-(l+1) slots).
  // An external node has degree 2k and 3k-2 neighbor links by the same count.
  double pk = 1.0;  // 3^k
  for (int i = 0; i < k; ++i) pk *= 3.0;
  double acc = 0.0;
  double cls = pk;  // |class l| = 3^{k-l}
  for (int l = 1; l <= k - 1; ++l) {
    cls /= 3.0;
    acc += cls * (3.0 * l - 1.0) / (l * (4.0 * l - 1.0));
  }
  acc += 3.0 * (3.0 * k - 2.0) / (static_cast<double>(k) * (2.0 * k - 1.0));
  return acc / ((pk + 3.0) / 2.0);
}

double clustering_m1_decorated_limit(int terms) {
  if (terms < 1) throw std::invalid_argument("need at least one term");
  double sum = 0.0;
  double p3 = 1.0;
  for (int l = 1; l <= terms; ++l) {
    p3 /= 3.0;
    sum += p3 / (4.0 * l - 1.0);
  }
  return 4.0 * sum;
}

StructureReport structure_report(const GraphTopology& g, const DecorationRealization& real) {
  StructureReport rep;
  rep.clustering_avg = clustering_average(g, real);
  rep.per_level_clustering = clustering_per_level(g, real);
  rep.diameter = diameter(g, real);
  rep.boundary_ratio = boundary_ratio_closed(g.motif, g.k);
  return rep;
}

}  // namespace motifgraphs
