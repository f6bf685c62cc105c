#pragma once

#include "motifgraphs/sampling.hpp"
#include "motifgraphs/topology.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace motifgraphs {

// One mixture component: with probability `weight` a node has degree
// base + Binomial(slots, p).
struct MixtureComponent {
  double weight = 0.0;
  int base = 0;
  int slots = 0;
};

struct DegreeMixture {
  MotifId motif = MotifId::M1;
  int k = 0;
  double p = 0.0;
  std::vector<MixtureComponent> components;

  double pmf(int degree) const;
  double mean() const;
  double raw_moment(int order) const;  // orders 1..4
  std::complex<double> char_fn(double t) const;
  int max_degree() const;  // largest degree with nonzero mass
};

// Exact finite-k degree mixture: internal level-l nodes weighted
// (q-1) q^{-l} / (1 + q^{1-k}) split over the glue-pair degree multiset,
// externals weighted 2 / (q^{k-1} + 1) split over the motif nodes.
DegreeMixture mixture_model(MotifId motif, int k, double p);

// Family closed forms for the mean degree.
double mean_degree_closed(MotifId motif, int k, double p);
// Same quantity as 2 * expected edge count / node count.
double mean_degree_from_counts(MotifId motif, int k, double p);

// k -> infinity limit of the second raw moment.
double second_moment_limit(MotifId motif, double p);

// k -> infinity limit of the characteristic function.
std::complex<double> char_fn_limit(MotifId motif, double p, double t);

struct FitReport {
  MotifId motif = MotifId::M1;
  int k = 0;
  double p = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::map<int, double> empirical;  // degree -> pooled frequency
  std::map<int, double> model;     // degree -> mixture pmf (same support)
  double tv_distance = 0.0;
  double empirical_mean = 0.0;
  double empirical_se = 0.0;  // standard error over per-sample means
  double closed_mean = 0.0;
  std::vector<double> char_t;
  std::vector<std::complex<double>> char_empirical;
  std::vector<std::complex<double>> char_model;
};

// Samples `samples` realizations and compares pooled node degrees against the
// mixture: histogram, total-variation distance, mean with standard error, and
// empirical characteristic function on a fixed t grid.
FitReport degree_fit(const GraphTopology& g, double p, int samples, std::uint64_t seed);

}  // namespace motifgraphs
