#include "motifgraphs/degree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace motifgraphs {

namespace {

double ipow(double base, int exp) {
  double out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::complex<double> cpow_int(std::complex<double> z, int n) {
  std::complex<double> out{1.0, 0.0};
  while (n > 0) {
    if (n & 1) out *= z;
    z *= z;
    n >>= 1;
  }
  return out;
}

double binom_pmf(int s, double p, int j) {
  if (j < 0 || j > s) return 0.0;
  if (p <= 0.0) return j == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return j == s ? 1.0 : 0.0;
  double lc = std::lgamma(s + 1.0) - std::lgamma(j + 1.0) - std::lgamma(s - j + 1.0);
  return std::exp(lc + j * std::log(p) + (s - j) * std::log1p(-p));
}

// raw moments of Binomial(s, p), orders 0..4, via factorial moments
double binom_raw_moment(int s, double p, int order) {
  auto falling = [&](int j) {
    double out = 1.0;
    for (int i = 0; i < j; ++i) out *= (s - i) * p;
    return out;
  };
  switch (order) {
    case 0: return 1.0;
    case 1: return falling(1);
    case 2: return falling(2) + falling(1);
    case 3: return falling(3) + 3 * falling(2) + falling(1);
    case 4: return falling(4) + 6 * falling(3) + 7 * falling(2) + falling(1);
    default: throw std::invalid_argument("moment order must be 1..4");
  }
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
}

// glue-pair basic degree multiset (sorted), q(q-1)/2 entries
std::vector<int> glue_degree_multiset(const MotifSpec& m) {
  std::vector<int> out;
  for (int i = 1; i <= m.q; ++i)
    for (int j = i + 1; j <= m.q; ++j)
      out.push_back(m.base_degrees[i - 1] + m.base_degrees[j - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

double DegreeMixture::pmf(int degree) const {
  double out = 0.0;
  for (const MixtureComponent& c : components)
    out += c.weight * binom_pmf(c.slots, p, degree - c.base);
  return out;
}

double DegreeMixture::mean() const {
  double out = 0.0;
  for (const MixtureComponent& c : components) out += c.weight * (c.base + c.slots * p);
  return out;
}

double DegreeMixture::raw_moment(int order) const {
  if (order < 1 || order > 4) throw std::invalid_argument("moment order must be 1..4");
  double out = 0.0;
  for (const MixtureComponent& c : components) {
    // E[(base + B)^order] expanded over binomial raw moments
    double acc = 0.0;
    double choose = 1.0;
    for (int j = 0; j <= order; ++j) {
      acc += choose * ipow(c.base, order - j) * binom_raw_moment(c.slots, p, j);
      choose = choose * (order - j) / (j + 1);
    }
    out += c.weight * acc;
  }
  return out;
}

std::complex<double> DegreeMixture::char_fn(double t) const {
  const std::complex<double> eit = std::polar(1.0, t);
  const std::complex<double> z = p * eit + (1.0 - p);
  std::complex<double> out{0.0, 0.0};
  for (const MixtureComponent& c : components)
    out += c.weight * std::polar(1.0, t * c.base) * cpow_int(z, c.slots);
  return out;
}

int DegreeMixture::max_degree() const {
  int out = 0;
  for (const MixtureComponent& c : components) {
    int top = c.base + (p > 0.0 ? c.slots : 0);
    out = std::max(out, top);
  }
  return out;
}

DegreeMixture mixture_model(MotifId motif, int k, double p) {
  check_p(p);
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const MotifSpec& m = get_motif(motif);
  const int q = m.q;

  DegreeMixture mix;
  mix.motif = motif;
  mix.k = k;
  mix.p = p;

  std::map<std::pair<int, int>, std::size_t> index;  // (base, slots) -> component
  const auto add = [&](double w, int base, int slots) {
    auto key = std::make_pair(base, slots);
    if (auto it = index.find(key); it != index.end()) {
      mix.components[it->second].weight += w;
    } else {
      index[key] = mix.components.size();
      mix.components.push_back({w, base, slots});
    }
  };

  if (k == 1) {
    for (int i = 0; i < q; ++i) add(1.0 / q, m.base_degrees[i], 0);
    return mix;
  }

  const std::vector<int> glue = glue_degree_multiset(m);
  const double pair_count = static_cast<double>(glue.size());
  for (int l = 1; l <= k - 1; ++l) {
    const double w_level = (q - 1) * ipow(1.0 / q, l) / (1.0 + ipow(1.0 / q, k - 1));
    for (int b : glue) add(w_level / pair_count, b, b * (l - 1));
  }
  const double w_ext = 2.0 / (ipow(static_cast<double>(q), k - 1) + 1.0);
  for (int i = 0; i < q; ++i) {
    const int b = m.base_degrees[i];
    add(w_ext / q, b, b * (k - 1));
  }
  return mix;
}

double mean_degree_closed(MotifId motif, int k, double p) {
  check_p(p);
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const MotifSpec& m = get_motif(motif);
  const double qk1 = ipow(static_cast<double>(m.q), k - 1);
  switch (motif) {
    case MotifId::M1:
    case MotifId::M5: {
      const double q = m.q;
      return (qk1 * (2.0 * q - 2.0 + 2.0 * p) - 2.0 * p) / (qk1 + 1.0);
    }
    case MotifId::M2:
    case MotifId::M3:
      return 4.0 + (4.0 / 3.0) * (p - (3.0 + 2.0 * p) / (qk1 + 1.0));
    case MotifId::M4:
      return 5.0 + (5.0 / 3.0) * (p - (3.0 + 2.0 * p) / (qk1 + 1.0));
  }
  throw std::invalid_argument("bad motif id");
}

double mean_degree_from_counts(MotifId motif, int k, double p) {
  check_p(p);
  if (k < 1) throw std::invalid_argument("level k must be >= 1");
  const MotifSpec& m = get_motif(motif);
  const double q = m.q;
  const double qk1 = ipow(q, k - 1);
  const double edges = m.r * qk1 + p * m.r * (qk1 - 1.0) / (q - 1.0);
  const double nodes = (qk1 * q + q) / 2.0;
  return 2.0 * edges / nodes;
}

double second_moment_limit(MotifId motif, double p) {
  check_p(p);
  const int q = get_motif(motif).q;
  switch (motif) {
    case MotifId::M1:
    case MotifId::M5:
      return 4.0 * (q - 1.0) * (q - 1.0) + (8.0 * q - 6.0) * p + (4.0 * q + 2.0) * p * p;
    case MotifId::M3:
      return 16.0 + 12.0 * p + 68.0 * p * p / 9.0;
    case MotifId::M2:
      return 50.0 / 3.0 + 112.0 * p / 9.0 + 214.0 * p * p / 27.0;
    case MotifId::M4:
      return 76.0 / 3.0 + 167.0 * p / 9.0 + 335.0 * p * p / 27.0;
  }
  throw std::invalid_argument("bad motif id");
}

std::complex<double> char_fn_limit(MotifId motif, double p, double t) {
  check_p(p);
  const std::complex<double> eit = std::polar(1.0, t);
  const std::complex<double> z = p * eit + (1.0 - p);
  const auto term = [&](double w, int base, int slot_base) {
    return w * std::polar(1.0, t * base) / (4.0 - cpow_int(z, slot_base));
  };
  switch (motif) {
    case MotifId::M1:
      return 2.0 * std::polar(1.0, 4.0 * t) / (3.0 - cpow_int(z, 4));
    case MotifId::M5:
      return 3.0 * std::polar(1.0, 6.0 * t) / (4.0 - cpow_int(z, 6));
    case MotifId::M3:
      return term(3.0, 4, 4);
    case MotifId::M2:
      return term(1.0, 3, 3) + term(1.0, 4, 4) + term(1.0, 5, 5);
    case MotifId::M4:
      return term(0.5, 4, 4) + term(2.0, 5, 5) + term(0.5, 6, 6);
  }
  throw std::invalid_argument("bad motif id");
}

FitReport degree_fit(const GraphTopology& g, double p, int samples, std::uint64_t seed) {
  check_p(p);
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  FitReport rep;
  rep.motif = g.motif;
  rep.k = g.k;
  rep.p = p;
  rep.samples = samples;
  rep.seed = seed;
  rep.char_t = {0.2, 0.5, 1.0, 1.7, 2.5};

  const DegreeMixture mix = mixture_model(g.motif, g.k, p);
  const std::vector<int> base = basic_degrees(g);
  std::vector<std::vector<std::uint32_t>> node_slots(g.nodes.size());
  for (std::size_t s = 0; s < g.slots.size(); ++s) {
    node_slots[g.slots[s].u].push_back(static_cast<std::uint32_t>(s));
    node_slots[g.slots[s].v].push_back(static_cast<std::uint32_t>(s));
  }

  const int max_deg = mix.max_degree();
  const std::size_t n_nodes = g.nodes.size();
  std::vector<std::vector<std::uint64_t>> hist(samples);
  std::vector<double> sample_mean(samples, 0.0);
  std::vector<std::vector<std::complex<double>>> char_sum(samples);

  for (int s = 0; s < samples; ++s) {
    const DecorationRealization real =
        sample_decorations(g, p, mix64(seed, static_cast<std::uint64_t>(s)));
    std::vector<std::uint64_t> h(max_deg + 1, 0);
    std::vector<std::complex<double>> cs(rep.char_t.size(), {0.0, 0.0});
    double mean_acc = 0.0;
    for (std::size_t v = 0; v < n_nodes; ++v) {
      int d = base[v];
      for (std::uint32_t si : node_slots[v]) d += real.active[si] ? 1 : 0;
      ++h[d];
      mean_acc += d;
      for (std::size_t ti = 0; ti < rep.char_t.size(); ++ti)
        cs[ti] += std::polar(1.0, rep.char_t[ti] * d);
    }
    hist[s] = std::move(h);
    sample_mean[s] = mean_acc / static_cast<double>(n_nodes);
    char_sum[s] = std::move(cs);
  }

  std::vector<std::uint64_t> pooled(max_deg + 1, 0);
  for (int s = 0; s < samples; ++s)
    for (int d = 0; d <= max_deg; ++d) pooled[d] += hist[s][d];
  const double total = static_cast<double>(n_nodes) * samples;

  double tv = 0.0;
  for (int d = 0; d <= max_deg; ++d) {
    const double emp = pooled[d] / total;
    const double mod = mix.pmf(d);
    if (pooled[d] > 0) rep.empirical[d] = emp;
    if (pooled[d] > 0 || mod > 1e-15) rep.model[d] = mod;
    tv += std::abs(emp - mod);
  }
  rep.tv_distance = 0.5 * tv;

  double mean = 0.0;
  for (double sm : sample_mean) mean += sm;
  mean /= samples;
  rep.empirical_mean = mean;
  if (samples > 1) {
    double var = 0.0;
    for (double sm : sample_mean) var += (sm - mean) * (sm - mean);
    var /= (samples - 1.0);
    rep.empirical_se = std::sqrt(var / samples);
  }
  rep.closed_mean = mean_degree_closed(g.motif, g.k, p);

  for (std::size_t ti = 0; ti < rep.char_t.size(); ++ti) {
    std::complex<double> acc{0.0, 0.0};
    for (int s = 0; s < samples; ++s) acc += char_sum[s][ti];
    rep.char_empirical.push_back(acc / total);
    rep.char_model.push_back(mix.char_fn(rep.char_t[ti]));
  }
  return rep;
}

}  // namespace motifgraphs
