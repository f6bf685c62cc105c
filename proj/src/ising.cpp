#include "motifgraphs/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace motifgraphs {

namespace {

constexpr double t_boundary = 9.0 / 5.0;

void check_params(const IsingParams& params) {
  if (!std::isfinite(params.K) || !std::isfinite(params.L))
    throw std::invalid_argument("couplings must be finite");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
}

double log_sum_exp3(double a, double b, double c) {
  const double m = std::max(a, std::max(b, c));
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

}  // namespace

std::string to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::Unordered: return "unordered";
    case PhaseLabel::Ordered: return "ordered";
    case PhaseLabel::Critical: return "critical";
  }
  throw std::invalid_argument("bad phase label");
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int l = 0; l < 3; ++l) acc += a[i][l] * b[l][j];
      out[i][j] = acc;
    }
  return out;
}

Vec3 mat_vec(const Mat3& a, const Vec3& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) out[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return out;
}

double r_plus(double L, double p) {
  const double f = p * std::exp(L) + 1.0 - p;
  return f * f * f;
}

double r_minus(double L, double p) {
  const double f = p * std::exp(L) + 1.0 - p;
  const double g = p * std::exp(-L) + 1.0 - p;
  return f * g * g;
}

double t_param(double L, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
  const double ratio = (p * std::exp(L) + 1.0 - p) / (p * std::exp(-L) + 1.0 - p);
  return ratio * ratio;
}

double phi_map(double x) {
  if (!(x > 0.0)) throw std::domain_error("phi needs x > 0");
  return (x * x - x + 4.0) / (x + 3.0);
}

double phi_prime(double x) {
  if (!(x > 0.0)) throw std::domain_error("phi needs x > 0");
  const double f = 4.0 / (x + 3.0);
  return 1.0 - f * f;
}

FixedPointSet fixed_points(double t) {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  FixedPointSet out;
  if (t > t_boundary) return out;
  if (t == t_boundary) {
    out.stable = 3.0;
    out.unstable = 3.0;
    return out;
  }
  if (t == 1.0) {
    out.stable = 1.0;
    return out;
  }
  const double disc = std::sqrt(std::max(0.0, 9.0 + 22.0 * t - 15.0 * t * t));
  if (t < 1.0) {
    out.stable = (-3.0 - t + disc) / (2.0 * (1.0 - t));
    return out;
  }
  out.stable = (3.0 + t - disc) / (2.0 * (t - 1.0));
  out.unstable = (3.0 + t + disc) / (2.0 * (t - 1.0));
  return out;
}

XTrajectory iterate_x(const IsingParams& params, int k_max) {
  check_params(params);
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const double t = t_param(params.L, params.p);
  XTrajectory out;
  out.x.reserve(k_max);
  double x = std::exp(4.0 * params.K);
  if (!(x <= x_guard)) x = x_guard;
  out.x.push_back(x);
  for (int k = 1; k < k_max; ++k) {
    x = t * phi_map(x);
    if (!(x <= x_guard)) x = x_guard;
    out.x.push_back(x);
  }
  out.diverged = out.x.back() >= x_guard;
  return out;
}

Mat3 transfer_matrix(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("transfer matrix needs finite x > 0");
  const double den1 = x * x * x + 3.0 * x + 4.0;
  const double den2 = x * x + 4.0 * x + 3.0;
  return {{{x * (x * x + 1.0) / den1, 2.0 * (x + 1.0) / den1, 2.0 / den1},
           {x * (x + 1.0) / den2, 2.0 * (x + 1.0) / den2, (x + 1.0) / den2},
           {2.0 * x / den2, 2.0 * (x + 1.0) / den2, (x * x + 1.0) / den2}}};
}

double dobrushin(const Mat3& a) {
  for (int i = 0; i < 3; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      if (a[i][j] < -1e-12) throw std::invalid_argument("matrix row has a negative entry");
      sum += a[i][j];
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("matrix rows must sum to 1");
  }
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double half_l1 = 0.0;
      for (int l = 0; l < 3; ++l) half_l1 += std::abs(a[i][l] - a[j][l]);
      worst = std::max(worst, 0.5 * half_l1);
    }
  return worst;
}

IsingTrajectory evolve_y(const IsingParams& params, const Vec3& y1, int k_max) {
  check_params(params);
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  for (double e : y1)
    if (!(e > 0.0) || !std::isfinite(e))
      throw std::invalid_argument("initial observables must be positive");

  IsingTrajectory out;
  out.params = params;
  const XTrajectory xt = iterate_x(params, k_max);
  out.x = xt.x;
  out.diverged = xt.diverged;
  out.y.push_back(y1);
  out.y_range.push_back(vec_range(y1));
  for (int k = 0; k < k_max; ++k) {
    const Mat3 step = transfer_matrix(out.x[k]);
    out.s_product = (k == 0) ? step : mat_mul(step, out.s_product);
    out.y.push_back(mat_vec(step, out.y.back()));
    out.y_range.push_back(vec_range(out.y.back()));
    out.dobrushin_s.push_back(dobrushin(out.s_product));
  }
  out.verdict = classify_phase(params);
  return out;
}

ABTrajectory recursion_ab(const IsingParams& params, int k_max) {
  check_params(params);
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const double lrp = std::log(r_plus(params.L, params.p));
  const double lrm = std::log(r_minus(params.L, params.p));
  const double ln3 = std::log(3.0), ln4 = std::log(4.0);

  ABTrajectory out;
  double log_b = -params.K;
  double d = 4.0 * params.K;  // log A - log B
  out.log_a.push_back(log_b + d);
  out.log_b.push_back(log_b);
  out.log_ratio.push_back(d);
  for (int k = 1; k < k_max; ++k) {
    // A' = R+ B^3 (x^3 + 3x + 4), B' = R- B^3 (x^2 + 4x + 3) with x = e^d
    const double series_a = log_sum_exp3(3.0 * d, ln3 + d, ln4);
    const double series_b = log_sum_exp3(2.0 * d, ln4 + d, ln3);
    const double next_b = lrm + 3.0 * log_b + series_b;
    d = (lrp - lrm) + (series_a - series_b);
    log_b = next_b;
    out.log_a.push_back(log_b + d);
    out.log_b.push_back(log_b);
    out.log_ratio.push_back(d);
  }
  return out;
}

PhaseLabel classify_phase(const IsingParams& params) {
  check_params(params);
  const double t = t_param(params.L, params.p);
  if (t <= 1.0) return PhaseLabel::Unordered;
  if (t > t_boundary) return PhaseLabel::Ordered;
  const double x1 = std::exp(4.0 * params.K);
  const double unstable = *fixed_points(t).unstable;
  if (t == t_boundary) return x1 <= unstable + 1e-12 ? PhaseLabel::Unordered : PhaseLabel::Ordered;
  if (std::abs(x1 - unstable) <= 1e-12) return PhaseLabel::Critical;
  return x1 < unstable ? PhaseLabel::Unordered : PhaseLabel::Ordered;
}

std::optional<double> critical_coupling(double L, double p) {
  const double t = t_param(L, p);
  if (t <= 1.0 || t > t_boundary) return std::nullopt;
  return std::log(*fixed_points(t).unstable) / 4.0;
}

double l_star() { return 0.25 * std::log(t_boundary); }

PsiValue psi_threshold(double L) {
  if (!(L > 0.0)) throw std::domain_error("threshold curve needs L > 0");
  const double s5 = std::sqrt(5.0);
  const double value = (3.0 - s5) / (s5 * std::exp(L) - 3.0 * std::exp(-L) + 3.0 - s5);
  return {value, value <= 1.0 + 1e-12};
}

}  // namespace motifgraphs
