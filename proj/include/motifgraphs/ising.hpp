#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace motifgraphs {

// Annealed Ising model on the triangle hierarchy: coupling K on basic bonds,
// L on decorations present with probability p, zero field.
struct IsingParams {
  double K = 0.0;
  double L = 0.0;
  double p = 0.0;
};

enum class PhaseLabel { Unordered, Ordered, Critical };
std::string to_string(PhaseLabel label);

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Vec3 mat_vec(const Mat3& a, const Vec3& v);
inline Mat3 mat_identity() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

// Annealed single-decoration factors for aligned / anti-aligned boundary.
double r_plus(double L, double p);   // (p e^L + 1 - p)^3
double r_minus(double L, double p);  // (p e^L + 1 - p)(p e^{-L} + 1 - p)^2
// t = ((p e^L + 1 - p) / (p e^{-L} + 1 - p))^2 = r_plus / r_minus
double t_param(double L, double p);

// One renormalization step of the boundary ratio: x -> t * phi(x).
double phi_map(double x);    // (x^2 - x + 4) / (x + 3), x > 0
double phi_prime(double x);  // 1 - (4 / (x + 3))^2

// Fixed points of x = t * phi(x) on (0, inf). For t <= 1 a single stable root
// (stable only, = 1 at t = 1); for 1 < t < 9/5 a stable/unstable pair; at
// t = 9/5 the degenerate pair (3, 3); for t > 9/5 none.
struct FixedPointSet {
  std::optional<double> stable;
  std::optional<double> unstable;
};
FixedPointSet fixed_points(double t);

// Iterates beyond this are clamped and the trajectory flagged divergent.
inline constexpr double x_guard = 1e100;

struct XTrajectory {
  std::vector<double> x;  // x[0] = e^{4K}, length k_max
  bool diverged = false;
};
XTrajectory iterate_x(const IsingParams& params, int k_max);

// Row-stochastic step matrix T(x) driving boundary observables.
Mat3 transfer_matrix(double x);

// Dobrushin ergodicity coefficient max_{i,j} (1/2) sum_l |a_il - a_jl| of a
// row-stochastic matrix; throws if rows are not probability vectors.
double dobrushin(const Mat3& a);

inline double vec_range(const Vec3& v);  // max - min

struct IsingTrajectory {
  IsingParams params;
  std::vector<double> x;            // x_1..x_{k_max}
  std::vector<Vec3> y;              // Y_1..Y_{k_max+1}
  Mat3 s_product = mat_identity();  // T(x_{k_max}) ... T(x_1)
  std::vector<double> dobrushin_s;  // D of the running product, k = 1..k_max
  std::vector<double> y_range;      // max-min of Y_k, k = 1..k_max+1
  bool diverged = false;
  PhaseLabel verdict = PhaseLabel::Unordered;
};
// Y_{k+1} = T(x_k) Y_k from Y_1 = y1 (positive entries).
IsingTrajectory evolve_y(const IsingParams& params, const Vec3& y1, int k_max);

// Log-domain boundary partition values: A_{k+1} = R+ (A^3 + 3 A B^2 + 4 B^3),
// B_{k+1} = R- (A^2 B + 4 A B^2 + 3 B^3), A_1 = e^{3K}, B_1 = e^{-K}.
// log_ratio is log A_k - log B_k tracked in small-magnitude arithmetic; the
// stored logs themselves grow like 3^k and lose the difference to rounding.
struct ABTrajectory {
  std::vector<double> log_a, log_b, log_ratio;  // k = 1..k_max
};
ABTrajectory recursion_ab(const IsingParams& params, int k_max);

// t <= 1 -> Unordered; t > 9/5 -> Ordered; otherwise compare x_1 = e^{4K}
// against the unstable fixed point (Critical within 1e-12; at t = 9/5 the
// iterate still converges for K <= K* = ln(3)/4, labeled Unordered).
PhaseLabel classify_phase(const IsingParams& params);

// ln(unstable root)/4 for 1 < t <= 9/5, absent otherwise.
std::optional<double> critical_coupling(double L, double p);

// Decoration-strength threshold (1/4) ln(9/5) and the dilution boundary
// psi(L) = (3 - sqrt 5) / (sqrt 5 e^L - 3 e^{-L} + 3 - sqrt 5), L > 0.
// psi exceeds 1 for L below the threshold; is_probability flags value <= 1.
double l_star();
struct PsiValue {
  double value = 0.0;
  bool is_probability = false;
};
PsiValue psi_threshold(double L);

inline double vec_range(const Vec3& v) {
  double lo = v[0], hi = v[0];
  for (double e : v) {
    lo = lo < e ? lo : e;
    hi = hi > e ? hi : e;
  }
  return hi - lo;
}

}  // namespace motifgraphs
