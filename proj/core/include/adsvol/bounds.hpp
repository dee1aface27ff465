#pragma once

#include <array>
#include <optional>

#include "adsvol/common.hpp"

namespace adsvol::bounds {

// Convex-core volume bracket from the earthquake lamination length:
// [l/4, l/4 + (pi^2/2)|chi|]. The width is exactly (pi^2/2)|chi|.
struct VolumeBracket {
  double lower = 0.0;
  double upper = 0.0;
  int genus = 2;
};

VolumeBracket volume_bracket_from_lamination(double lam_length, int genus);

// pi^2 |chi|: total volume of the Fuchsian manifold over a genus-g surface.
double fuchsian_volume(int genus);

// (pi^2/2)|chi| + pi |chi| exp(dth).
double thurston_upper_bound(double dth, int genus);

// (pi^2/2)|chi| + (|chi|^2 / (4 a^2)) (exp(dth) - 1), with the gradient-route
// constant a supplied by the caller.
double thurston_upper_bound_gradient_form(double dth, double a, int genus);

// exp(a * dwp / |chi| - b |chi|) - c; may be negative, returned as-is.
double wp_lower_bound_form(double dwp, double a, double b, double c, int genus);

// sqrt(2 pi l): distance to the noded surface pinching curves of total length l.
double wp_pinching(double total_length);

// (|chi|/a) log(m (3g-3) / L): distance from the m-level set to the L-level set
// of the pants-curve length function.
double wp_level_distance(double m, double level, int genus, double a);

// 2 sqrt(2 pi L): diameter of the set of metrics with all pants curves <= L.
double wp_level_diameter(double level);

// Pointwise data of a differential in orthonormal frames.
struct DensityReport {
  double norm_df = 0.0;
  double norm_del = 0.0;
  double norm_delbar = 0.0;
  double schatten_trace = 0.0;
  bool orientation_preserving = false;
};

// Singular-value split of a 2x2 differential: norm_df^2 = del^2 + delbar^2,
// schatten_trace = s1 + s2 = sqrt(2) max(del, delbar).
DensityReport pointwise_densities(const std::array<std::array<double, 2>, 2>& dmatrix);

// The bounded-volume / divergent-distance family: genus 2, a handle curve
// pinched to 1/n carrying weight n, with the dual curve crossing it once
// orthogonally.
struct Prop52Report {
  int n = 1;
  double mu_length = 2.0;
  double alpha_length = 0.0;        // 1/n
  double lambda_length = 1.0;       // n * (1/n), exact
  double beta_length_closed_form = 0.0;  // 4 arcsinh(cosh(mu/4)/sinh(1/(2n)))
  double beta_length_holonomy = 0.0;     // geodesic length on the genus-2 realization
  double ratio_floor = 0.0;         // -1 + n / beta_closed_form
  VolumeBracket bracket;
};

Prop52Report example_prop52(int n, double base_mu_length);

// Least-squares fit of beta(n) ~ c1 log n + c2 over n in [2, 64]; the
// constants are empirical, not sourced values.
struct LogFit {
  double c1 = 0.0;
  double c2 = 0.0;
  double max_residual = 0.0;
  bool fitted = true;
};

LogFit fit_prop52_log_constants(double base_mu_length);

// The genus-optimality family: all 3g-3 pants curves of equal length u,
// twisted with equal weight w.
struct GenusOptimalityReport {
  int genus = 2;
  double u = 0.0;
  double weight = 0.0;
  double r_u = 0.0;                  // 2 arcsinh(1/(2 sinh(u/4)))
  double lambda_length = 0.0;        // w (3g-3) u
  double exp_dth_upper = 0.0;        // 1 + w / r(u)
  double volume_ratio_floor = 0.0;   // (3/8) |chi| u r(u)
  double c0 = 0.0;                   // (3/8) max_u u r(u)
  double c0_argmax = 0.0;
};

GenusOptimalityReport example_genus_optimality(int genus, double u, double weight);

double pants_exit_distance(double u);  // r(u)
double optimality_constant_c0(double* argmax = nullptr);

}  // namespace adsvol::bounds
