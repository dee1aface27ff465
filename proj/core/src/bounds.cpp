#include "adsvol/bounds.hpp"

#include <cmath>
#include <vector>

#include "adsvol/hypgeom.hpp"
#include "adsvol/surface.hpp"

namespace adsvol::bounds {

namespace {

double abs_chi(int genus) {
  if (genus < 2) fail(ErrorKind::GenusTooSmall, "bound evaluators need genus >= 2");
  return 2.0 * genus - 2.0;
}

}  // namespace

VolumeBracket volume_bracket_from_lamination(double lam_length, int genus) {
  double chi = abs_chi(genus);
  if (lam_length < 0.0) fail(ErrorKind::InvalidInput, "lamination length must be >= 0");
  return {lam_length / 4.0, lam_length / 4.0 + (M_PI * M_PI / 2.0) * chi, genus};
}

double fuchsian_volume(int genus) { return M_PI * M_PI * abs_chi(genus); }

double thurston_upper_bound(double dth, int genus) {
  double chi = abs_chi(genus);
  if (dth < 0.0) fail(ErrorKind::InvalidInput, "Thurston distance must be >= 0");
  return (M_PI * M_PI / 2.0) * chi + M_PI * chi * std::exp(dth);
}

double thurston_upper_bound_gradient_form(double dth, double a, int genus) {
  double chi = abs_chi(genus);
  if (!(a > 0.0)) fail(ErrorKind::InvalidInput, "gradient constant a must be positive");
  if (dth < 0.0) fail(ErrorKind::InvalidInput, "Thurston distance must be >= 0");
  return (M_PI * M_PI / 2.0) * chi + chi * chi / (4.0 * a * a) * (std::exp(dth) - 1.0);
}

double wp_lower_bound_form(double dwp, double a, double b, double c, int genus) {
  double chi = abs_chi(genus);
  if (!(a > 0.0)) fail(ErrorKind::InvalidInput, "constant a must be positive");
  if (dwp < 0.0) fail(ErrorKind::InvalidInput, "WP distance must be >= 0");
  return std::exp(a * dwp / chi - b * chi) - c;
}

double wp_pinching(double total_length) {
  if (total_length < 0.0) fail(ErrorKind::InvalidInput, "pinched length must be >= 0");
  return std::sqrt(2.0 * M_PI * total_length);
}

double wp_level_distance(double m, double level, int genus, double a) {
  double chi = abs_chi(genus);
  if (!(a > 0.0) || !(level > 0.0) || !(m > 0.0)) {
    fail(ErrorKind::InvalidInput, "level distance needs positive m, L and a");
  }
  return chi / a * std::log(m * (3.0 * genus - 3.0) / level);
}

double wp_level_diameter(double level) {
  if (!(level > 0.0)) fail(ErrorKind::InvalidInput, "level must be positive");
  return 2.0 * std::sqrt(2.0 * M_PI * level);
}

DensityReport pointwise_densities(const std::array<std::array<double, 2>, 2>& m) {
  double a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
  double e = (a + d) / 2.0, f = (a - d) / 2.0, g = (c + b) / 2.0, h = (c - b) / 2.0;
  double s1 = std::hypot(e, h) + std::hypot(f, g);
  double s2 = std::abs(std::hypot(e, h) - std::hypot(f, g));
  double det = a * d - b * c;
  double sgn = det >= 0.0 ? 1.0 : -1.0;
  DensityReport rep;
  rep.norm_df = std::sqrt(s1 * s1 + s2 * s2);
  rep.schatten_trace = s1 + s2;
  rep.norm_del = (s1 + sgn * s2) / std::sqrt(2.0);
  rep.norm_delbar = (s1 - sgn * s2) / std::sqrt(2.0);
  rep.orientation_preserving = det > 0.0;
  return rep;
}

namespace {

double beta_closed_form(int n, double mu) {
  return 4.0 * std::asinh(std::cosh(mu / 4.0) / std::sinh(1.0 / (2.0 * n)));
}

}  // namespace

Prop52Report example_prop52(int n, double base_mu_length) {
  if (n < 1) fail(ErrorKind::InvalidInput, "family index n must be >= 1");
  if (!(base_mu_length > 0.0)) fail(ErrorKind::InvalidInput, "mu length must be positive");

  Prop52Report rep;
  rep.n = n;
  rep.mu_length = base_mu_length;
  rep.alpha_length = 1.0 / n;
  rep.lambda_length = n * (1.0 / n);  // weight n on a curve of length 1/n
  rep.beta_length_closed_form = beta_closed_form(n, base_mu_length);
  rep.ratio_floor = -1.0 + n / rep.beta_length_closed_form;
  rep.bracket = volume_bracket_from_lamination(rep.lambda_length, 2);

  // Genus-2 realization: handle curve pinched to 1/n, separating curve of the
  // given length, zero twists so the dual handle curve crosses orthogonally.
  surface::SurfaceTopology topo = surface::standard_topology(2);
  surface::FNCoordinates fn{{1.0 / n, base_mu_length, 1.0}, {0.0, 0.0, 0.0}};
  surface::HolonomyRep hol = surface::build_holonomy(topo, fn);
  curves::CurveClass beta({curves::Letter{1, false}});
  rep.beta_length_holonomy = surface::curve_length(hol, beta);
  return rep;
}

LogFit fit_prop52_log_constants(double base_mu_length) {
  // Linear least squares of beta(n) against (log n, 1), n = 2..64.
  double sxx = 0, sx = 0, sxy = 0, sy = 0, cnt = 0;
  for (int n = 2; n <= 64; ++n) {
    double x = std::log(double(n));
    double y = beta_closed_form(n, base_mu_length);
    sxx += x * x;
    sx += x;
    sxy += x * y;
    sy += y;
    cnt += 1;
  }
  double det = sxx * cnt - sx * sx;
  LogFit fit;
  fit.c1 = (sxy * cnt - sx * sy) / det;
  fit.c2 = (sxx * sy - sx * sxy) / det;
  for (int n = 2; n <= 64; ++n) {
    double y = beta_closed_form(n, base_mu_length);
    double r = std::abs(fit.c1 * std::log(double(n)) + fit.c2 - y);
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

double pants_exit_distance(double u) {
  if (!(u > 0.0)) fail(ErrorKind::NonPositiveLength, "boundary length u must be positive");
  return 2.0 * std::asinh(1.0 / (2.0 * std::sinh(u / 4.0)));
}

double optimality_constant_c0(double* argmax) {
  // Maximize u * r(u) on [1e-3, 50]; a grid scan confirms unimodality before
  // the golden-section refinement is trusted.
  auto f = [](double u) { return u * pants_exit_distance(u); };
  double best_u = 1e-3, best = f(best_u);
  double prev = best;
  int direction_changes = 0;
  bool rising = true;
  for (int i = 1; i <= 500; ++i) {
    double u = 1e-3 + (50.0 - 1e-3) * i / 500.0;
    double v = f(u);
    if (v > best) {
      best = v;
      best_u = u;
    }
    bool now_rising = v >= prev;
    if (now_rising != rising) {
      ++direction_changes;
      rising = now_rising;
    }
    prev = v;
  }
  if (direction_changes > 1) fail(ErrorKind::NumericalFailure, "u r(u) scan is not unimodal");

  double lo = std::max(1e-3, best_u - 0.2), hi = std::min(50.0, best_u + 0.2);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  while (hi - lo > 1e-6) {
    if (f(c) > f(d)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  double u = (lo + hi) / 2.0;
  if (argmax) *argmax = u;
  return 3.0 / 8.0 * f(u);
}

GenusOptimalityReport example_genus_optimality(int genus, double u, double weight) {
  double chi = abs_chi(genus);
  if (!(u > 0.0) || !(weight > 0.0)) {
    fail(ErrorKind::InvalidInput, "u and weight must be positive");
  }
  GenusOptimalityReport rep;
  rep.genus = genus;
  rep.u = u;
  rep.weight = weight;
  rep.r_u = pants_exit_distance(u);
  rep.lambda_length = weight * (3.0 * genus - 3.0) * u;
  rep.exp_dth_upper = 1.0 + weight / rep.r_u;
  rep.volume_ratio_floor = 3.0 / 8.0 * chi * u * rep.r_u;
  rep.c0 = optimality_constant_c0(&rep.c0_argmax);
  return rep;
}

}  // namespace adsvol::bounds
