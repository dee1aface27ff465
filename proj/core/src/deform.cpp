#include "adsvol/deform.hpp"

#include <algorithm>
#include <cmath>

namespace adsvol::deform {

using surface::FNCoordinates;
using surface::SurfaceTopology;

namespace {

void validate_spec(const TwistSpec& spec, std::size_t n_edges) {
  if (spec.weights.size() != n_edges) {
    fail(ErrorKind::DimensionMismatch, "twist spec must carry one weight per edge");
  }
  bool any = false;
  for (double w : spec.weights) {
    if (!std::isfinite(w) || w < 0.0) fail(ErrorKind::InvalidInput, "twist weights must be >= 0");
    any = any || w > 0.0;
  }
  if (!any) fail(ErrorKind::InvalidInput, "twist spec needs at least one positive weight");
}

}  // namespace

FNCoordinates earthquake(const FNCoordinates& fn, const TwistSpec& spec) {
  validate_spec(spec, fn.twists.size());
  FNCoordinates out = fn;
  double sign = spec.direction == TwistDirection::Left ? 1.0 : -1.0;
  for (std::size_t i = 0; i < out.twists.size(); ++i) out.twists[i] += sign * spec.weights[i];
  return out;
}

double twist_length_derivative(const SurfaceTopology& topo, const FNCoordinates& fn, int edge,
                               const curves::CurveClass& witness, double step) {
  if (!(step > 0.0)) fail(ErrorKind::InvalidInput, "finite-difference step must be positive");
  if (edge < 0 || edge >= static_cast<int>(fn.twists.size())) {
    fail(ErrorKind::InvalidInput, "edge index out of range");
  }
  FNCoordinates plus = fn, minus = fn;
  plus.twists[static_cast<std::size_t>(edge)] += step;
  minus.twists[static_cast<std::size_t>(edge)] -= step;
  double lp = surface::curve_length(surface::build_holonomy(topo, plus), witness);
  double lm = surface::curve_length(surface::build_holonomy(topo, minus), witness);
  return (lp - lm) / (2.0 * step);
}

GrowthBoundReport length_growth_bound_check(const SurfaceTopology& topo, const FNCoordinates& fn,
                                            const TwistSpec& spec, double level) {
  validate_spec(spec, fn.twists.size());
  for (double l : fn.lengths) {
    if (l > level) {
      fail(ErrorKind::PreconditionViolated, "every decomposition edge length must be <= L");
    }
  }
  GrowthBoundReport report;
  report.level = level;
  report.collar = hypgeom::collar_width(level);

  double lam = 0.0;
  for (std::size_t i = 0; i < spec.weights.size(); ++i) lam += spec.weights[i] * fn.lengths[i];
  report.lamination_length = lam;

  // The lamination is supported on the decomposition, so every edge is
  // disjoint from it and its length is unchanged by the earthquake.
  FNCoordinates after = earthquake(fn, spec);
  surface::HolonomyRep rep = surface::build_holonomy(topo, after);
  double bound = level + lam / report.collar;
  for (int e = 0; e < topo.num_curves(); ++e) {
    EdgeGrowthCheck chk;
    chk.edge = e;
    chk.length_after = surface::curve_length(rep, rep.edge_word(e));
    chk.bound = bound;
    chk.satisfied = chk.length_after <= bound + 1e-9;
    report.edges.push_back(chk);
    report.trivially_disjoint =
        report.trivially_disjoint &&
        std::abs(chk.length_after - fn.lengths[static_cast<std::size_t>(e)]) <= 1e-6;
  }
  return report;
}

EnergyReport collar_testmap_energy(int genus, double mc_length, double eps, int ramp_resolution) {
  if (genus < 2) fail(ErrorKind::GenusTooSmall, "energy evaluator needs genus >= 2");
  if (!(eps > 0.0)) fail(ErrorKind::NonPositiveLength, "collar half-width must be positive");
  if (mc_length < 0.0) fail(ErrorKind::InvalidInput, "lamination length must be >= 0");

  double chi = 2.0 * genus - 2.0;
  // Unit-length core geodesic; the weight carries the whole lamination length.
  double w = mc_length;

  // Quintic smoothstep ramp derivative, rescaled to [-eps, eps] -> [0, w].
  auto ramp_slope = [&](double r) {
    double u = (r + eps) / (2.0 * eps);
    double su = 30.0 * u * u * (1.0 - u) * (1.0 - u);
    return w * su / (2.0 * eps);
  };

  int panels = std::max(ramp_resolution, 64);
  if (panels % 2 != 0) ++panels;
  double h = 2.0 * eps / panels;
  double acc = 0.0;
  for (int i = 0; i <= panels; ++i) {
    double r = -eps + i * h;
    double g = ramp_slope(r);
    double f = std::sqrt(2.0 + g * g) * std::cosh(r);
    double wgt = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += wgt * f;
  }
  double collar_integral = acc * h / 3.0;

  double collar_area = 2.0 * std::sinh(eps);
  EnergyReport rep;
  rep.eps = eps;
  rep.quadrature_points = panels + 1;
  rep.collar_contribution = collar_integral;
  rep.isometric_contribution = std::sqrt(2.0) * (2.0 * M_PI * chi - collar_area);
  rep.total_energy = rep.collar_contribution + rep.isometric_contribution;
  return rep;
}

}  // namespace adsvol::deform
