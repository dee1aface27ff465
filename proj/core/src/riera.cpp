#include "adsvol/riera.hpp"

#include <algorithm>
#include <cmath>

namespace adsvol::riera {

using curves::CurveClass;
using curves::Letter;
using hypgeom::GeodesicLine;
using hypgeom::Mobius;
using surface::HolonomyRep;

double series_term(double u) {
  if (!(u > 1.0)) fail(ErrorKind::InvalidInput, "series term needs u > 1");
  if (u > 1e2) {
    // u log((u+1)/(u-1)) - 2 = 2/(3u^2) + 2/(5u^4) + 2/(7u^6) + ...
    double w = 1.0 / (u * u);
    return w * (2.0 / 3.0 + w * (2.0 / 5.0 + w * (2.0 / 7.0 + w * 2.0 / 9.0)));
  }
  return u * std::log1p(2.0 / (u - 1.0)) - 2.0;
}

RieraReport wp_grad_normsq_lower(const HolonomyRep& rep, const CurveClass& c, int word_radius,
                                 std::uint64_t budget) {
  if (word_radius < 0) fail(ErrorKind::InvalidInput, "word radius must be >= 0");
  Mobius C = rep.evaluate(c);
  if (!hypgeom::is_hyperbolic(C)) fail(ErrorKind::NotHyperbolic, "curve class is not essential");
  double len = hypgeom::translation_length(C);

  RieraReport report;
  report.word_radius = word_radius;
  report.base_term = (2.0 / M_PI) * len;
  report.lower_bound = report.base_term;
  if (word_radius == 0) return report;

  detail::Mat2 S = curves::internal::mat2_of(hypgeom::standardizer(C));
  GeodesicLine base_axis = hypgeom::axis(C);
  curves::internal::AxisPairTable cosets(len, curves::kAxisPairTolerance);

  std::vector<double> terms;
  const std::vector<Letter>& cw = c.word();
  bool ok = curves::internal::visit_reduced_words(
      2 * rep.genus(), word_radius, budget, [&](const std::vector<Letter>& w) {
        // Syntactic <C> coset reduction; duplicates fall to the axis table.
        if (curves::internal::has_power_prefix(w, cw)) return;
        if (curves::internal::has_power_suffix(w, cw)) return;
        curves::internal::NormalizedAxis ax =
            curves::internal::normalize_axis(S * rep.evaluate_dd(w), base_axis);
        if (!ax.usable) return;  // shares 0/inf within noise: the identity coset boundary
        if ((ax.p > 0.0) != (ax.q > 0.0)) {
          report.crossing_detected = true;
          fail(ErrorKind::NotSimple,
               "a conjugate axis crosses Axis(C); the gradient series needs a simple class");
        }
        auto ins = cosets.insert(ax.p, ax.q);
        if (!ins.fresh) return;
        GeodesicLine moved = hypgeom::make_geodesic(ax.p, ax.q);
        GeodesicLine axis0 = hypgeom::make_geodesic(hypgeom::BoundaryPoint::at(0.0),
                                                    hypgeom::BoundaryPoint::infinity());
        double dist = hypgeom::geodesic_distance(axis0, moved);
        double u = std::cosh(dist);
        // Every retained term must have u > 1 + 1e-9; dropping a positive
        // term only lowers the certified bound.
        if (dist <= kNearTangentDistance || u <= 1.0 + 1e-9) {
          ++report.n_skipped_near_tangent;
          return;
        }
        terms.push_back(series_term(u));
      });
  if (!ok) fail(ErrorKind::BudgetExceeded, "gradient series enumeration exceeded the budget");

  // Deterministic compensated accumulation in enumeration order.
  double sum = 0.0, comp = 0.0;
  for (double t : terms) {
    double y = t - comp;
    double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  report.n_terms = terms.size();
  report.series_sum = (2.0 / M_PI) * sum;
  report.lower_bound = report.base_term + report.series_sum;
  return report;
}

double mainestimate_ratio(const HolonomyRep& rep, const CurveClass& c, int word_radius,
                          std::uint64_t budget) {
  RieraReport r = wp_grad_normsq_lower(rep, c, word_radius, budget);
  double len = r.base_term * M_PI / 2.0;
  double chi = 2.0 * rep.genus() - 2.0;
  return std::sqrt(r.lower_bound) * chi / len;
}

}  // namespace adsvol::riera
