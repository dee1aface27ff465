#pragma once

#include <cstdint>

#include "adsvol/curves.hpp"

namespace adsvol::riera {

inline constexpr double kNearTangentDistance = 1e-7;

// Certified truncation of the positive double-coset series
//   ||grad l_c||^2_WP = (2/pi) l_c + (2/pi) sum F(u(D)),
//   F(u) = u log((u+1)/(u-1)) - 2,  u(D) = cosh d(Axis(C), Axis(D C D^-1)).
// Every retained term is positive, so lower_bound certifies the full value
// from below at any truncation radius.
struct RieraReport {
  double base_term = 0.0;
  double series_sum = 0.0;
  double lower_bound = 0.0;
  std::uint64_t n_terms = 0;
  int word_radius = 0;
  bool crossing_detected = false;
  std::uint64_t n_skipped_near_tangent = 0;
};

double series_term(double u);

// Enumerates conjugating words of length <= word_radius, reduces double
// cosets <C>\G/<C> by normalized axis pairs, and accumulates the series.
// A translate whose axis crosses Axis(C) raises NotSimple: the formula is
// stated for simple classes, whose lifts are pairwise disjoint. Near-tangent
// translates (distance <= 1e-7) are skipped and counted; skipping only
// lowers a positive-term lower bound.
RieraReport wp_grad_normsq_lower(const surface::HolonomyRep& rep, const curves::CurveClass& c,
                                 int word_radius,
                                 std::uint64_t budget = curves::kDefaultEnumerationBudget);

// sqrt(lower_bound) |chi| / l_c: empirical per-instance lower estimate of the
// universal factor in ||grad l_lambda|| >= (a/|chi|) l_lambda.
double mainestimate_ratio(const surface::HolonomyRep& rep, const curves::CurveClass& c,
                          int word_radius,
                          std::uint64_t budget = curves::kDefaultEnumerationBudget);

}  // namespace adsvol::riera
