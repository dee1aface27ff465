#pragma once

#include <vector>

#include "adsvol/curves.hpp"
#include "adsvol/surface.hpp"

namespace adsvol::deform {

enum class TwistDirection { Left, Right };

// Earthquake data supported on the decomposition: one weight per edge.
// Positive twist offsets realize the Left direction in this chart; the
// chirality convention is ours and is fixed here once.
struct TwistSpec {
  std::vector<double> weights;  // >= 0, at least one positive
  TwistDirection direction = TwistDirection::Left;
};

// Shifts twists by +w (Left) or -w (Right); lengths unchanged.
surface::FNCoordinates earthquake(const surface::FNCoordinates& fn, const TwistSpec& spec);

// Central finite difference of the witness length across twist +-step on one
// edge.
double twist_length_derivative(const surface::SurfaceTopology& topo,
                               const surface::FNCoordinates& fn, int edge,
                               const curves::CurveClass& witness, double step);

struct EdgeGrowthCheck {
  int edge = 0;
  double length_after = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

struct GrowthBoundReport {
  double level = 0.0;          // L
  double lamination_length = 0.0;
  double collar = 0.0;         // d(L)
  bool trivially_disjoint = true;  // decomposition-supported: lengths unchanged
  std::vector<EdgeGrowthCheck> edges;
};

// Checks l_edge(h') <= L + l_lambda(h)/d(L) for every decomposition edge.
// For decomposition-supported specs the edges are disjoint from the
// lamination, so equality l(h') = l(h) holds and the report says so.
GrowthBoundReport length_growth_bound_check(const surface::SurfaceTopology& topo,
                                            const surface::FNCoordinates& fn,
                                            const TwistSpec& spec, double level);

struct EnergyReport {
  double total_energy = 0.0;
  double collar_contribution = 0.0;
  double isometric_contribution = 0.0;
  double eps = 0.0;
  int quadrature_points = 0;
};

// Total-variation energy of the collar-supported shear test map: outside an
// eps-collar of a unit-length geodesic carrying weight mc_length the map is
// an isometry (density sqrt(2)); inside, a quintic smoothstep ramp g carries
// the full shift and the density is sqrt(2 + g'(r)^2). Composite Simpson
// quadrature with at least 64 panels.
EnergyReport collar_testmap_energy(int genus, double mc_length, double eps, int ramp_resolution);

}  // namespace adsvol::deform
