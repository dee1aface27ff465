#pragma once

#include <array>

#include "adsvol/common.hpp"

// Exact-formula primitives for the hyperbolic plane in the upper half-plane
// model. The boundary circle is R together with a distinguished point at
// infinity; infinity is an explicit variant, never a large float, so that
// axes of upper-triangular elements stay exact.

namespace adsvol::hypgeom {

inline constexpr double kDetTolerance = 1e-9;
inline constexpr double kClassTolerance = 1e-9;

// 2x2 real matrix of unit determinant modulo sign. Normalized form: det = +1,
// first nonzero entry in order (a, b, c, d) positive.
struct Mobius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
};

Mobius make_mobius(double a, double b, double c, double d);
Mobius normalized(const Mobius& m);
Mobius identity();
Mobius compose(const Mobius& m1, const Mobius& m2);
Mobius inverse(const Mobius& m);
double trace(const Mobius& m);

enum class MobiusKind { Elliptic, Parabolic, Hyperbolic };

struct Classification {
  MobiusKind kind;
  bool is_identity;
};

Classification classify(const Mobius& m);
bool is_hyperbolic(const Mobius& m);

// 2 arccosh(|tr|/2); requires classify(m) == Hyperbolic.
double translation_length(const Mobius& m);

struct BoundaryPoint {
  double x = 0.0;
  bool infinite = false;

  static BoundaryPoint at(double v) { return {v, false}; }
  static BoundaryPoint infinity() { return {0.0, true}; }

  friend bool operator==(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite;
    return p.x == q.x;
  }
};

// Unordered pair of distinct boundary points.
struct GeodesicLine {
  BoundaryPoint p, q;
};

GeodesicLine make_geodesic(BoundaryPoint p, BoundaryPoint q);
GeodesicLine make_geodesic(double p, double q);

struct PlanePoint {
  double x = 0.0;
  double y = 1.0;  // y > 0
};

GeodesicLine axis(const Mobius& m);  // requires Hyperbolic
BoundaryPoint apply(const Mobius& m, const BoundaryPoint& p);
GeodesicLine apply(const Mobius& m, const GeodesicLine& g);
PlanePoint apply(const Mobius& m, const PlanePoint& z);

// True iff the endpoint pairs are linked on the boundary circle. The four
// endpoints must be pairwise distinct; a shared endpoint raises SharedEndpoint.
bool geodesics_cross(const GeodesicLine& g1, const GeodesicLine& g2);

// 0 for crossing or endpoint-sharing lines, else the distance between the
// disjoint geodesics by the cross-ratio closed form
//   cosh d = |2(ab + cd) - (a+b)(c+d)| / (|a-b| |c-d|).
double geodesic_distance(const GeodesicLine& g1, const GeodesicLine& g2);

double point_distance(const PlanePoint& z, const PlanePoint& w);
double point_to_geodesic_distance(const PlanePoint& z, const GeodesicLine& g);

// Arclength parametrization, t = 0 at the standardizer preimage of i.
PlanePoint point_on_geodesic(const GeodesicLine& g, double t);

// Foot on g1 of the common perpendicular of two disjoint geodesics.
PlanePoint common_perpendicular_foot(const GeodesicLine& g1, const GeodesicLine& g2);

// Maps g.p -> 0, g.q -> infinity.
Mobius geodesic_standardizer(const GeodesicLine& g);
// Maps (repelling, attracting) fixed points of a hyperbolic element to (0, inf).
Mobius standardizer(const Mobius& m);

// arcsinh(1 / sinh(eps/2)); half-width of the embedded collar of a geodesic
// of length eps. Strictly decreasing; eps <= 0 raises NonPositiveLength.
double collar_width(double eps);

// Side B of the right-angled hexagon identity sinh(A) sinh(B/2) = cosh(M/2):
// B = 2 arcsinh(cosh(M/2)/sinh(A)). A <= 0 raises NonPositiveLength.
double hexagon_opposite(double A, double M);

}  // namespace adsvol::hypgeom
