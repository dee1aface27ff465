#include "adsvol/hypgeom.hpp"

#include <algorithm>
#include <cmath>

namespace adsvol::hypgeom {

namespace {

// Compensated 2x2 determinant (Kahan): accurate to ~1.5 ulp of the result
// even when ad and bc cancel through many orders of magnitude.
double det(const Mobius& m) {
  double w = m.b * m.c;
  double e = std::fma(m.b, m.c, -w);
  double f = std::fma(m.a, m.d, -w);
  return f - e;
}

Mobius canonical_sign(Mobius m) {
  double lead = m.a != 0.0 ? m.a : (m.b != 0.0 ? m.b : (m.c != 0.0 ? m.c : m.d));
  if (lead < 0.0) return {-m.a, -m.b, -m.c, -m.d};
  return m;
}

double finite_or_fail(const BoundaryPoint& p) {
  if (p.infinite) fail(ErrorKind::InvalidInput, "finite boundary point expected");
  return p.x;
}

}  // namespace

Mobius normalized(const Mobius& m) {
  double dt = det(m);
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    fail(ErrorKind::InvalidInput, "matrix determinant must be positive and finite");
  }
  double s = std::sqrt(dt);
  return canonical_sign({m.a / s, m.b / s, m.c / s, m.d / s});
}

Mobius make_mobius(double a, double b, double c, double d) { return normalized({a, b, c, d}); }

Mobius identity() { return {1.0, 0.0, 0.0, 1.0}; }

Mobius compose(const Mobius& m1, const Mobius& m2) {
  Mobius r{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
           m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
  return normalized(r);
}

Mobius inverse(const Mobius& m) { return canonical_sign({m.d, -m.b, -m.c, m.a}); }

double trace(const Mobius& m) { return m.a + m.d; }

Classification classify(const Mobius& m) {
  double t = std::abs(trace(m));
  bool ident = std::abs(m.a - 1.0) <= kClassTolerance && std::abs(m.d - 1.0) <= kClassTolerance &&
               std::abs(m.b) <= kClassTolerance && std::abs(m.c) <= kClassTolerance;
  if (t > 2.0 + kClassTolerance) return {MobiusKind::Hyperbolic, false};
  if (std::abs(t - 2.0) <= kClassTolerance) return {MobiusKind::Parabolic, ident};
  return {MobiusKind::Elliptic, false};
}

bool is_hyperbolic(const Mobius& m) { return classify(m).kind == MobiusKind::Hyperbolic; }

double translation_length(const Mobius& m) {
  if (!is_hyperbolic(m)) fail(ErrorKind::NotHyperbolic, "translation length of a non-hyperbolic element");
  return 2.0 * std::acosh(std::abs(trace(m)) / 2.0);
}

GeodesicLine make_geodesic(BoundaryPoint p, BoundaryPoint q) {
  if (p == q) fail(ErrorKind::InvalidInput, "geodesic endpoints must differ");
  return {p, q};
}

GeodesicLine make_geodesic(double p, double q) {
  return make_geodesic(BoundaryPoint::at(p), BoundaryPoint::at(q));
}

GeodesicLine axis(const Mobius& m) {
  if (!is_hyperbolic(m)) fail(ErrorKind::NotHyperbolic, "axis of a non-hyperbolic element");
  if (m.c == 0.0) {
    // Fixed points: infinity and the root of (d-a)x = b.
    return {BoundaryPoint::infinity(), BoundaryPoint::at(m.b / (m.d - m.a))};
  }
  // Roots of c x^2 + (d-a) x - b = 0, solved in the cancellation-free order.
  double B = m.d - m.a;
  double disc = trace(m) * trace(m) - 4.0;
  double s = std::sqrt(std::max(disc, 0.0));
  double qq = -0.5 * (B + std::copysign(s, B));
  double x1, x2;
  if (qq != 0.0) {
    x1 = qq / m.c;
    x2 = -m.b / qq;
  } else {  // B == 0 and s == 0 cannot happen for hyperbolic m
    x1 = s / (2.0 * m.c);
    x2 = -x1;
  }
  return {BoundaryPoint::at(x1), BoundaryPoint::at(x2)};
}

BoundaryPoint apply(const Mobius& m, const BoundaryPoint& p) {
  if (p.infinite) {
    if (m.c == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::at(m.a / m.c);
  }
  double den = m.c * p.x + m.d;
  if (den == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint::at((m.a * p.x + m.b) / den);
}

GeodesicLine apply(const Mobius& m, const GeodesicLine& g) {
  return make_geodesic(apply(m, g.p), apply(m, g.q));
}

PlanePoint apply(const Mobius& m, const PlanePoint& z) {
  // (az+b)(conj(cz+d)) / |cz+d|^2
  double cr = m.c * z.x + m.d;
  double ci = m.c * z.y;
  double nr = m.a * z.x + m.b;
  double ni = m.a * z.y;
  double den = cr * cr + ci * ci;
  return {(nr * cr + ni * ci) / den, (ni * cr - nr * ci) / den};
}

namespace {

bool shares_endpoint(const GeodesicLine& g1, const GeodesicLine& g2) {
  return g1.p == g2.p || g1.p == g2.q || g1.q == g2.p || g1.q == g2.q;
}

bool strictly_between(double x, double lo, double hi) { return lo < x && x < hi; }

}  // namespace

bool geodesics_cross(const GeodesicLine& g1, const GeodesicLine& g2) {
  if (shares_endpoint(g1, g2)) fail(ErrorKind::SharedEndpoint, "geodesics share an endpoint");
  // Reduce to: does exactly one endpoint of g2 lie in the arc cut by g1?
  if (g1.p.infinite || g1.q.infinite) {
    double u = g1.p.infinite ? g1.q.x : g1.p.x;
    // Arcs are (-inf, u) and (u, +inf); an infinite endpoint of g2 cannot
    // occur here (it would be shared).
    return (g2.p.x > u) != (g2.q.x > u);
  }
  double lo = std::min(g1.p.x, g1.q.x);
  double hi = std::max(g1.p.x, g1.q.x);
  bool pin = !g2.p.infinite && strictly_between(g2.p.x, lo, hi);
  bool qin = !g2.q.infinite && strictly_between(g2.q.x, lo, hi);
  return pin != qin;
}

double geodesic_distance(const GeodesicLine& g1, const GeodesicLine& g2) {
  if (shares_endpoint(g1, g2)) return 0.0;
  if (geodesics_cross(g1, g2)) return 0.0;

  int n_inf = (g1.p.infinite ? 1 : 0) + (g1.q.infinite ? 1 : 0) + (g2.p.infinite ? 1 : 0) +
              (g2.q.infinite ? 1 : 0);
  double v;
  if (n_inf == 0) {
    double a = g1.p.x, b = g1.q.x, c = g2.p.x, d = g2.q.x;
    v = std::abs(2.0 * (a * b + c * d) - (a + b) * (c + d)) /
        (std::abs(a - b) * std::abs(c - d));
  } else {
    // One infinite endpoint total: cosh d = |2c - a - b| / |a - b| where the
    // finite pair is (a, b).
    const GeodesicLine& fin = (g1.p.infinite || g1.q.infinite) ? g2 : g1;
    const GeodesicLine& inf = (g1.p.infinite || g1.q.infinite) ? g1 : g2;
    double a = fin.p.x, b = fin.q.x;
    double c = inf.p.infinite ? inf.q.x : inf.p.x;
    v = std::abs(2.0 * c - a - b) / std::abs(a - b);
  }
  return std::acosh(std::max(v, 1.0));
}

double point_distance(const PlanePoint& z, const PlanePoint& w) {
  double dx = z.x - w.x;
  double dy = z.y - w.y;
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z.y * w.y));
}

Mobius geodesic_standardizer(const GeodesicLine& g) {
  // p -> 0, q -> inf.
  if (g.p.infinite) return normalized({0.0, -1.0, 1.0, -g.q.x});   // z -> -1/(z - q)
  if (g.q.infinite) return normalized({1.0, -g.p.x, 0.0, 1.0});    // z -> z - p
  double p = g.p.x, q = g.q.x;
  if (p > q) return normalized({1.0, -p, 1.0, -q});
  return normalized({1.0, -p, -1.0, q});
}

Mobius standardizer(const Mobius& m) {
  if (!is_hyperbolic(m)) fail(ErrorKind::NotHyperbolic, "standardizer of a non-hyperbolic element");
  GeodesicLine ax = axis(m);
  // Order (repelling, attracting): attracting endpoint x has |c x + d| > 1.
  auto magnitude = [&](const BoundaryPoint& p) {
    if (p.infinite) return std::abs(m.a);  // derivative a/d at inf; |a| > |d| iff attracting
    return std::abs(m.c * p.x + m.d);
  };
  BoundaryPoint rep = ax.p, att = ax.q;
  if (magnitude(rep) > magnitude(att)) std::swap(rep, att);
  return geodesic_standardizer(make_geodesic(rep, att));
}

PlanePoint point_on_geodesic(const GeodesicLine& g, double t) {
  Mobius s = geodesic_standardizer(g);
  return apply(inverse(s), PlanePoint{0.0, std::exp(t)});
}

double point_to_geodesic_distance(const PlanePoint& z, const GeodesicLine& g) {
  Mobius s = geodesic_standardizer(g);
  PlanePoint w = apply(s, z);
  return std::acosh(std::max(1.0, std::hypot(w.x, w.y) / w.y));
}

PlanePoint common_perpendicular_foot(const GeodesicLine& g1, const GeodesicLine& g2) {
  if (shares_endpoint(g1, g2) || geodesics_cross(g1, g2)) {
    fail(ErrorKind::InvalidInput, "common perpendicular requires disjoint geodesics");
  }
  Mobius s = geodesic_standardizer(g1);
  BoundaryPoint p = apply(s, g2.p);
  BoundaryPoint q = apply(s, g2.q);
  double pp = finite_or_fail(p), qq = finite_or_fail(q);
  // Disjoint from (0, inf) means both images share a sign; foot at i sqrt(pq).
  double h = std::sqrt(pp * qq);
  return apply(inverse(s), PlanePoint{0.0, h});
}

double collar_width(double eps) {
  if (!(eps > 0.0)) fail(ErrorKind::NonPositiveLength, "collar width needs a positive length");
  return std::asinh(1.0 / std::sinh(eps / 2.0));
}

double hexagon_opposite(double A, double M) {
  if (!(A > 0.0)) fail(ErrorKind::NonPositiveLength, "hexagon side A must be positive");
  return 2.0 * std::asinh(std::cosh(M / 2.0) / std::sinh(A));
}

}  // namespace adsvol::hypgeom
