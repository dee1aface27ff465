#pragma once

// Independent oracles used to pin expected values. Everything here
// deliberately avoids the library's own computational routes: distances come
// from nested golden-section minimization, derivatives from Richardson
// extrapolation, intersection counts from fundamental-segment crossings, and
// the gradient series from a plain quadratic-time coset scan.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "adsvol/curves.hpp"
#include "adsvol/hypgeom.hpp"
#include "adsvol/riera.hpp"
#include "adsvol/surface.hpp"

namespace oracle {

using adsvol::curves::CurveClass;
using adsvol::curves::Letter;
using adsvol::hypgeom::BoundaryPoint;
using adsvol::hypgeom::GeodesicLine;
using adsvol::hypgeom::Mobius;
using adsvol::hypgeom::PlanePoint;
using adsvol::surface::HolonomyRep;

// Deterministic uniform doubles independent of libstdc++ distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    double u = double(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-12) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  while (hi - lo > tol) {
    if (f(c) < f(d)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  return 0.5 * (lo + hi);
}

// Distance between disjoint geodesics by minimizing the point-to-point
// distance over both arclength parameters.
inline double geodesic_distance_minimization(const GeodesicLine& g1, const GeodesicLine& g2) {
  namespace hg = adsvol::hypgeom;
  auto outer = [&](double s) {
    PlanePoint z = hg::point_on_geodesic(g1, s);
    auto inner = [&](double t) { return hg::point_distance(z, hg::point_on_geodesic(g2, t)); };
    double t = golden_min(inner, -40.0, 40.0, 1e-13);
    return inner(t);
  };
  double s = golden_min(outer, -40.0, 40.0, 1e-13);
  return outer(s);
}

// Richardson-extrapolated central difference.
inline double richardson_derivative(const std::function<double(double)>& f, double x, double h) {
  double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  double d2 = (f(x + h / 2.0) - f(x - h / 2.0)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

// Geometric intersection count: conjugate axes of c2 crossing Axis(c1),
// reduced to one fundamental segment by placing the crossing height in
// [1, exp(period)) and deduplicated by relative endpoint comparison with
// explicit +-1 window shifts. Meant for radius <= 5: deeper words amplify
// the base-axis rounding beyond the dedup tolerance.
inline std::uint64_t intersection_fundamental_segment(const HolonomyRep& rep, const CurveClass& c1,
                                                      const CurveClass& c2, int radius) {
  namespace hg = adsvol::hypgeom;
  Mobius C1 = rep.evaluate(c1);
  double period = hg::translation_length(C1);
  adsvol::detail::Mat2 S = adsvol::curves::internal::mat2_of(hg::standardizer(C1));
  GeodesicLine base = hg::axis(rep.evaluate(c2));

  std::vector<std::array<double, 2>> crossing_axes;
  // Deep words map the base axis back onto itself with derivative up to
  // exp(word length * max generator translation), amplifying the double
  // rounding of the base endpoints; genuine distinct cosets sit far above
  // this tolerance at desk scale.
  auto near = [](double x, double y) { return std::abs(x - y) <= 1e-5 * std::max(1.0, std::abs(y)); };
  auto consider = [&](const adsvol::detail::Mat2& d) {
    adsvol::detail::Mat2 M = S * d;
    BoundaryPoint p = adsvol::curves::internal::apply_dd(M, base.p);
    BoundaryPoint q = adsvol::curves::internal::apply_dd(M, base.q);
    if (p.infinite || q.infinite) return;
    double lo = std::min(p.x, q.x), hi = std::max(p.x, q.x);
    if (lo == 0.0 || hi == 0.0) return;
    if ((lo > 0.0) == (hi > 0.0)) return;
    double height = std::sqrt(-lo * hi);
    double k = std::floor(std::log(height) / period);
    double s = std::exp(-k * period);
    lo *= s;
    hi *= s;
    for (const auto& a : crossing_axes) {
      for (int dk = -1; dk <= 1; ++dk) {
        double ss = std::exp(dk * period);
        if (near(lo * ss, a[0]) && near(hi * ss, a[1])) return;
      }
    }
    crossing_axes.push_back({lo, hi});
  };
  consider(adsvol::detail::Mat2::identity());
  adsvol::curves::internal::visit_reduced_words(
      2 * rep.genus(), radius, 100'000'000,
      [&](const std::vector<Letter>& w) { consider(rep.evaluate_dd(w)); });
  return crossing_axes.size();
}

// Brute-force gradient series: every word up to the radius, double cosets
// deduplicated by explicit integer-shift comparison of axis pairs sorted by
// endpoint ratio.
struct BruteRiera {
  double base = 0.0;
  double series = 0.0;
  std::uint64_t n_terms = 0;
  bool crossing = false;
};

inline BruteRiera riera_brute_force(const HolonomyRep& rep, const CurveClass& c, int radius) {
  namespace hg = adsvol::hypgeom;
  Mobius C = rep.evaluate(c);
  double len = hg::translation_length(C);
  adsvol::detail::Mat2 S = adsvol::curves::internal::mat2_of(hg::standardizer(C));
  GeodesicLine base_axis = hg::axis(C);

  BruteRiera out;
  out.base = 2.0 / M_PI * len;

  struct Pair {
    double p, q, ratio;
  };
  std::vector<Pair> kept;
  auto consider = [&](const adsvol::detail::Mat2& d) {
    if (out.crossing) return;
    adsvol::detail::Mat2 M = S * d;
    BoundaryPoint p = adsvol::curves::internal::apply_dd(M, base_axis.p);
    BoundaryPoint q = adsvol::curves::internal::apply_dd(M, base_axis.q);
    if (p.infinite || q.infinite) return;
    double pp = p.x, qq = q.x;
    if (std::abs(pp) < 1e-12 || std::abs(qq) < 1e-12) return;
    if (std::abs(pp) > 1e12 || std::abs(qq) > 1e12) return;
    if ((pp > 0.0) != (qq > 0.0)) {
      out.crossing = true;
      return;
    }
    double lo = std::min(pp, qq), hi = std::max(pp, qq);
    double ratio = hi / lo;
    for (const Pair& k : kept) {
      if (std::abs(k.ratio - ratio) > 1e-6 * std::max(1.0, std::abs(ratio))) continue;
      double shift = std::round(std::log(std::abs(k.p / lo)) / len);
      double s = std::exp(shift * len);
      if (std::abs(lo * s - k.p) <= 1e-7 * std::max(1.0, std::abs(k.p)) &&
          std::abs(hi * s - k.q) <= 1e-7 * std::max(1.0, std::abs(k.q))) {
        return;
      }
    }
    kept.push_back({lo, hi, ratio});
  };
  // Skip words carrying a full period of C at either end: they repeat the
  // coset of a shorter word through a map whose derivative at the base axis
  // endpoints amplifies their double rounding past any dedup tolerance.
  adsvol::curves::internal::visit_reduced_words(
      2 * rep.genus(), radius, 100'000'000, [&](const std::vector<Letter>& w) {
        if (adsvol::curves::internal::has_power_prefix(w, c.word())) return;
        if (adsvol::curves::internal::has_power_suffix(w, c.word())) return;
        consider(rep.evaluate_dd(w));
      });

  double sum = 0.0;
  for (const Pair& k : kept) {
    double u = std::abs((k.p + k.q) / (k.q - k.p));
    if (u <= std::cosh(adsvol::riera::kNearTangentDistance)) continue;
    // log1p keeps the absolute error of each term near machine epsilon; the
    // naive ratio-log form loses u * eps, which dominates the far tail.
    sum += u * std::log1p(2.0 / (u - 1.0)) - 2.0;
    ++out.n_terms;
  }
  out.series = 2.0 / M_PI * sum;
  return out;
}

// Random hyperbolic surfaces and random Mobius maps for property tests.
inline adsvol::surface::FNCoordinates random_fn(Rng& rng, double lmin, double lmax, double tmax) {
  adsvol::surface::FNCoordinates fn;
  for (int i = 0; i < 3; ++i) {
    fn.lengths.push_back(rng.uniform(lmin, lmax));
    fn.twists.push_back(rng.uniform(-tmax, tmax));
  }
  return fn;
}

inline Mobius random_mobius(Rng& rng) {
  namespace hg = adsvol::hypgeom;
  Mobius m = hg::identity();
  for (int k = 0; k < 3; ++k) {
    double l = rng.uniform(0.1, 2.0);
    double q = rng.uniform(-2.0, 2.0);
    Mobius tr = hg::make_mobius(std::exp(l / 2), 0, 0, std::exp(-l / 2));
    Mobius par = hg::make_mobius(1, q, 0, 1);
    m = hg::compose(m, hg::compose(par, tr));
  }
  return m;
}

}  // namespace oracle
