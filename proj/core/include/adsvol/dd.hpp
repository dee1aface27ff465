#pragma once

#include <cmath>

// Double-double scalars and 2x2 matrices. Holonomy matrices of twisted
// surfaces reach entries of order exp(|tau| + collar depth); verifying the
// surface-group relation and reading traces of commutator words cancels
// those magnitudes, which exceeds what 53-bit products can resolve. The
// error-free transforms below give ~106 significant bits for the same cost
// class of operations.

namespace adsvol::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd x, dd y) {
  dd s = two_sum(x.hi, y.hi);
  dd t = two_sum(x.lo, y.lo);
  double lo = s.lo + t.hi;
  dd r = quick_two_sum(s.hi, lo);
  return quick_two_sum(r.hi, r.lo + t.lo);
}

inline dd operator-(dd x) { return {-x.hi, -x.lo}; }
inline dd operator-(dd x, dd y) { return x + (-y); }

inline dd operator*(dd x, dd y) {
  dd p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd x, dd y) {
  double q1 = x.hi / y.hi;
  dd r = x - dd(q1) * y;
  double q2 = r.hi / y.hi;
  r = r - dd(q2) * y;
  double q3 = r.hi / y.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd dd_sqrt(dd x) {
  if (x.hi <= 0.0) return dd(std::sqrt(x.hi));
  double y = std::sqrt(x.hi);
  dd e = (x - dd(y) * dd(y)) / dd(2.0 * y);
  return dd(y) + e;
}

inline dd dd_abs(dd x) { return x.hi < 0.0 || (x.hi == 0.0 && x.lo < 0.0) ? -x : x; }

inline bool operator<(dd x, dd y) { return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo); }
inline bool operator>(dd x, dd y) { return y < x; }

// Row-major 2x2 matrix over dd.
struct Mat2 {
  dd a, b, c, d;

  static Mat2 identity() { return {dd(1), dd(0), dd(0), dd(1)}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }

  dd det() const { return a * d - b * c; }
  dd trace() const { return a + d; }

  Mat2 inverse() const {
    dd dt = det();
    return {d / dt, (-b) / dt, (-c) / dt, a / dt};
  }

  // Scales so det becomes +1; requires det > 0.
  Mat2 det_normalized() const {
    dd s = dd_sqrt(det());
    return {a / s, b / s, c / s, d / s};
  }
};

}  // namespace adsvol::detail
