#include "adsvol/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace adsvol::curves {

using hypgeom::BoundaryPoint;
using hypgeom::GeodesicLine;
using hypgeom::Mobius;
using surface::HolonomyRep;

WeightedMulticurve::WeightedMulticurve(std::vector<Component> components) {
  for (const Component& c : components) {
    if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
      fail(ErrorKind::InvalidInput, "multicurve weights must be positive and finite");
    }
  }
  // Merge duplicate components.
  std::map<std::pair<int, std::string>, double> merged;
  std::vector<std::pair<int, CurveClass>> order;  // remembers first-seen order
  for (const Component& c : components) {
    std::pair<int, std::string> key;
    if (std::holds_alternative<int>(c.curve)) {
      key = {std::get<int>(c.curve), ""};
    } else {
      key = {-1, std::get<CurveClass>(c.curve).str()};
    }
    auto [it, fresh] = merged.try_emplace(key, 0.0);
    it->second += c.weight;
    if (fresh) components_.push_back(c);
  }
  for (Component& c : components_) {
    std::pair<int, std::string> key;
    if (std::holds_alternative<int>(c.curve)) {
      key = {std::get<int>(c.curve), ""};
    } else {
      key = {-1, std::get<CurveClass>(c.curve).str()};
    }
    c.weight = merged.at(key);
  }
  if (components_.empty()) fail(ErrorKind::InvalidInput, "multicurve needs at least one component");
}

namespace internal {

bool visit_reduced_words(int n_gens, int max_len, std::uint64_t budget,
                         const std::function<void(const std::vector<Letter>&)>& visit) {
  std::vector<Letter> stack;
  std::uint64_t visited = 0;
  // Iterative DFS over letter codes 0 .. 2*n_gens-1.
  std::vector<int> next;
  next.push_back(0);
  while (!next.empty()) {
    int code = next.back();
    if (code >= 2 * n_gens) {
      next.pop_back();
      if (!stack.empty()) stack.pop_back();
      if (!next.empty()) ++next.back();
      continue;
    }
    Letter l{static_cast<std::uint8_t>(code / 2), (code % 2) != 0};
    if (!stack.empty() && stack.back() == l.inverted()) {
      ++next.back();
      continue;
    }
    stack.push_back(l);
    if (++visited > budget) return false;
    visit(stack);
    if (static_cast<int>(stack.size()) < max_len) {
      next.push_back(0);
    } else {
      stack.pop_back();
      ++next.back();
    }
  }
  return true;
}

AxisPairTable::InsertResult AxisPairTable::insert(double p, double q) {
  double lo = std::min(p, q), hi = std::max(p, q);
  double m = std::max(std::abs(lo), std::abs(hi));
  double k = -std::floor(std::log(m) / period_);
  double s = std::exp(k * period_);
  lo *= s;
  hi *= s;
  // Tolerance is relative past unit scale: merging a borderline duplicate
  // only lowers counts and positive-term sums, never inflates them.
  auto near = [this](double x, double y) {
    return std::abs(x - y) <= tol_ * std::max(1.0, std::abs(y));
  };
  for (int dk = -1; dk <= 1; ++dk) {
    double ss = dk == 0 ? 1.0 : (dk > 0 ? scale_ : 1.0 / scale_);
    double target = hi / ss;  // entries whose hi*ss matches our hi
    double slack = tol_ * std::max(1.0, std::abs(target)) * (1.0 + tol_);
    auto first = std::lower_bound(by_hi_.begin(), by_hi_.end(), target - slack,
                                  [](const Entry& e, double v) { return e.hi < v; });
    for (auto it = first; it != by_hi_.end() && it->hi <= target + slack; ++it) {
      if (near(it->hi * ss, hi) && near(it->lo * ss, lo)) return {false, it->index};
    }
  }
  std::size_t index = by_hi_.size();
  Entry e{lo, hi, index};
  by_hi_.insert(std::lower_bound(by_hi_.begin(), by_hi_.end(), e.hi,
                                 [](const Entry& x, double v) { return x.hi < v; }),
                e);
  return {true, index};
}

}  // namespace internal

std::vector<CurveClass> enumerate_classes(const HolonomyRep& rep, int max_word_length,
                                          std::uint64_t budget) {
  if (max_word_length < 1) fail(ErrorKind::InvalidInput, "max word length must be >= 1");
  std::set<CurveClass> classes;
  auto visit = [&](const std::vector<Letter>& w) {
    if (w.size() > 1 && w.front() == w.back().inverted()) return;  // not cyclically reduced
    classes.emplace(w);
  };
  if (!internal::visit_reduced_words(2 * rep.genus(), max_word_length, budget, visit)) {
    fail(ErrorKind::BudgetExceeded, "word enumeration exceeded the configured budget");
  }
  std::vector<CurveClass> out;
  out.reserve(classes.size());
  for (const CurveClass& c : classes) {
    double tr = std::abs(rep.evaluate_dd(c.word()).trace().value());
    if (tr > 2.0 + hypgeom::kClassTolerance) out.push_back(c);
  }
  return out;
}

CurveClass edge_class(const HolonomyRep& rep, int edge) { return rep.edge_word(edge); }

double multicurve_length(const HolonomyRep& rep, const WeightedMulticurve& mc) {
  double total = 0.0;
  for (const Component& c : mc.components()) {
    const CurveClass& cls = std::holds_alternative<int>(c.curve)
                                ? rep.edge_word(std::get<int>(c.curve))
                                : std::get<CurveClass>(c.curve);
    total += c.weight * surface::curve_length(rep, cls);
  }
  return total;
}

namespace internal {

// Strips leading/trailing one-period powers of the given cyclic word (or its
// inverse) from candidates; a cheap syntactic double-coset reduction, the
// numeric axis-pair table catches whatever survives.
bool has_power_prefix(const std::vector<Letter>& w, const std::vector<Letter>& c) {
  if (w.size() < c.size()) return false;
  auto match = [&](bool inv) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Letter want = inv ? c[c.size() - 1 - i].inverted() : c[i];
      if (!(w[i] == want)) return false;
    }
    return true;
  };
  return match(false) || match(true);
}

bool has_power_suffix(const std::vector<Letter>& w, const std::vector<Letter>& c) {
  if (w.size() < c.size()) return false;
  auto match = [&](bool inv) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Letter want = inv ? c[c.size() - 1 - i].inverted() : c[i];
      if (!(w[w.size() - c.size() + i] == want)) return false;
    }
    return true;
  };
  return match(false) || match(true);
}

}  // namespace internal

namespace internal {

detail::Mat2 mat2_of(const Mobius& m) {
  using detail::dd;
  return {dd(m.a), dd(m.b), dd(m.c), dd(m.d)};
}

// Boundary action computed in double-double. Word matrices at radius 6+
// carry entries far beyond what a double-rounded unit-determinant matrix can
// represent; the projective quantities stay well conditioned in dd.
BoundaryPoint apply_dd(const detail::Mat2& m, const BoundaryPoint& p) {
  using detail::dd;
  dd num, den;
  if (p.infinite) {
    num = m.a;
    den = m.c;
  } else {
    num = m.a * dd(p.x) + m.b;
    den = m.c * dd(p.x) + m.d;
  }
  double n = num.value(), d = den.value();
  if (d == 0.0 || !std::isfinite(n / d)) return BoundaryPoint::infinity();
  return BoundaryPoint::at(n / d);
}

NormalizedAxis normalize_axis(const detail::Mat2& frame_times_d, const GeodesicLine& base_axis) {
  BoundaryPoint p = apply_dd(frame_times_d, base_axis.p);
  BoundaryPoint q = apply_dd(frame_times_d, base_axis.q);
  NormalizedAxis out;
  if (p.infinite || q.infinite) return out;  // touches the frame axis endpoint
  if (p.x == q.x) return out;
  out.p = p.x;
  out.q = q.x;
  out.usable = std::abs(out.p) > 1e-12 && std::abs(out.q) > 1e-12 && std::abs(out.p) < 1e12 &&
               std::abs(out.q) < 1e12;
  return out;
}

}  // namespace internal

IntersectionResult intersection_number(const HolonomyRep& rep, const CurveClass& c1,
                                       const CurveClass& c2, int radius, std::uint64_t budget) {
  if (radius < 0) fail(ErrorKind::InvalidInput, "radius must be >= 0");
  Mobius C1 = rep.evaluate(c1);
  Mobius C2 = rep.evaluate(c2);
  if (!hypgeom::is_hyperbolic(C1) || !hypgeom::is_hyperbolic(C2)) {
    fail(ErrorKind::NotHyperbolic, "intersection number needs essential classes");
  }
  double period = hypgeom::translation_length(C1);
  detail::Mat2 S = internal::mat2_of(hypgeom::standardizer(C1));
  GeodesicLine base = hypgeom::axis(C2);

  internal::AxisPairTable crossing(period, kAxisPairTolerance);
  std::vector<int> min_word_len;  // per distinct crossing coset

  auto consider = [&](const detail::Mat2& d_word, int word_len) {
    internal::NormalizedAxis ax = internal::normalize_axis(S * d_word, base);
    if (!ax.usable) return;
    if ((ax.p > 0.0) == (ax.q > 0.0)) return;  // disjoint from (0, inf)
    auto r = crossing.insert(ax.p, ax.q);
    if (r.fresh) {
      min_word_len.push_back(word_len);
    } else {
      min_word_len[r.index] = std::min(min_word_len[r.index], word_len);
    }
  };

  consider(detail::Mat2::identity(), 0);
  const std::vector<Letter>& w1 = c1.word();
  const std::vector<Letter>& w2 = c2.word();
  bool ok = internal::visit_reduced_words(
      2 * rep.genus(), radius, budget, [&](const std::vector<Letter>& w) {
        if (internal::has_power_prefix(w, w1)) return;
        if (internal::has_power_suffix(w, w2)) return;
        consider(rep.evaluate_dd(w), static_cast<int>(w.size()));
      });
  if (!ok) fail(ErrorKind::BudgetExceeded, "intersection enumeration exceeded the budget");

  IntersectionResult res;
  res.count_lower_bound = crossing.size();
  res.enumeration_radius = radius;
  // Heuristic certificate: deep enough enumeration, two stable shell
  // increments, and every crossing coset discovered at least two shells early.
  auto count_at = [&](int r) {
    return static_cast<std::uint64_t>(
        std::count_if(min_word_len.begin(), min_word_len.end(), [r](int l) { return l <= r; }));
  };
  res.certified_exact = radius >= 3 && count_at(radius) == count_at(radius - 1) &&
                        count_at(radius - 1) == count_at(radius - 2);
  return res;
}

double thurston_ratio_lower_bound(const HolonomyRep& rep_h, const HolonomyRep& rep_h2,
                                  int max_word_length, std::uint64_t budget) {
  if (rep_h.genus() != rep_h2.genus()) {
    fail(ErrorKind::DimensionMismatch, "ratio bound needs representations of equal genus");
  }
  std::vector<CurveClass> classes = enumerate_classes(rep_h, max_word_length, budget);
  double best = 0.0;
  for (const CurveClass& c : classes) {
    double num = surface::curve_length(rep_h2, c);
    double den = surface::curve_length(rep_h, c);
    best = std::max(best, num / den);
  }
  return best;
}

}  // namespace adsvol::curves
