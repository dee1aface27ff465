#include "adsvol/surface.hpp"

#include <algorithm>
#include <cmath>

namespace adsvol::surface {

using detail::dd;
using detail::dd_abs;
using detail::dd_sqrt;
using detail::Mat2;

SurfaceTopology standard_topology(int genus) {
  if (genus < 2) fail(ErrorKind::GenusTooSmall, "closed hyperbolic surfaces need genus >= 2");
  SurfaceTopology topo;
  topo.genus = genus;
  std::vector<int> next_slot(static_cast<std::size_t>(2 * genus - 2), 0);
  auto attach = [&next_slot](int v) {
    return EdgeAttachment{v, next_slot[static_cast<std::size_t>(v)]++};
  };
  auto add = [&](int u, int v) {
    PantsEdge e;
    e.end[0] = attach(u);
    e.end[1] = attach(v);
    topo.edges.push_back(e);
  };
  // End handles are one-holed tori (self-loop edges); middle handles are the
  // doubled parallel edges of the chain.
  add(0, 0);
  add(0, 1);
  for (int i = 1; i <= genus - 2; ++i) {
    add(2 * i - 1, 2 * i);
    add(2 * i - 1, 2 * i);
    add(2 * i, 2 * i + 1);
  }
  add(2 * genus - 3, 2 * genus - 3);
  for (int used : next_slot) {
    if (used != 3) fail(ErrorKind::NumericalFailure, "internal: pants vertex is not trivalent");
  }
  return topo;
}

namespace {

Mat2 axis_translation(dd len) {
  // exp((hi + lo)/2) with the first-order lo correction; |lo| <= ulp(hi).
  // Evaluated on |len| so that R(-x) is the exact dd reciprocal of R(x):
  // a fresh exp(-x/2) would differ from 1/exp(x/2) at double rounding, and
  // that mismatch survives the structural cancellations this path exists for.
  bool neg = len.hi < 0.0 || (len.hi == 0.0 && len.lo < 0.0);
  dd mag = neg ? -len : len;
  double e = std::exp(mag.hi / 2.0);
  dd big = dd(e) * (dd(1) + dd(mag.lo / 2.0));
  dd small = dd(1) / big;
  if (neg) return {small, dd(0), dd(0), big};
  return {big, dd(0), dd(0), small};
}

Mat2 perpendicular_translation(double d) {
  // Translation by d along the geodesic (-1, 1).
  double c = std::cosh(d / 2.0);
  double s = std::sinh(d / 2.0);
  return {dd(c), dd(s), dd(s), dd(c)};
}

// Distance between the two like-length boundary curves of the pants
// (l_handle, l_handle, l_boundary): the right-angled hexagon seam.
double handle_seam(double l_handle, double l_boundary) {
  double ch = std::cosh(l_handle / 2.0);
  double x = (std::cosh(l_boundary / 2.0) + ch * ch) / std::sinh(l_handle / 2.0) /
             std::sinh(l_handle / 2.0);
  return std::acosh(x);
}

// Maps (repelling fixed point, attracting fixed point) of a hyperbolic
// element to (0, inf), det +1, computed entirely in double-double.
Mat2 standardizer_dd(const Mat2& m) {
  dd tr = m.trace();
  dd disc = tr * tr - dd(4);
  dd s = dd_sqrt(disc);

  dd scale = dd_abs(m.a) + dd_abs(m.b) + dd_abs(m.c) + dd_abs(m.d);
  bool c_zero = dd_abs(m.c).hi <= 1e-300 * scale.hi;

  dd rep, att;
  bool rep_inf = false, att_inf = false;
  if (c_zero) {
    dd xf = m.b / (m.d - m.a);
    if (dd_abs(m.a) > dd_abs(m.d)) {
      att_inf = true;
      rep = xf;
    } else {
      rep_inf = true;
      att = xf;
    }
  } else {
    // Roots of c x^2 + (d - a) x - b = 0 in the stable order.
    dd B = m.d - m.a;
    dd q = -(dd(0.5)) * (B + (B.hi < 0.0 ? -s : s));
    dd x1, x2;
    if (dd_abs(q).hi > 0.0) {
      x1 = q / m.c;
      x2 = -m.b / q;
    } else {
      x1 = s / (dd(2) * m.c);
      x2 = -x1;
    }
    dd m1 = dd_abs(m.c * x1 + m.d);
    if (m1 > dd(1)) {
      att = x1;
      rep = x2;
    } else {
      att = x2;
      rep = x1;
    }
  }

  Mat2 S;
  if (rep_inf) {
    S = {dd(0), dd(-1), dd(1), -att};  // z -> -1/(z - att)
  } else if (att_inf) {
    S = {dd(1), -rep, dd(0), dd(1)};   // z -> z - rep
  } else if (rep > att) {
    S = {dd(1), -rep, dd(1), -att};
  } else {
    S = {dd(1), -rep, dd(-1), att};
  }
  return S.det_normalized();
}

hypgeom::Mobius to_mobius(const Mat2& m) {
  return hypgeom::make_mobius(m.a.value(), m.b.value(), m.c.value(), m.d.value());
}

double operator_norm(const Mat2& m) {
  // Largest singular value of a 2x2 real matrix.
  double a = m.a.value(), b = m.b.value(), c = m.c.value(), d = m.d.value();
  double e = (a + d) / 2, f = (a - d) / 2, g = (c + b) / 2, h = (c - b) / 2;
  return std::hypot(e, h) + std::hypot(f, g);
}

}  // namespace

const curves::CurveClass& HolonomyRep::edge_word(int edge) const {
  if (edge < 0 || edge >= static_cast<int>(edge_words_.size())) {
    fail(ErrorKind::InvalidInput, "edge index out of range");
  }
  return edge_words_[static_cast<std::size_t>(edge)];
}

detail::Mat2 HolonomyRep::evaluate_dd(std::span<const curves::Letter> word) const {
  // Expand letters into factor tokens, cancelling exact inverse pairs and
  // merging adjacent axis shifts, then multiply what is left.
  std::vector<Token> stream;
  stream.reserve(word.size() * 4);
  auto push = [&stream](Token t) {
    while (true) {
      if (t.kind == Token::AxisShift && t.shift.hi == 0.0 && t.shift.lo == 0.0) return;
      if (stream.empty()) break;
      Token& top = stream.back();
      if (t.kind == Token::Matrix && top.kind == Token::Matrix && top.factor == t.factor &&
          top.inv != t.inv) {
        stream.pop_back();
        return;
      }
      if (t.kind == Token::AxisShift && top.kind == Token::AxisShift) {
        t.shift = t.shift + top.shift;
        stream.pop_back();
        continue;
      }
      break;
    }
    stream.push_back(t);
  };
  for (const curves::Letter& l : word) {
    const std::vector<Token>& toks = gen_tokens_[l.gen];
    if (!l.inverse) {
      for (Token t : toks) push(t);
    } else {
      for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
        Token t = *it;
        if (t.kind == Token::Matrix) {
          t.inv = !t.inv;
        } else {
          t.shift = -t.shift;
        }
        push(t);
      }
    }
  }

  Mat2 prod = Mat2::identity();
  for (const Token& t : stream) {
    if (t.kind == Token::AxisShift) {
      prod = prod * axis_translation(t.shift);
    } else {
      const Factor& f = factors_[static_cast<std::size_t>(t.factor)];
      prod = prod * (t.inv ? f.minv : f.m);
    }
  }
  return prod.det_normalized();
}

hypgeom::Mobius HolonomyRep::evaluate(std::span<const curves::Letter> word) const {
  return to_mobius(evaluate_dd(word));
}

hypgeom::Mobius HolonomyRep::evaluate(const curves::CurveClass& c) const {
  return evaluate(std::span<const curves::Letter>(c.word()));
}

HolonomyRep build_holonomy(const SurfaceTopology& topo, const FNCoordinates& fn) {
  int n_curves = topo.num_curves();
  if (static_cast<int>(fn.lengths.size()) != n_curves ||
      static_cast<int>(fn.twists.size()) != n_curves) {
    fail(ErrorKind::DimensionMismatch, "FN coordinate arrays must match the curve count");
  }
  for (double l : fn.lengths) {
    if (!std::isfinite(l) || l <= 0.0) fail(ErrorKind::InvalidInput, "curve lengths must be positive");
    if (l < kMinCurveLength) fail(ErrorKind::DegenerateLength, "curve length below 1e-4");
  }
  for (double t : fn.twists) {
    if (!std::isfinite(t)) fail(ErrorKind::InvalidInput, "twists must be finite");
  }
  if (topo.genus != 2) {
    fail(ErrorKind::UnsupportedGenus, "holonomy construction implemented for genus 2");
  }

  double l0 = fn.lengths[0], l1 = fn.lengths[1], l2 = fn.lengths[2];
  double t0 = fn.twists[0], t1 = fn.twists[1], t2 = fn.twists[2];

  // Each one-holed torus: handle translation a = R(l) along (0, inf) and
  // crossing translation b = T(seam)^-1 along (-1, 1); the boundary word
  // [a, b] = R T^-1 R^-1 T then has trace -2 cosh(l_boundary / 2). The global
  // frame puts the separating axis at (0, inf): each torus is conjugated by
  // the standardizer of its boundary commutator, the second one additionally
  // by the half-turn around i and the separating twist.
  double seam1 = handle_seam(l0, l1);
  double seam2 = handle_seam(l2, l1);

  Mat2 T1 = perpendicular_translation(seam1);
  Mat2 T2 = perpendicular_translation(seam2);
  Mat2 R0 = axis_translation(dd(l0));
  Mat2 R2 = axis_translation(dd(l2));
  Mat2 K1 = R0 * T1.inverse() * R0.inverse() * T1;
  Mat2 K2 = R2 * T2.inverse() * R2.inverse() * T2;

  Mat2 S1 = standardizer_dd(K1);
  Mat2 half_turn{dd(0), dd(-1), dd(1), dd(0)};
  Mat2 Q = axis_translation(dd(t1)) * half_turn * standardizer_dd(K2);

  HolonomyRep rep;
  rep.genus_ = 2;
  rep.factors_.push_back({S1, S1.inverse()});
  rep.factors_.push_back({T1, T1.inverse()});
  rep.factors_.push_back({Q, Q.inverse()});
  rep.factors_.push_back({T2, T2.inverse()});

  using Token = HolonomyRep::Token;
  auto mat = [](int f, bool inv) { return Token{Token::Matrix, f, inv, dd(0)}; };
  auto shift = [](double s) { return Token{Token::AxisShift, 0, false, dd(s)}; };
  rep.gen_tokens_ = {
      {mat(0, false), shift(l0), mat(0, true)},                // a1 = S1 R(l0) S1^-1
      {mat(0, false), mat(1, true), shift(t0), mat(0, true)},  // b1 = S1 T1^-1 R(t0) S1^-1
      {mat(2, false), shift(l2), mat(2, true)},                // a2 = Q R(l2) Q^-1
      {mat(2, false), mat(3, true), shift(t2), mat(2, true)},  // b2 = Q T2^-1 R(t2) Q^-1
  };

  for (int g = 0; g < 4; ++g) {
    curves::Letter l{static_cast<std::uint8_t>(g), false};
    rep.generators_.push_back(rep.evaluate(std::span<const curves::Letter>(&l, 1)));
  }

  using curves::CurveClass;
  using curves::Letter;
  rep.edge_words_.push_back(CurveClass({Letter{0, false}}));
  rep.edge_words_.push_back(
      CurveClass({Letter{0, false}, Letter{1, false}, Letter{0, true}, Letter{1, true}}));
  rep.edge_words_.push_back(CurveClass({Letter{2, false}}));
  rep.edge_lengths_ = fn.lengths;

  // Relator residual: operator-norm distance of a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1
  // from +-identity, evaluated through the token stream.
  std::vector<Letter> relator;
  for (int h = 0; h < 2; ++h) {
    std::uint8_t a = static_cast<std::uint8_t>(2 * h), b = static_cast<std::uint8_t>(2 * h + 1);
    relator.push_back({a, false});
    relator.push_back({b, false});
    relator.push_back({a, true});
    relator.push_back({b, true});
  }
  Mat2 W = rep.evaluate_dd(relator);
  Mat2 Wm{W.a - dd(1), W.b, W.c, W.d - dd(1)};
  Mat2 Wp{W.a + dd(1), W.b, W.c, W.d + dd(1)};
  rep.relator_residual_ = std::min(operator_norm(Wm), operator_norm(Wp));
  if (!(rep.relator_residual_ <= kRelatorResidualLimit)) {
    fail(ErrorKind::NumericalFailure,
         "relator residual " + std::to_string(rep.relator_residual_) + " exceeds 1e-6");
  }

  for (int e = 0; e < n_curves; ++e) {
    double tr = std::abs(rep.evaluate_dd(rep.edge_words_[static_cast<std::size_t>(e)].word())
                             .trace()
                             .value());
    double want = 2.0 * std::cosh(fn.lengths[static_cast<std::size_t>(e)] / 2.0);
    if (std::abs(tr - want) > 1e-6 * std::max(1.0, want)) {
      fail(ErrorKind::NumericalFailure, "decomposition curve trace drifted from its FN length");
    }
  }
  return rep;
}

double curve_length(const HolonomyRep& rep, const curves::CurveClass& c) {
  detail::Mat2 m = rep.evaluate_dd(c.word());
  double half_tr = std::abs(m.trace().value()) / 2.0;
  if (!(half_tr > 1.0 + hypgeom::kClassTolerance / 2.0)) {
    fail(ErrorKind::NotHyperbolic, "curve class is not hyperbolic: " + c.str());
  }
  return 2.0 * std::acosh(half_tr);
}

double bers_constant(int genus) {
  if (genus < 2) fail(ErrorKind::GenusTooSmall, "Bers constant needs genus >= 2");
  return 6.0 * std::sqrt(3.0 * M_PI) * (genus - 1);
}

}  // namespace adsvol::surface
