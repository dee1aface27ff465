#pragma once

#include <map>
#include <span>
#include <vector>

#include "adsvol/curve_class.hpp"
#include "adsvol/dd.hpp"
#include "adsvol/hypgeom.hpp"

namespace adsvol::surface {

inline constexpr double kMinCurveLength = 1e-4;
inline constexpr double kRelatorResidualLimit = 1e-6;

struct EdgeAttachment {
  int pants = 0;
  int slot = 0;  // 0..2 boundary slot of the pants
};

struct PantsEdge {
  EdgeAttachment end[2];
};

// Canonical chain-of-handles pants decomposition: 2g-2 trivalent vertices
// (pairs of pants), 3g-3 edges (decomposition curves). Edge 0 is the handle
// curve of the first one-holed torus; for genus 2 edge 1 is the separating
// curve and edge 2 the second handle curve.
struct SurfaceTopology {
  int genus = 2;
  std::vector<PantsEdge> edges;

  int num_pants() const { return 2 * genus - 2; }
  int num_curves() const { return static_cast<int>(edges.size()); }
};

SurfaceTopology standard_topology(int genus);

// Fenchel-Nielsen coordinates on the canonical decomposition: 3g-3 lengths
// (> 0) and 3g-3 twist offsets in hyperbolic length units.
struct FNCoordinates {
  std::vector<double> lengths;
  std::vector<double> twists;
};

// Holonomy representation of the surface group, built by right-angled
// hexagon gluing of the canonical decomposition. Generators are stored both
// as double-precision Mobius views and as token factorizations over
// double-double factor matrices; words are evaluated through the tokens so
// that structural cancellations (twist insertions, frame changes) never pass
// through catastrophic products.
class HolonomyRep {
 public:
  int genus() const { return genus_; }
  const std::vector<hypgeom::Mobius>& generators() const { return generators_; }
  double relator_residual() const { return relator_residual_; }
  int num_edges() const { return static_cast<int>(edge_words_.size()); }
  const curves::CurveClass& edge_word(int edge) const;
  const std::vector<double>& edge_lengths() const { return edge_lengths_; }

  detail::Mat2 evaluate_dd(std::span<const curves::Letter> word) const;
  hypgeom::Mobius evaluate(std::span<const curves::Letter> word) const;
  hypgeom::Mobius evaluate(const curves::CurveClass& c) const;

 private:
  friend HolonomyRep build_holonomy(const SurfaceTopology&, const FNCoordinates&);

  struct Token {
    enum Kind { Matrix, AxisShift } kind = Matrix;
    int factor = 0;    // index into factors_ when kind == Matrix
    bool inv = false;  // inverse factor when kind == Matrix
    // Translation length along (0, inf) when AxisShift. Kept in double-double
    // so that merged twist insertions cancel exactly; a stray 1e-16 * |twist|
    // here would be conjugation-amplified by exp(|separating twist|).
    detail::dd shift;
  };

  struct Factor {
    detail::Mat2 m;
    detail::Mat2 minv;
  };

  int genus_ = 2;
  std::vector<Factor> factors_;
  std::vector<std::vector<Token>> gen_tokens_;  // one stream per generator
  std::vector<hypgeom::Mobius> generators_;
  std::vector<curves::CurveClass> edge_words_;
  std::vector<double> edge_lengths_;
  double relator_residual_ = 0.0;
};

// Builds the holonomy for the canonical genus-2 decomposition. Lengths below
// kMinCurveLength raise DegenerateLength; genus > 2 raises UnsupportedGenus;
// a relator residual above kRelatorResidualLimit raises NumericalFailure.
HolonomyRep build_holonomy(const SurfaceTopology& topo, const FNCoordinates& fn);

// Geodesic length of the free homotopy class: translation length of its
// holonomy image. NotHyperbolic signals a non-essential class.
double curve_length(const HolonomyRep& rep, const curves::CurveClass& c);

// 6 sqrt(3 pi) (g - 1): every hyperbolic metric admits a pants decomposition
// with all curves shorter than this.
double bers_constant(int genus);

}  // namespace adsvol::surface
