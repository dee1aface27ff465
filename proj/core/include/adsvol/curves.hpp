#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "adsvol/curve_class.hpp"
#include "adsvol/surface.hpp"

namespace adsvol::curves {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;
inline constexpr double kAxisPairTolerance = 1e-7;

// Component of a measured multicurve: a decomposition-edge index or an
// explicit class, with a positive weight. Duplicates merge on construction.
struct Component {
  std::variant<int, CurveClass> curve;
  double weight = 1.0;
};

class WeightedMulticurve {
 public:
  explicit WeightedMulticurve(std::vector<Component> components);
  const std::vector<Component>& components() const { return components_; }

 private:
  std::vector<Component> components_;
};

struct IntersectionResult {
  std::uint64_t count_lower_bound = 0;
  bool certified_exact = false;
  int enumeration_radius = 0;
};

// All canonical cyclically-reduced classes of word length <= max_word_length
// whose holonomy is hyperbolic, in (length, lexicographic) order. The budget
// caps the number of words visited; exceeding it raises BudgetExceeded.
std::vector<CurveClass> enumerate_classes(const surface::HolonomyRep& rep, int max_word_length,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

CurveClass edge_class(const surface::HolonomyRep& rep, int edge);

// Weighted sum of component geodesic lengths.
double multicurve_length(const surface::HolonomyRep& rep, const WeightedMulticurve& mc);

// Counts double cosets <C1>\G/<C2> whose axis pairs cross, over conjugating
// words of length <= radius. The count is a lower bound for the geometric
// intersection number; certified_exact follows the stability heuristic
// described in the implementation.
IntersectionResult intersection_number(const surface::HolonomyRep& rep, const CurveClass& c1,
                                       const CurveClass& c2, int radius,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// max over enumerated classes of l_c(h') / l_c(h); a lower bound on
// exp(d_Th(h, h')). Valid for every free homotopy class, simple or not.
double thurston_ratio_lower_bound(const surface::HolonomyRep& rep_h,
                                  const surface::HolonomyRep& rep_h2, int max_word_length,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

namespace internal {

// Visits every freely reduced word of length in [1, max_len]; the visitor
// receives the letter stack. Returns false if the budget ran out.
bool visit_reduced_words(int n_gens, int max_len, std::uint64_t budget,
                         const std::function<void(const std::vector<Letter>&)>& visit);

// Whether w starts (ends) with one full period of the cyclic word c or of its
// inverse; used to strip obvious <C> coset representatives before the
// numeric axis-pair deduplication.
bool has_power_prefix(const std::vector<Letter>& w, const std::vector<Letter>& c);
bool has_power_suffix(const std::vector<Letter>& w, const std::vector<Letter>& c);

detail::Mat2 mat2_of(const hypgeom::Mobius& m);
hypgeom::BoundaryPoint apply_dd(const detail::Mat2& m, const hypgeom::BoundaryPoint& p);

struct NormalizedAxis {
  double p = 0.0, q = 0.0;
  bool usable = false;
};

// Endpoints of (frame * D) applied to the base axis, for a frame that sends
// the reference axis to (0, inf).
NormalizedAxis normalize_axis(const detail::Mat2& frame_times_d,
                              const hypgeom::GeodesicLine& base_axis);

// Axis pairs (p, q) modulo the cyclic group scaling by exp(k * period):
// canonical representative has max(|p|, |q|) in [1, exp(period)).
class AxisPairTable {
 public:
  AxisPairTable(double period, double tolerance)
      : period_(period), tol_(tolerance), scale_(std::exp(period)) {}

  struct InsertResult {
    bool fresh = false;
    std::size_t index = 0;
  };
  InsertResult insert(double p, double q);
  std::size_t size() const { return by_hi_.size(); }

 private:
  double period_;
  double tol_;
  double scale_;
  struct Entry {
    double lo, hi;
    std::size_t index;
  };
  std::vector<Entry> by_hi_;  // sorted by hi
};

}  // namespace internal

}  // namespace adsvol::curves
