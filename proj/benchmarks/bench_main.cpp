#include <benchmark/benchmark.h>

#include "adsvol/curves.hpp"
#include "adsvol/riera.hpp"

using namespace adsvol;

namespace {

surface::HolonomyRep symmetric_rep() {
  return surface::build_holonomy(surface::standard_topology(2), {{1, 1, 1}, {0, 0, 0}});
}

void BM_BuildHolonomy(benchmark::State& state) {
  surface::SurfaceTopology topo = surface::standard_topology(2);
  surface::FNCoordinates fn{{1.3, 0.7, 2.1}, {0.4, -1.2, 3.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface::build_holonomy(topo, fn));
  }
}
BENCHMARK(BM_BuildHolonomy);

void BM_CurveLength(benchmark::State& state) {
  surface::HolonomyRep rep = symmetric_rep();
  curves::CurveClass w = curves::CurveClass::parse("abACdb", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface::curve_length(rep, w));
  }
}
BENCHMARK(BM_CurveLength);

void BM_EnumerateClasses(benchmark::State& state) {
  surface::HolonomyRep rep = symmetric_rep();
  int len = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(curves::enumerate_classes(rep, len));
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(3)->Arg(4)->Arg(5);

void BM_GeodesicDistance(benchmark::State& state) {
  hypgeom::GeodesicLine g1 = hypgeom::make_geodesic(0.2, 1.7);
  hypgeom::GeodesicLine g2 = hypgeom::make_geodesic(2.3, 5.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypgeom::geodesic_distance(g1, g2));
  }
}
BENCHMARK(BM_GeodesicDistance);

void BM_GradientSeries(benchmark::State& state) {
  surface::HolonomyRep rep = symmetric_rep();
  curves::CurveClass a = curves::CurveClass::parse("a", 2);
  int radius = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riera::wp_grad_normsq_lower(rep, a, radius));
  }
}
BENCHMARK(BM_GradientSeries)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_IntersectionNumber(benchmark::State& state) {
  surface::HolonomyRep rep = symmetric_rep();
  curves::CurveClass a = curves::CurveClass::parse("a", 2);
  curves::CurveClass b = curves::CurveClass::parse("b", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curves::intersection_number(rep, a, b, int(state.range(0))));
  }
}
BENCHMARK(BM_IntersectionNumber)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
