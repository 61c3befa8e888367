#include "hyperoep/fixtures.hpp"
#include "hyperoep/geometry.hpp"
#include "hyperoep/grid2d.hpp"
#include "hyperoep/radial.hpp"

#include <benchmark/benchmark.h>

using namespace hyperoep;

namespace {

geo::Isometry sample_isometry(int n) {
    geo::Vec v = geo::Vec::Zero(n);
    v[0] = 0.3;
    const geo::Point p = geo::Point::origin(n);
    return geo::hyperbolic_translation(geo::Geodesic(p, v / geo::metric_norm(p, v)), 0.7);
}

void BM_Compose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const geo::Isometry a = sample_isometry(n);
    const geo::Isometry b = a.inverse();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(3)->Arg(4);

void BM_ApplyPoint(benchmark::State& state) {
    const geo::Isometry a = sample_isometry(2);
    const geo::Point p = geo::Point::half_space({0.3, 1.2});
    for (auto _ : state) benchmark::DoNotOptimize(a.apply(p));
}
BENCHMARK(BM_ApplyPoint);

void BM_ShootHoroball(benchmark::State& state) {
    radial::RadialProblem p;
    p.family = radial::Family::HoroballExterior;
    p.n = static_cast<int>(state.range(0));
    p.f = Nonlinearity::linear(1.0, 1.0);
    p.C = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(radial::shoot(p, 1e-10));
}
BENCHMARK(BM_ShootHoroball)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ShootBallCubic(benchmark::State& state) {
    radial::RadialProblem p;
    p.family = radial::Family::BallExterior;
    p.n = 2;
    p.domain_param = 1.0;
    p.f = Nonlinearity::cubic();
    p.C = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(radial::shoot(p, 1e-10));
}
BENCHMARK(BM_ShootBallCubic)->Unit(benchmark::kMillisecond);

void BM_Solve2D(benchmark::State& state) {
    const double h = 1.0 / static_cast<double>(state.range(0));
    const auto cc = fixtures::canonical_case(pde::DomainKind::EquidistantHalfPlane, Nonlinearity::linear(1.0, 1.0), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pde::solve_semilinear(cc.domain, Nonlinearity::linear(1.0, 1.0), 1.0, h, 1e-10));
    }
}
BENCHMARK(BM_Solve2D)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
