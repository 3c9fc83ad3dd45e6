#include <benchmark/benchmark.h>

#include "tfold/blocking.hpp"
#include "tfold/extremal.hpp"
#include "tfold/families.hpp"
#include "tfold/gf.hpp"
#include "tfold/plane.hpp"
#include "tfold/search.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  const tfold::Field f = tfold::make_field(2, static_cast<unsigned>(state.range(0)));
  const auto a = f.variable();
  auto acc = f.one();
  for (auto _ : state) {
    acc = f.mul(acc, a);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(6)->Arg(12);

void BM_BuildPlane(benchmark::State& state) {
  const auto pp = *tfold::as_prime_power(static_cast<std::uint64_t>(state.range(0)));
  const tfold::Field f = tfold::make_field(pp.p, pp.k);
  for (auto _ : state) benchmark::DoNotOptimize(tfold::build_desarguesian_plane(f));
}
BENCHMARK(BM_BuildPlane)->Arg(9)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const auto plane = tfold::build_desarguesian_plane(tfold::make_field(2, 6));
  const auto unital = tfold::hermitian_unital(plane);
  for (auto _ : state) benchmark::DoNotOptimize(tfold::spectrum(*plane, unital));
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMicrosecond);

void BM_EqualityCandidates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tfold::equality_candidates(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_EqualityCandidates)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_SearchPG24(benchmark::State& state) {
  const auto plane = tfold::build_desarguesian_plane(tfold::make_field(2, 2));
  const auto task = tfold::make_search_task(plane, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tfold::exhaustive_extremal_search(task));
}
BENCHMARK(BM_SearchPG24)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
