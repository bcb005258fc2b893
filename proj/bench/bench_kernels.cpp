// Parallel kernels against their serial reference twins.

#include "tangles/canonical.hpp"
#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/graphsep.hpp"
#include "tangles/parallel.hpp"
#include "tangles/random.hpp"

#include <benchmark/benchmark.h>

using namespace tangles;

namespace {

Graph tripod() { return Graph::glued({Graph::complete(5), Graph::complete(5), Graph::complete(5)}); }

const SeparationSystem& tripod_S3() {
  static const SeparationSystem S = build_Sk(tripod(), 3);
  return S;
}

const StarFamily& tripod_F() {
  static const StarFamily F = tk_star(tripod_S3());
  return F;
}

const OrientationSet& tripod_tangles() {
  static const OrientationSet T = enumerate_tangles(tripod_S3(), tripod_F());
  return T;
}

// A random system with a shift-closed family, big enough to be worth timing.
struct Shifted {
  SeparationSystem S;
  StarFamily F;
};

const Shifted& shifted() {
  static const Shifted out = [] {
    Rng rng(11);
    auto S = random_submodular_system(rng, 14);
    auto F = random_shift_closed_family(S, rng, 6);
    return Shifted{std::move(S), std::move(F)};
  }();
  return out;
}

void set_workers(benchmark::State& state) { set_jobs(static_cast<int>(state.range(0))); }

void BM_submodularity(benchmark::State& state) {
  set_workers(state);
  for (auto _ : state) benchmark::DoNotOptimize(find_submodularity_violation(tripod_S3()));
}
void BM_submodularity_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::find_submodularity_violation(tripod_S3()));
}

void BM_shifting(benchmark::State& state) {
  set_workers(state);
  const auto& in = shifted();
  for (auto _ : state) benchmark::DoNotOptimize(shifting_violation(in.S, in.F));
}
void BM_shifting_reference(benchmark::State& state) {
  const auto& in = shifted();
  for (auto _ : state) benchmark::DoNotOptimize(reference::shifting_violation(in.S, in.F));
}

void BM_separability(benchmark::State& state) {
  set_workers(state);
  for (auto _ : state) benchmark::DoNotOptimize(separability_violation(tripod_S3()));
}
void BM_separability_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::separability_violation(tripod_S3()));
}

void BM_enumerate(benchmark::State& state) {
  set_workers(state);
  EnumOptions opts;
  opts.family = &tripod_F();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(tripod_S3(), opts));
}
void BM_enumerate_reference(benchmark::State& state) {
  EnumOptions opts;
  opts.family = &tripod_F();
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate(tripod_S3(), opts));
}

void BM_build_Sk(benchmark::State& state) {
  set_workers(state);
  const auto g = tripod();
  for (auto _ : state) benchmark::DoNotOptimize(build_Sk(g, 3));
}
void BM_build_Sk_reference(benchmark::State& state) {
  const auto g = tripod();
  for (auto _ : state) benchmark::DoNotOptimize(reference::build_Sk(g, 3));
}

void BM_tk_star(benchmark::State& state) {
  set_workers(state);
  for (auto _ : state) benchmark::DoNotOptimize(tk_star(tripod_S3()));
}
void BM_tk_star_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::tk_star(tripod_S3()));
}

void BM_construction(benchmark::State& state) {
  set_workers(state);
  for (auto _ : state) benchmark::DoNotOptimize(construction_41(tripod_S3(), tripod_tangles()));
}
void BM_construction_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::construction_41(tripod_S3(), tripod_tangles()));
}

}  // namespace

BENCHMARK(BM_submodularity)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_submodularity_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shifting)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shifting_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_separability)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_separability_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_Sk)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_Sk_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tk_star)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tk_star_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_construction)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_construction_reference)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
