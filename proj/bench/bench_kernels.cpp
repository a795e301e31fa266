// Serial references against the OpenMP kernels. The Arg is the thread count
// for the kernel runs; reference runs ignore it.
#include <benchmark/benchmark.h>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "orbitkit/algebra.hpp"
#include "orbitkit/constructions.hpp"
#include "orbitkit/mealy.hpp"
#include "orbitkit/orbit.hpp"

using namespace orbitkit;

namespace {

void set_threads(const benchmark::State& state) {
#if defined(_OPENMP)
  omp_set_num_threads(static_cast<int>(state.range(0)));
#else
  (void)state;
#endif
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_num_procs();
#else
  return 1;
#endif
}

void thread_args(benchmark::internal::Benchmark* b) {
  b->Arg(1);
  if (max_threads() > 1) b->Arg(max_threads());
}

constexpr std::size_t kElements = 400;
constexpr std::size_t kNodes = 4000;

void BM_SemigroupReference(benchmark::State& state) {
  const Automaton g = grigorchuk();
  for (auto _ : state) benchmark::DoNotOptimize(reference::semigroup_enumerate(g, kElements));
}
BENCHMARK(BM_SemigroupReference)->Unit(benchmark::kMillisecond);

void BM_SemigroupKernel(benchmark::State& state) {
  const Automaton g = grigorchuk();
  set_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(semigroup_enumerate(g, kElements));
}
BENCHMARK(BM_SemigroupKernel)->Apply(thread_args)->Unit(benchmark::kMillisecond);

void BM_OrbitReference(benchmark::State& state) {
  const Automaton a = adding_machine();
  const UPWord w = normalize({}, a.parse_word("0"));
  for (auto _ : state) benchmark::DoNotOptimize(reference::orbit_explore(a, w, kNodes));
}
BENCHMARK(BM_OrbitReference)->Unit(benchmark::kMillisecond);

void BM_OrbitKernel(benchmark::State& state) {
  const Automaton a = adding_machine();
  const UPWord w = normalize({}, a.parse_word("0"));
  set_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_explore(a, w, kNodes));
}
BENCHMARK(BM_OrbitKernel)->Apply(thread_args)->Unit(benchmark::kMillisecond);

void BM_DualOrbitKernel(benchmark::State& state) {
  const Automaton gd = dual(grigorchuk());
  const UPWord w = normalize({}, gd.parse_word("b c d"));
  set_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_explore(gd, w, kNodes));
}
BENCHMARK(BM_DualOrbitKernel)->Apply(thread_args)->Unit(benchmark::kMillisecond);

void BM_DualOrbitReference(benchmark::State& state) {
  const Automaton gd = dual(grigorchuk());
  const UPWord w = normalize({}, gd.parse_word("b c d"));
  for (auto _ : state) benchmark::DoNotOptimize(reference::orbit_explore(gd, w, kNodes));
}
BENCHMARK(BM_DualOrbitReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
