// Serial reference kernels against their OpenMP variants.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pilab/groups.hpp"
#include "pilab/kernels.hpp"
#include "pilab/primes.hpp"

using namespace pilab;

namespace {

const std::vector<double>& points() {
  static const std::vector<double> u = [] {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(1 << 20);
    for (auto& x : v) x = unit(rng);
    return v;
  }();
  return u;
}

const std::vector<radix::Digit>& digits() {
  static const std::vector<radix::Digit> d = [] {
    std::mt19937 rng(2);
    std::vector<radix::Digit> v(1 << 22);
    for (auto& x : v) x = static_cast<radix::Digit>(rng() % 10);
    return v;
  }();
  return d;
}

template <class F>
void weyl(benchmark::State& state, F f) {
  for (auto _ : state) benchmark::DoNotOptimize(f(points(), 3));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points().size()));
}

template <class F>
void blocks(benchmark::State& state, F f) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f(digits(), 10, k));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(digits().size()));
}

template <class F>
void spectrum(benchmark::State& state, F f) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto h = groups::subgroup(10, p);
  for (auto _ : state) benchmark::DoNotOptimize(f(*h.elements, p));
}

template <class F>
void artin(benchmark::State& state, F f) {
  auto ps = primes::PrimeTable::shared().up_to(static_cast<std::uint64_t>(state.range(0)));
  std::erase_if(ps, [](std::uint64_t p) { return p == 2 || p == 5; });
  for (auto _ : state) benchmark::DoNotOptimize(f(ps));
}

}  // namespace

BENCHMARK_CAPTURE(weyl, serial, kernels::serial::weyl);
BENCHMARK_CAPTURE(weyl, parallel, kernels::parallel::weyl);
BENCHMARK_CAPTURE(blocks, serial, kernels::serial::block_counts)->Arg(1)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(blocks, parallel, kernels::parallel::block_counts)->Arg(1)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(spectrum, serial, kernels::serial::subgroup_spectrum)->Arg(4999)->Arg(10007);
BENCHMARK_CAPTURE(spectrum, parallel, kernels::parallel::subgroup_spectrum)->Arg(4999)->Arg(10007);
BENCHMARK_CAPTURE(artin, serial, kernels::serial::artin_rows)->Arg(100000);
BENCHMARK_CAPTURE(artin, parallel, kernels::parallel::artin_rows)->Arg(100000);

BENCHMARK_MAIN();
