#include <benchmark/benchmark.h>

#include <random>

#include "distembed/distembed.hpp"

using namespace distembed;

namespace {

GeneralizedMeasure random_measure(std::size_t atoms, unsigned max_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> w(0.0, 1.0);
  std::uniform_real_distribution<double> x(-3.0, 3.0);
  std::uniform_int_distribution<unsigned> p(0, max_order);
  std::vector<Atom> out;
  for (std::size_t i = 0; i < atoms; ++i) {
    out.push_back(Atom{Complex(w(rng), w(rng)), MultiIndex{p(rng)}, Point{x(rng)}});
  }
  return GeneralizedMeasure(1, std::move(out));
}

void BM_GaussianDerivative(benchmark::State& state) {
  const auto k = kernels::gaussian();
  const MultiIndex p{static_cast<unsigned>(state.range(0))};
  const MultiIndex q{static_cast<unsigned>(state.range(0))};
  const Point x{0.3}, y{-0.8};
  for (auto _ : state) benchmark::DoNotOptimize(k.derivative(p, q, x, y));
}
BENCHMARK(BM_GaussianDerivative)->DenseRange(0, 3);

void BM_FiniteDifferenceOracle(benchmark::State& state) {
  const auto k = kernels::gaussian();
  const MultiIndex p{static_cast<unsigned>(state.range(0))};
  const MultiIndex q{static_cast<unsigned>(state.range(0))};
  const Point x{0.3}, y{-0.8};
  for (auto _ : state) benchmark::DoNotOptimize(finite_difference_derivative(k, p, q, x, y));
}
BENCHMARK(BM_FiniteDifferenceOracle)->DenseRange(0, 2);

void BM_NormSquared(benchmark::State& state) {
  const auto k = kernels::gaussian();
  const auto d = random_measure(static_cast<std::size_t>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(norm_squared(k, d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormSquared)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_UniformDiscretizationNorm(benchmark::State& state) {
  const auto k = kernels::gaussian();
  const auto d = discretize_uniform(Box{Interval{0.0, 16.0}}, static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(norm_squared(k, d));
}
BENCHMARK(BM_UniformDiscretizationNorm)->RangeMultiplier(2)->Range(256, 2048);

void BM_SpectralNormGaussian(benchmark::State& state) {
  const auto lambda = spectra::gaussian(1);
  const auto d = random_measure(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_norm_squared(lambda, d));
}
BENCHMARK(BM_SpectralNormGaussian)->RangeMultiplier(4)->Range(4, 64);

void BM_FourierTransform(benchmark::State& state) {
  const auto d = random_measure(static_cast<std::size_t>(state.range(0)), 2, 3);
  const Point xi{1.7};
  for (auto _ : state) benchmark::DoNotOptimize(fourier_transform(d, xi));
}
BENCHMARK(BM_FourierTransform)->RangeMultiplier(8)->Range(8, 4096);

void BM_CpdSpectralForm(benchmark::State& state) {
  const auto c = cpd_kernels::negative_abs();
  const auto mu = point_mass({1.0}) - point_mass({2.0});
  for (auto _ : state) benchmark::DoNotOptimize(cpd_spectral_form(c, mu));
}
BENCHMARK(BM_CpdSpectralForm)->Unit(benchmark::kMillisecond);

void BM_SpdCheck(benchmark::State& state) {
  const auto k = kernels::sinc();
  std::vector<Atom> atoms;
  for (int i = 0; i < state.range(0); ++i) atoms.push_back(Atom{1.0, MultiIndex{0}, Point{0.37 * i}});
  for (auto _ : state) benchmark::DoNotOptimize(spd_check(k, atoms, 1e-10));
}
BENCHMARK(BM_SpdCheck)->RangeMultiplier(4)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
