#include <benchmark/benchmark.h>

#include "kamcert/birkhoff.hpp"
#include "kamcert/certify.hpp"
#include "kamcert/fourier.hpp"
#include "kamcert/pipeline.hpp"

namespace {

using namespace kamcert;

GridSamples smooth_samples(std::size_t n, Precision prec) {
  GridSamples s(n, prec);
  for (std::size_t j = 0; j < n; ++j) {
    const Interval th = Interval::from_ratio(static_cast<long>(j), static_cast<long>(n), prec);
    s[j] = ComplexInterval(sin_2pi(th) + cos_2pi(th * 3L) / 5L);
  }
  return s;
}

void BM_Dft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto prec = static_cast<Precision>(state.range(1));
  const GridSamples s = smooth_samples(n, prec);
  for (auto _ : state) benchmark::DoNotOptimize(dft(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dft)->ArgsProduct({{256, 1024, 4096}, {128, 256}})->Unit(benchmark::kMillisecond);

void BM_Idft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FourierModel m = dft(smooth_samples(n, 128));
  for (auto _ : state) benchmark::DoNotOptimize(idft(m));
}
BENCHMARK(BM_Idft)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_IntervalElementary(benchmark::State& state) {
  const Interval x = Interval::from_decimal("0.3", 128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sin_2pi(x));
    benchmark::DoNotOptimize(exp(x));
    benchmark::DoNotOptimize(pow(x, Interval::from_decimal("1.26", 128)));
  }
}
BENCHMARK(BM_IntervalElementary);

void BM_WbFourier(benchmark::State& state) {
  const Precision prec = 128;
  PrecisionScope scope(prec);
  const Real omega = golden_omega(prec).mid();
  OrbitConfig cfg;
  cfg.orbit_size = static_cast<std::size_t>(state.range(0));
  cfg.burn_in = 1000;
  cfg.x0 = Real(0L, prec);
  cfg.y0 = Real(0L, prec);
  cfg.theta0 = Real(0L, prec);
  const RealMapParams p{Real::parse("0.4", prec), Real::parse("0.1", prec), Real::parse("0.3707675365179735782", prec)};
  const Orbit orbit = generate_orbit(p, omega, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(wb_fourier(orbit, omega, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_WbFourier)->Args({16384, 60})->Args({65296, 240})->Unit(benchmark::kMillisecond);

void BM_RussmannCr(benchmark::State& state) {
  const Interval tau = Interval::from_decimal("1.26", 128);
  for (auto _ : state) benchmark::DoNotOptimize(russmann_cr(tau));
}
BENCHMARK(BM_RussmannCr)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
