#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "specfill/armodel.hpp"
#include "specfill/banded.hpp"
#include "specfill/rng.hpp"
#include "specfill/stft.hpp"
#include "specfill/tf_solver.hpp"

using namespace specfill;

namespace {

TimeSignal random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  NormalSampler normal;
  TimeSignal x;
  x.sample_rate_hz = 16000;
  x.samples.resize(n);
  for (auto& v : x.samples) v = 0.1 * normal(rng);
  return x;
}

ARModel random_model(int p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  NormalSampler normal;
  ARModel m;
  m.order = p;
  m.coeffs.assign(static_cast<std::size_t>(p) + 1, 0.0);
  m.coeffs[0] = 1.0;
  for (int i = 1; i <= p; ++i) m.coeffs[static_cast<std::size_t>(i)] = 0.2 * normal(rng) / p;
  return m;
}

}  // namespace

static void BM_StftRoundTrip(benchmark::State& state) {
  const TimeSignal x = random_signal(80000, 1);
  StftOperator op(StftParams{});
  for (auto _ : state) {
    Spectrogram X = op.analyze(x);
    TimeSignal y = op.synthesize(X);
    benchmark::DoNotOptimize(y.samples.data());
  }
}
BENCHMARK(BM_StftRoundTrip);

static void BM_Autocorrelation(benchmark::State& state) {
  const TimeSignal x = random_signal(80000, 2);
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = autocorrelation(x.samples, p);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_Autocorrelation)->Arg(128)->Arg(512);

static void BM_Levinson(benchmark::State& state) {
  const TimeSignal x = random_signal(80000, 3);
  const auto r = autocorrelation(x.samples, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto m = levinson(r);
    benchmark::DoNotOptimize(m.coeffs.data());
  }
}
BENCHMARK(BM_Levinson)->Arg(128)->Arg(512);

static void BM_BandedCholesky(benchmark::State& state) {
  const int n = 32768;
  const int p = static_cast<int>(state.range(0));
  const ARModel m = random_model(p, 4);
  const BandedSpdMatrix B = gram_plus_identity(m, n, 1.0);
  for (auto _ : state) {
    auto L = banded_cholesky(B);
    benchmark::DoNotOptimize(L.bands.data());
  }
}
BENCHMARK(BM_BandedCholesky)->Arg(64)->Arg(256)->Arg(512);

static void BM_BandedSolve(benchmark::State& state) {
  const int n = 32768;
  const int p = static_cast<int>(state.range(0));
  const ARModel m = random_model(p, 5);
  const auto L = banded_cholesky(gram_plus_identity(m, n, 1.0));
  const TimeSignal v = random_signal(static_cast<std::size_t>(n), 6);
  for (auto _ : state) {
    auto x = banded_solve(L, v.samples);
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_BandedSolve)->Arg(64)->Arg(256)->Arg(512);

static void BM_AdmmSignalUpdate(benchmark::State& state) {
  const TimeSignal x = random_signal(32000, 7);
  StftOperator op(StftParams{});
  const Spectrogram X = op.analyze(x);
  TFMask mask;
  mask.total_columns = X.n_frames;
  mask.missing_columns = {20, 21, 22};
  Spectrogram X_cor = X;
  for (int t : mask.missing_columns) {
    for (int f = 0; f < X.n_bins(); ++f) X_cor.at(t, f) = 0.0;
  }
  const ARModel m = random_model(static_cast<int>(state.range(0)), 8);
  AdmmConfig cfg;
  cfg.inner_iters = 5;
  const TimeSignal x_init = istft(X_cor);
  for (auto _ : state) {
    auto res = admm_signal_update(m, X_cor, mask, x_init, cfg);
    benchmark::DoNotOptimize(res.x.samples.data());
  }
}
BENCHMARK(BM_AdmmSignalUpdate)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
