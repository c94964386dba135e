#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "specfill/stft.hpp"
#include "support/test_signals.hpp"

using namespace specfill;
using specfill::testing::white_noise;

namespace {

StftParams small_params() {
  StftParams p;
  p.win_len = 32;
  p.hop = 8;
  p.n_channels = 32;
  return p;
}

}  // namespace

TEST_CASE("make_window hann closed form") {
  const auto w4 = make_window(WindowKind::hann, 4);
  REQUIRE(w4.size() == 4);
  CHECK(w4[0] == 0.0);
  CHECK(w4[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w4[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w4[3] == doctest::Approx(0.5).epsilon(1e-15));

  const auto w2 = make_window(WindowKind::hann, 2);
  CHECK(w2[0] == 0.0);
  CHECK(w2[1] == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(make_window(WindowKind::hann, 1), Error);
  try {
    make_window(WindowKind::hann, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_parameter);
  }
}

TEST_CASE("normalize_tight scales by the tiling constant") {
  SUBCASE("hann length 4 hop 1: c = 1.5") {
    const auto w = make_window(WindowKind::hann, 4);
    const auto wt = normalize_tight(w, 1);
    for (std::size_t i = 0; i < w.size(); ++i)
      CHECK(wt[i] == doctest::Approx(w[i] / std::sqrt(1.5)).epsilon(1e-14));
  }
  SUBCASE("all-ones length 4 hop 4: unchanged") {
    const std::vector<double> w(4, 1.0);
    const auto wt = normalize_tight(w, 4);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(wt[i] == doctest::Approx(1.0));
  }
  SUBCASE("hann length 2048 hop 512: c = 1.5") {
    const auto w = make_window(WindowKind::hann, 2048);
    const auto wt = normalize_tight(w, 512);
    for (std::size_t i : {0u, 1u, 777u, 2047u})
      CHECK(wt[i] == doctest::Approx(w[i] / std::sqrt(1.5)).epsilon(1e-14));
    // tiling of the normalized square sums to 1
    double acc = 0.0;
    for (std::size_t i = 3; i < 2048; i += 512) acc += wt[i] * wt[i];
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("hann at 50% overlap is not tileable") {
    const auto w = make_window(WindowKind::hann, 4);
    CHECK_THROWS_AS(normalize_tight(w, 2), Error);
    try {
      normalize_tight(w, 2);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::non_tileable_window);
    }
  }
  SUBCASE("hop must divide window length") {
    const auto w = make_window(WindowKind::hann, 4);
    CHECK_THROWS_AS(normalize_tight(w, 3), Error);
  }
}

TEST_CASE("stft basics") {
  SUBCASE("zero signal -> zero spectrogram") {
    TimeSignal x;
    x.sample_rate_hz = 16000;
    x.samples.assign(5000, 0.0);
    const Spectrogram X = stft(x);
    CHECK(X.energy() == 0.0);
  }
  SUBCASE("unit impulse has unit coefficient energy") {
    TimeSignal x;
    x.sample_rate_hz = 16000;
    x.samples = {1.0};
    const Spectrogram X = stft(x);
    CHECK(X.energy() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("parseval on a long random signal") {
    const TimeSignal x = white_noise(80000, 11);
    const Spectrogram X = stft(x);
    const double ex = energy(x.samples);
    CHECK(std::abs(X.energy() - ex) <= 1e-9 * ex);
  }
}

TEST_CASE("istft is the inverse on padded signals") {
  for (std::size_t n : {std::size_t{512}, std::size_t{5000}, std::size_t{80000}}) {
    const TimeSignal x = white_noise(n, 100 + n);
    const Spectrogram X = stft(x);
    const TimeSignal y = istft(X);
    REQUIRE(y.size() == X.params.padded_length(n));
    double worst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double ref = i < n ? x.samples[i] : 0.0;
      worst = std::max(worst, std::abs(y.samples[i] - ref));
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("istft of a zero spectrogram is zero") {
  const TimeSignal x = white_noise(1000, 3);
  Spectrogram X = stft(x, small_params());
  for (auto& c : X.coeffs) c = 0.0;
  const TimeSignal y = istft(X);
  for (double v : y.samples) CHECK(v == 0.0);
}

TEST_CASE("single nonzero column synthesizes onto its frame footprint") {
  const StftParams p = small_params();
  const TimeSignal x = white_noise(256, 4);
  Spectrogram X = stft(x, p);
  REQUIRE(X.n_frames == 32);
  const int t = 10;
  for (int tt = 0; tt < X.n_frames; ++tt) {
    if (tt == t) continue;
    for (int f = 0; f < X.n_bins(); ++f) X.at(tt, f) = 0.0;
  }
  const TimeSignal y = istft(X);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const bool inside = i >= static_cast<std::size_t>(t * p.hop) &&
                        i < static_cast<std::size_t>(t * p.hop + p.win_len);
    if (!inside) CHECK(y.samples[i] == 0.0);
  }
}

TEST_CASE("stft is linear") {
  const StftParams p = small_params();
  const TimeSignal x = white_noise(512, 5);
  const TimeSignal y = white_noise(512, 6);
  const double alpha = 1.7, beta = -0.4;
  TimeSignal z = x;
  for (std::size_t i = 0; i < z.size(); ++i)
    z.samples[i] = alpha * x.samples[i] + beta * y.samples[i];
  const Spectrogram Xz = stft(z, p);
  const Spectrogram Xx = stft(x, p);
  const Spectrogram Xy = stft(y, p);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < Xz.coeffs.size(); ++i) {
    num += std::norm(Xz.coeffs[i] - alpha * Xx.coeffs[i] - beta * Xy.coeffs[i]);
    den += std::norm(Xz.coeffs[i]);
  }
  CHECK(std::sqrt(num) <= 1e-12 * std::sqrt(den));
}

TEST_CASE("synthesize is the real-linear adjoint of analyze") {
  const StftParams p = small_params();
  const TimeSignal x = white_noise(256, 7);
  StftOperator op(p);
  const Spectrogram Gx = op.analyze(x);

  // random coefficient matrix, including imaginary parts at DC/Nyquist
  std::mt19937_64 rng(8);
  NormalSampler normal;
  Spectrogram Y = Gx;
  for (auto& c : Y.coeffs) c = {normal(rng), normal(rng)};

  double lhs = 0.0;
  for (std::size_t i = 0; i < Gx.coeffs.size(); ++i)
    lhs += Gx.coeffs[i].real() * Y.coeffs[i].real() + Gx.coeffs[i].imag() * Y.coeffs[i].imag();
  const TimeSignal gy = op.synthesize(Y);
  double rhs = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) rhs += x.samples[i] * gy.samples[i];
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("affected_samples marks frame footprints") {
  StftParams p;  // defaults: win 2048, hop 512
  SUBCASE("empty mask -> all reliable") {
    TFMask mask;
    mask.total_columns = p.frames_for(80000);
    const TimeMask tm = affected_samples(mask, p, 80000);
    CHECK(tm.all_reliable());
  }
  SUBCASE("one missing column") {
    TFMask mask;
    mask.total_columns = p.frames_for(80000);
    mask.missing_columns = {30};
    const TimeMask tm = affected_samples(mask, p, 80000);
    CHECK(tm.count_unreliable() == 2048);
    for (std::size_t i = 30 * 512; i < 30 * 512 + 2048; ++i) CHECK_FALSE(tm.reliable[i]);
    CHECK(tm.reliable[30 * 512 - 1]);
    CHECK(tm.reliable[30 * 512 + 2048]);
  }
  SUBCASE("two adjacent missing columns") {
    TFMask mask;
    mask.total_columns = p.frames_for(80000);
    mask.missing_columns = {30, 31};
    const TimeMask tm = affected_samples(mask, p, 80000);
    CHECK(tm.count_unreliable() == 2560);
  }
  SUBCASE("run length property") {
    const StftParams sp = small_params();
    for (int g = 1; g <= 6; ++g) {
      TFMask mask;
      mask.total_columns = sp.frames_for(512);
      for (int k = 0; k < g; ++k) mask.missing_columns.push_back(20 + k);
      const TimeMask tm = affected_samples(mask, sp, 512);
      CHECK(tm.count_unreliable() ==
            static_cast<std::size_t>((g - 1) * sp.hop + sp.win_len));
    }
  }
  SUBCASE("mask column count mismatch") {
    TFMask mask;
    mask.total_columns = 10;
    CHECK_THROWS_AS(affected_samples(mask, p, 80000), Error);
    try {
      affected_samples(mask, p, 80000);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::inconsistent_mask);
    }
  }
}
