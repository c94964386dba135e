#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "specfill/rng.hpp"
#include "specfill/signal.hpp"

namespace specfill::testing {

inline TimeSignal white_noise(std::size_t n, std::uint64_t seed, double amplitude = 0.1,
                              int rate = 16000) {
  std::mt19937_64 rng(seed);
  NormalSampler normal;
  TimeSignal x;
  x.sample_rate_hz = rate;
  x.samples.resize(n);
  for (auto& v : x.samples) v = amplitude * normal(rng);
  return x;
}

// conv of (1, -2 r cos(theta), r^2) factors: a stable AR polynomial with
// resonances at the given pole angles.
inline std::vector<double> ar_coeffs_from_poles(const std::vector<std::pair<double, double>>& poles) {
  std::vector<double> a{1.0};
  for (const auto& [r, theta] : poles) {
    const std::vector<double> factor{1.0, -2.0 * r * std::cos(theta), r * r};
    std::vector<double> next(a.size() + 2, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < 3; ++j) next[i + j] += a[i] * factor[j];
    }
    a = std::move(next);
  }
  return a;
}

// Realization of sum_i a_i x_{n+1-i} = e_n with N(0, innovation_std) noise,
// burn-in discarded, normalized to the requested RMS.
inline TimeSignal synth_ar(const std::vector<double>& a, std::size_t n, std::uint64_t seed,
                           double rms = 0.1, int rate = 16000) {
  const std::size_t p = a.size() - 1;
  const std::size_t burn = 50 * p + 500;
  std::mt19937_64 rng(seed);
  NormalSampler normal;
  std::vector<double> x(burn + n, 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double v = normal(rng);
    for (std::size_t i = 1; i <= p && i <= t; ++i) v -= a[i] * x[t - i];
    x[t] = v;
  }
  TimeSignal out;
  out.sample_rate_hz = rate;
  out.samples.assign(x.begin() + static_cast<std::ptrdiff_t>(burn), x.end());
  double e = 0.0;
  for (double v : out.samples) e += v * v;
  const double scale = rms / std::sqrt(e / static_cast<double>(n));
  for (double& v : out.samples) v *= scale;
  return out;
}

// Default strongly-resonant AR(4) used by the in-class recovery tests.
inline std::vector<double> default_ar4() {
  return ar_coeffs_from_poles({{0.998, 0.045 * std::numbers::pi}, {0.995, 0.16 * std::numbers::pi}});
}

// Harmonic tone stack with slight vibrato plus a noise floor; audio-like.
inline TimeSignal harmonic_tone(std::size_t n, std::uint64_t seed, int rate = 16000) {
  std::mt19937_64 rng(seed);
  NormalSampler normal;
  TimeSignal x;
  x.sample_rate_hz = rate;
  x.samples.resize(n);
  const double f0 = 220.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double ts = static_cast<double>(t) / rate;
    const double vib = 1.0 + 0.002 * std::sin(2.0 * std::numbers::pi * 5.0 * ts);
    double v = 0.0;
    for (int h = 1; h <= 6; ++h)
      v += std::pow(0.6, h - 1) * std::sin(2.0 * std::numbers::pi * f0 * h * vib * ts);
    x.samples[t] = 0.12 * v + 0.001 * normal(rng);
  }
  return x;
}

// Speech-like: pulse train shaped by two resonators (formant-ish).
inline TimeSignal pulse_train_formants(std::size_t n, std::uint64_t seed, int rate = 16000) {
  std::mt19937_64 rng(seed);
  NormalSampler normal;
  std::vector<double> exc(n, 0.0);
  const std::size_t period = static_cast<std::size_t>(rate / 110);
  for (std::size_t t = 0; t < n; t += period) exc[t] = 1.0;
  for (auto& v : exc) v += 0.01 * normal(rng);

  const auto a = ar_coeffs_from_poles(
      {{0.97, 2.0 * std::numbers::pi * 700.0 / rate}, {0.96, 2.0 * std::numbers::pi * 1800.0 / rate}});
  std::vector<double> y(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    double v = exc[t];
    for (std::size_t i = 1; i < a.size() && i <= t; ++i) v -= a[i] * y[t - i];
    y[t] = v;
  }
  TimeSignal out;
  out.sample_rate_hz = rate;
  out.samples = std::move(y);
  double e = 0.0;
  for (double v : out.samples) e += v * v;
  const double scale = 0.1 / std::sqrt(e / static_cast<double>(n));
  for (double& v : out.samples) v *= scale;
  return out;
}

}  // namespace specfill::testing
