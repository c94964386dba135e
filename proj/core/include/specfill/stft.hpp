#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "specfill/fft.hpp"
#include "specfill/signal.hpp"

namespace specfill {

enum class WindowKind { hann };

// Analysis/synthesis geometry. Defaults give a 2048-sample Hann window with
// 75% overlap and 2048 DFT channels, a Parseval tight frame.
struct StftParams {
  int win_len = 2048;
  int hop = 512;
  int n_channels = 2048;
  WindowKind window = WindowKind::hann;

  int n_bins() const { return n_channels / 2 + 1; }
  std::size_t padded_length(std::size_t n_samples) const;
  int frames_for(std::size_t n_samples) const;

  bool operator==(const StftParams&) const = default;
};

void validate(const StftParams& p);

// Complex T x F coefficient matrix, frame-major: coeffs[t * n_bins + f].
// One-sided storage with sqrt(2) weight on interior bins keeps the Frobenius
// norm equal to the two-sided coefficient energy.
struct Spectrogram {
  StftParams params;
  int sample_rate_hz = 0;
  std::size_t source_length = 0;  // samples before padding
  int n_frames = 0;
  std::vector<std::complex<double>> coeffs;

  int n_bins() const { return params.n_bins(); }
  std::complex<double>& at(int t, int f) {
    return coeffs[static_cast<std::size_t>(t) * params.n_bins() + f];
  }
  const std::complex<double>& at(int t, int f) const {
    return coeffs[static_cast<std::size_t>(t) * params.n_bins() + f];
  }
  double energy() const;  // squared Frobenius norm
  bool same_shape(const Spectrogram& other) const {
    return n_frames == other.n_frames && params.n_channels == other.params.n_channels;
  }
};

// Column reliability mask: listed columns are missing, all others observed.
struct TFMask {
  std::vector<int> missing_columns;  // sorted, unique, in [0, total_columns)
  int total_columns = 0;
};

void validate(const TFMask& m);
std::vector<char> missing_lookup(const TFMask& m);

// Periodic Hann: w(n) = 0.5 * (1 - cos(2 pi n / length)).
std::vector<double> make_window(WindowKind kind, int length);

// Scales the window so its squared hop-shifted tiling sums to 1. Errors if the
// overlap-added squared window is not constant within 1e-12 relative.
std::vector<double> normalize_tight(const std::vector<double>& window, int hop);

// Tight-frame STFT bound to fixed params; reuse one instance in hot loops.
// Framing is cyclic on the signal zero-padded to a multiple of hop.
class StftOperator {
 public:
  explicit StftOperator(StftParams params);

  const StftParams& params() const { return params_; }

  Spectrogram analyze(const TimeSignal& x);
  // Adjoint synthesis. Returns the padded-length signal (n_frames * hop).
  TimeSignal synthesize(const Spectrogram& X);

 private:
  StftParams params_;
  std::vector<double> window_;
  RealFft fft_;
  std::vector<double> frame_;
  std::vector<std::complex<double>> bins_;
};

Spectrogram stft(const TimeSignal& x, const StftParams& params = {});
TimeSignal istft(const Spectrogram& X);

// Marks unreliable every sample covered by a missing column's frame footprint,
// cyclically wrapped at the padded length and truncated to n_samples.
TimeMask affected_samples(const TFMask& mask, const StftParams& params, std::size_t n_samples);

}  // namespace specfill
