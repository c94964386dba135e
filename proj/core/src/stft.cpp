#include "specfill/stft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace specfill {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

std::size_t StftParams::padded_length(std::size_t n_samples) const {
  const auto h = static_cast<std::size_t>(hop);
  return ((n_samples + h - 1) / h) * h;
}

int StftParams::frames_for(std::size_t n_samples) const {
  return static_cast<int>(padded_length(n_samples) / static_cast<std::size_t>(hop));
}

void validate(const StftParams& p) {
  if (p.win_len < 2) fail(ErrorCode::invalid_parameter, "win_len must be >= 2");
  if (p.hop < 1) fail(ErrorCode::invalid_parameter, "hop must be >= 1");
  if (p.win_len % p.hop != 0) fail(ErrorCode::invalid_parameter, "hop must divide win_len");
  if (p.n_channels < p.win_len)
    fail(ErrorCode::invalid_parameter, "n_channels must be >= win_len");
  if (p.n_channels % 2 != 0) fail(ErrorCode::invalid_parameter, "n_channels must be even");
}

double Spectrogram::energy() const {
  double acc = 0.0;
  for (const auto& c : coeffs) acc += std::norm(c);
  return acc;
}

void validate(const TFMask& m) {
  if (m.total_columns <= 0) fail(ErrorCode::inconsistent_mask, "total_columns must be positive");
  int prev = -1;
  for (int t : m.missing_columns) {
    if (t < 0 || t >= m.total_columns)
      fail(ErrorCode::inconsistent_mask, "missing column index out of range");
    if (t <= prev) fail(ErrorCode::inconsistent_mask, "missing columns must be sorted and unique");
    prev = t;
  }
}

std::vector<char> missing_lookup(const TFMask& m) {
  std::vector<char> missing(static_cast<std::size_t>(m.total_columns), 0);
  for (int t : m.missing_columns) missing[static_cast<std::size_t>(t)] = 1;
  return missing;
}

std::vector<double> make_window(WindowKind kind, int length) {
  if (length < 2) fail(ErrorCode::invalid_parameter, "window length must be >= 2");
  std::vector<double> w(static_cast<std::size_t>(length));
  switch (kind) {
    case WindowKind::hann:
      for (int n = 0; n < length; ++n) {
        w[static_cast<std::size_t>(n)] =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * n / length));
      }
      break;
  }
  return w;
}

std::vector<double> normalize_tight(const std::vector<double>& window, int hop) {
  const int len = static_cast<int>(window.size());
  if (hop < 1 || len < 1 || len % hop != 0)
    fail(ErrorCode::invalid_parameter, "hop must divide window length");
  // Overlap-added squared window per hop residue; constant for tileable windows.
  std::vector<double> tile(static_cast<std::size_t>(hop), 0.0);
  for (int n = 0; n < len; ++n) {
    tile[static_cast<std::size_t>(n % hop)] += window[static_cast<std::size_t>(n)] *
                                               window[static_cast<std::size_t>(n)];
  }
  const double c = tile[0];
  if (!(c > 0.0)) fail(ErrorCode::non_tileable_window, "squared window overlap-adds to zero");
  for (double v : tile) {
    if (std::abs(v - c) > 1e-12 * c)
      fail(ErrorCode::non_tileable_window, "squared window does not overlap-add to a constant");
  }
  std::vector<double> out(window);
  const double scale = 1.0 / std::sqrt(c);
  for (double& v : out) v *= scale;
  return out;
}

namespace {
std::vector<double> tight_window_for(const StftParams& p) {
  validate(p);
  return normalize_tight(make_window(p.window, p.win_len), p.hop);
}
}  // namespace

StftOperator::StftOperator(StftParams params)
    : params_(params),
      window_(tight_window_for(params)),
      fft_(params.n_channels),
      frame_(static_cast<std::size_t>(params.n_channels), 0.0),
      bins_(static_cast<std::size_t>(params.n_bins())) {}

Spectrogram StftOperator::analyze(const TimeSignal& x) {
  validate(x);
  const std::size_t padded = params_.padded_length(x.size());
  const int n_frames = params_.frames_for(x.size());
  const int nb = params_.n_bins();
  const int win = params_.win_len;

  Spectrogram out;
  out.params = params_;
  out.sample_rate_hz = x.sample_rate_hz;
  out.source_length = x.size();
  out.n_frames = n_frames;
  out.coeffs.resize(static_cast<std::size_t>(n_frames) * nb);

  for (int t = 0; t < n_frames; ++t) {
    const std::size_t start = static_cast<std::size_t>(t) * params_.hop;
    for (int j = 0; j < win; ++j) {
      const std::size_t idx = (start + static_cast<std::size_t>(j)) % padded;
      const double sample = idx < x.size() ? x.samples[idx] : 0.0;
      frame_[static_cast<std::size_t>(j)] = window_[static_cast<std::size_t>(j)] * sample;
    }
    std::fill(frame_.begin() + win, frame_.end(), 0.0);
    fft_.forward(frame_, bins_.data());
    auto* row = out.coeffs.data() + static_cast<std::size_t>(t) * nb;
    row[0] = bins_[0];
    for (int f = 1; f < nb - 1; ++f) row[f] = bins_[static_cast<std::size_t>(f)] * kSqrt2;
    row[nb - 1] = bins_[static_cast<std::size_t>(nb - 1)];
  }
  return out;
}

TimeSignal StftOperator::synthesize(const Spectrogram& X) {
  if (X.params != params_)
    fail(ErrorCode::inconsistent_input, "spectrogram params do not match the operator");
  const int nb = params_.n_bins();
  const int win = params_.win_len;
  const std::size_t padded = static_cast<std::size_t>(X.n_frames) * params_.hop;

  TimeSignal out;
  out.sample_rate_hz = X.sample_rate_hz;
  out.samples.assign(padded, 0.0);

  for (int t = 0; t < X.n_frames; ++t) {
    const auto* row = X.coeffs.data() + static_cast<std::size_t>(t) * nb;
    bins_[0] = row[0];
    for (int f = 1; f < nb - 1; ++f) bins_[static_cast<std::size_t>(f)] = row[f] / kSqrt2;
    bins_[static_cast<std::size_t>(nb - 1)] = row[nb - 1];
    fft_.inverse(bins_, frame_.data());
    const std::size_t start = static_cast<std::size_t>(t) * params_.hop;
    for (int j = 0; j < win; ++j) {
      const std::size_t idx = (start + static_cast<std::size_t>(j)) % padded;
      out.samples[idx] += window_[static_cast<std::size_t>(j)] * frame_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Spectrogram stft(const TimeSignal& x, const StftParams& params) {
  StftOperator op(params);
  return op.analyze(x);
}

TimeSignal istft(const Spectrogram& X) {
  StftOperator op(X.params);
  return op.synthesize(X);
}

TimeMask affected_samples(const TFMask& mask, const StftParams& params, std::size_t n_samples) {
  validate(params);
  validate(mask);
  if (n_samples == 0) fail(ErrorCode::invalid_parameter, "empty signal");
  const std::size_t padded = params.padded_length(n_samples);
  const int n_frames = params.frames_for(n_samples);
  if (mask.total_columns != n_frames)
    fail(ErrorCode::inconsistent_mask, "mask column count does not match the signal length");

  TimeMask out;
  out.reliable.assign(n_samples, true);
  for (int t : mask.missing_columns) {
    const std::size_t start = static_cast<std::size_t>(t) * params.hop;
    for (int j = 0; j < params.win_len; ++j) {
      const std::size_t idx = (start + static_cast<std::size_t>(j)) % padded;
      if (idx < n_samples) out.reliable[idx] = false;
    }
  }
  return out;
}

}  // namespace specfill
