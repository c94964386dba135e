#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "specfill/error.hpp"

namespace specfill {

// Mono audio in [-1, 1] nominal range.
struct TimeSignal {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  std::size_t size() const { return samples.size(); }
};

// Per-sample reliability flags; false marks samples treated as missing.
struct TimeMask {
  std::vector<bool> reliable;

  std::size_t size() const { return reliable.size(); }
  std::size_t count_unreliable() const;
  bool all_reliable() const;
};

void validate(const TimeSignal& x);

double energy(std::span<const double> x);

// Drops samples past n (used to undo STFT padding).
TimeSignal truncated(const TimeSignal& x, std::size_t n);

}  // namespace specfill
