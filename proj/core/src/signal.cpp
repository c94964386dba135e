#include "specfill/signal.hpp"

#include <algorithm>
#include <cmath>

namespace specfill {

std::size_t TimeMask::count_unreliable() const {
  return static_cast<std::size_t>(std::count(reliable.begin(), reliable.end(), false));
}

bool TimeMask::all_reliable() const {
  return std::find(reliable.begin(), reliable.end(), false) == reliable.end();
}

void validate(const TimeSignal& x) {
  if (x.samples.empty()) fail(ErrorCode::invalid_parameter, "signal is empty");
  if (x.sample_rate_hz <= 0) fail(ErrorCode::invalid_parameter, "sample rate must be positive");
  for (double v : x.samples) {
    if (!std::isfinite(v)) fail(ErrorCode::invalid_parameter, "signal contains NaN or Inf");
  }
}

double energy(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc;
}

TimeSignal truncated(const TimeSignal& x, std::size_t n) {
  TimeSignal out;
  out.sample_rate_hz = x.sample_rate_hz;
  out.samples.assign(x.samples.begin(),
                     x.samples.begin() + static_cast<std::ptrdiff_t>(std::min(n, x.size())));
  return out;
}

}  // namespace specfill
