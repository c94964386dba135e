#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "specfill/signal.hpp"

namespace specfill {

struct MetricsRecord {
  std::string signal_id;
  std::string method;  // janssen_tf_raw | janssen_tf_context | gapwise_janssen
  int gap_len_columns = 0;
  double snr_db = 0.0;  // +inf sentinel for exact reconstruction
  double runtime_s = 0.0;
};

// SNR(ref, est) = 10 log10(||ref||^2 / ||ref - est||^2) in dB.
// Returns +inf for a zero error signal; errors on a zero reference.
double snr(std::span<const double> x_ref, std::span<const double> x_est);
double snr(const TimeSignal& x_ref, const TimeSignal& x_est);

// SNR restricted to the unreliable samples of region (gap-only variant).
double snr_masked(std::span<const double> x_ref, std::span<const double> x_est,
                  const TimeMask& region);

struct BootstrapCi {
  double mean = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// Percentile bootstrap of the sample mean. Deterministic in seed; the interval
// always brackets the sample mean.
BootstrapCi bootstrap_mean_ci(std::span<const double> values, double alpha, int n_resamples,
                              std::uint64_t seed);

struct AggregateRow {
  std::string method;
  int gap_len = 0;
  double mean_snr_db = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  int n = 0;             // finite values aggregated
  int n_excluded = 0;    // +inf sentinels dropped
  bool degenerate = false;  // fewer than 2 finite values, CI collapsed
};

// Bootstrap mean CI per (method, gap_len) key, sorted by (method, gap_len).
// Per-key bootstrap seeds are derived from seed, so results do not depend on
// record order.
std::vector<AggregateRow> aggregate(const std::vector<MetricsRecord>& records, double alpha,
                                    int n_resamples, std::uint64_t seed);

}  // namespace specfill
