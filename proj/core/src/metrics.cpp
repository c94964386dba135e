#include "specfill/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "specfill/rng.hpp"

namespace specfill {

double snr(std::span<const double> x_ref, std::span<const double> x_est) {
  if (x_ref.size() != x_est.size())
    fail(ErrorCode::inconsistent_input, "signal lengths differ");
  if (x_ref.empty()) fail(ErrorCode::inconsistent_input, "empty signals");
  double ref_energy = 0.0;
  double err_energy = 0.0;
  for (std::size_t i = 0; i < x_ref.size(); ++i) {
    ref_energy += x_ref[i] * x_ref[i];
    const double d = x_ref[i] - x_est[i];
    err_energy += d * d;
  }
  if (!(ref_energy > 0.0)) fail(ErrorCode::undefined_reference, "zero reference signal");
  if (err_energy == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(ref_energy / err_energy);
}

double snr(const TimeSignal& x_ref, const TimeSignal& x_est) {
  return snr(std::span<const double>(x_ref.samples), std::span<const double>(x_est.samples));
}

double snr_masked(std::span<const double> x_ref, std::span<const double> x_est,
                  const TimeMask& region) {
  if (x_ref.size() != x_est.size() || region.size() != x_ref.size())
    fail(ErrorCode::inconsistent_input, "signal/mask lengths differ");
  std::vector<double> ref, est;
  for (std::size_t i = 0; i < x_ref.size(); ++i) {
    if (!region.reliable[i]) {
      ref.push_back(x_ref[i]);
      est.push_back(x_est[i]);
    }
  }
  if (ref.empty()) fail(ErrorCode::inconsistent_input, "region marks no samples");
  return snr(std::span<const double>(ref), std::span<const double>(est));
}

BootstrapCi bootstrap_mean_ci(std::span<const double> values, double alpha, int n_resamples,
                              std::uint64_t seed) {
  const std::size_t n = values.size();
  if (n < 2) fail(ErrorCode::insufficient_data, "need at least 2 values");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::invalid_parameter, "alpha must be in (0,1)");
  if (n_resamples < 1) fail(ErrorCode::invalid_parameter, "n_resamples must be >= 1");

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);

  std::mt19937_64 rng(seed);
  std::vector<double> means(static_cast<std::size_t>(n_resamples));
  for (auto& m : means) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += values[uniform_index(rng, n)];
    m = acc / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());

  const auto b = static_cast<double>(n_resamples);
  auto lo_idx = static_cast<std::size_t>(std::floor(alpha / 2.0 * b));
  auto hi_idx = static_cast<std::size_t>(std::ceil((1.0 - alpha / 2.0) * b)) - 1;
  lo_idx = std::min(lo_idx, means.size() - 1);
  hi_idx = std::min(hi_idx, means.size() - 1);

  BootstrapCi ci;
  ci.mean = mean;
  ci.lower = std::min(means[lo_idx], mean);
  ci.upper = std::max(means[hi_idx], mean);
  return ci;
}

std::vector<AggregateRow> aggregate(const std::vector<MetricsRecord>& records, double alpha,
                                    int n_resamples, std::uint64_t seed) {
  if (records.empty()) return {};
  std::map<std::pair<std::string, int>, std::vector<double>> finite;
  std::map<std::pair<std::string, int>, int> excluded;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.method, r.gap_len_columns);
    if (std::isinf(r.snr_db)) {
      ++excluded[key];
      finite.try_emplace(key);
    } else {
      finite[key].push_back(r.snr_db);
    }
  }

  std::vector<AggregateRow> rows;
  for (const auto& [key, values] : finite) {
    AggregateRow row;
    row.method = key.first;
    row.gap_len = key.second;
    row.n = static_cast<int>(values.size());
    const auto it = excluded.find(key);
    row.n_excluded = it == excluded.end() ? 0 : it->second;
    if (values.size() >= 2) {
      const auto ci = bootstrap_mean_ci(values, alpha, n_resamples,
                                        derive_seed(seed, key.first, static_cast<std::uint64_t>(key.second)));
      row.mean_snr_db = ci.mean;
      row.ci_lo = ci.lower;
      row.ci_hi = ci.upper;
    } else if (values.size() == 1) {
      row.mean_snr_db = row.ci_lo = row.ci_hi = values.front();
      row.degenerate = true;
    } else {
      row.mean_snr_db = row.ci_lo = row.ci_hi = std::numeric_limits<double>::infinity();
      row.degenerate = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;  // std::map iteration is already (method, gap_len)-sorted
}

}  // namespace specfill
