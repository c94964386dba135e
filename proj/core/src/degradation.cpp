#include "specfill/degradation.hpp"

#include <algorithm>

#include "specfill/rng.hpp"

namespace specfill {

DegradationPlan plan_gaps(int total_columns, int gap_len, int n_gaps, std::uint64_t seed,
                          int margin_columns, int separation_columns) {
  if (total_columns < 1) fail(ErrorCode::invalid_parameter, "total_columns must be positive");
  if (gap_len < 1 || gap_len > 6) fail(ErrorCode::invalid_parameter, "gap_len must be in 1..6");
  if (n_gaps < 0) fail(ErrorCode::invalid_parameter, "n_gaps must be >= 0");
  if (margin_columns < 0 || separation_columns < 0)
    fail(ErrorCode::invalid_parameter, "margins must be >= 0");

  DegradationPlan plan;
  plan.total_columns = total_columns;
  plan.gap_len_columns = gap_len;
  plan.n_gaps = n_gaps;
  plan.seed = seed;
  plan.margin_columns = margin_columns;
  plan.separation_columns = separation_columns;
  if (n_gaps == 0) return plan;

  // Feasibility: n gaps plus n-1 separations must fit between the margins.
  const long long usable = static_cast<long long>(total_columns) - 2LL * margin_columns;
  const long long needed = static_cast<long long>(n_gaps) * gap_len +
                           static_cast<long long>(n_gaps - 1) * separation_columns;
  if (needed > usable) fail(ErrorCode::cannot_place_gaps, "gaps do not fit the column range");

  const int lo = margin_columns;
  const int hi = total_columns - margin_columns - gap_len;  // inclusive last start

  std::mt19937_64 rng(seed);
  std::vector<int> starts(static_cast<std::size_t>(n_gaps));
  constexpr int kMaxAttempts = 200000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (auto& s : starts)
      s = lo + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    std::sort(starts.begin(), starts.end());
    bool ok = true;
    for (std::size_t i = 1; i < starts.size(); ++i) {
      if (starts[i] - (starts[i - 1] + gap_len) < separation_columns) {
        ok = false;
        break;
      }
    }
    if (ok) {
      plan.gap_starts = starts;
      return plan;
    }
  }
  fail(ErrorCode::cannot_place_gaps, "rejection sampling found no valid placement");
}

TFMask mask_from_plan(const DegradationPlan& plan) {
  TFMask mask;
  mask.total_columns = plan.total_columns;
  for (int s : plan.gap_starts) {
    for (int k = 0; k < plan.gap_len_columns; ++k) mask.missing_columns.push_back(s + k);
  }
  std::sort(mask.missing_columns.begin(), mask.missing_columns.end());
  validate(mask);
  return mask;
}

std::pair<Spectrogram, TFMask> degrade(const Spectrogram& X, const DegradationPlan& plan) {
  if (plan.total_columns != X.n_frames)
    fail(ErrorCode::inconsistent_input, "plan does not match the spectrogram column count");
  TFMask mask = mask_from_plan(plan);
  Spectrogram out = X;
  const int nb = X.n_bins();
  for (int t : mask.missing_columns) {
    auto* row = out.coeffs.data() + static_cast<std::size_t>(t) * nb;
    for (int f = 0; f < nb; ++f) row[f] = 0.0;
  }
  return {std::move(out), std::move(mask)};
}

}  // namespace specfill
