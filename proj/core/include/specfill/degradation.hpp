#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specfill/stft.hpp"

namespace specfill {

struct DegradationPlan {
  int total_columns = 0;
  int gap_len_columns = 0;
  int n_gaps = 0;
  std::uint64_t seed = 0;
  int margin_columns = 0;
  int separation_columns = 0;       // required columns between one gap's end and the next start
  std::vector<int> gap_starts;      // sorted
};

// Uniform rejection sampling of n_gaps non-overlapping gap placements, all
// inside [margin, total - margin) and pairwise separated end-to-start by at
// least separation_columns. Deterministic in seed.
DegradationPlan plan_gaps(int total_columns, int gap_len, int n_gaps, std::uint64_t seed,
                          int margin_columns, int separation_columns);

TFMask mask_from_plan(const DegradationPlan& plan);

// Zeroes the planned columns: X_cor = M (.) X. Unmasked columns bit-identical.
std::pair<Spectrogram, TFMask> degrade(const Spectrogram& X, const DegradationPlan& plan);

}  // namespace specfill
