#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "specfill/armodel.hpp"
#include "specfill/signal.hpp"

namespace specfill {

// One maximal run of missing samples plus the reliable context taken on each
// side (clamped at the signal bounds).
struct GapContext {
  std::size_t gap_start = 0;
  std::size_t gap_len = 0;
  std::size_t context_left = 0;
  std::size_t context_right = 0;
};

std::vector<GapContext> gap_contexts(const TimeMask& mask, std::size_t context);

// Least-squares fill of the missing samples under a fixed AR model: solves
// (A^T A)_mm x_m = -(A^T A)_mo x_o. Reliable samples pass through bit-exact.
std::vector<double> fill_missing_ls(const ARModel& model, std::span<const double> x,
                                    const TimeMask& mask);

// Original Janssen iteration: alternate lpc on the current estimate with the
// least-squares fill. Missing samples must be zero-filled on input.
std::vector<double> janssen_td(std::span<const double> x_cor, const TimeMask& mask, int order,
                               int iters);

// Runs janssen_td locally around each maximal missing run, writing back only
// the missing samples.
TimeSignal gapwise_janssen(const TimeSignal& x_cor, const TimeMask& mask, int order, int iters,
                           std::size_t context);

}  // namespace specfill
