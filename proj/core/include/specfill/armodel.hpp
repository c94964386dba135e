#pragma once

#include <span>
#include <vector>

#include "specfill/signal.hpp"

namespace specfill {

// Autoregressive model a = [1, a_2, ..., a_{p+1}] with innovation variance.
struct ARModel {
  std::vector<double> coeffs;  // coeffs[0] == 1, length order + 1
  int order = 0;
  double error_variance = 0.0;
};

// Biased autocorrelation estimate r_k = (1/N) sum_n x_n x_{n+k}, k = 0..max_lag.
std::vector<double> autocorrelation(std::span<const double> x, int max_lag);

// Levinson-Durbin recursion on an autocorrelation sequence r[0..p].
// If the prediction-error variance underflows (<= 1e-14 * r[0]) the recursion
// stops early and the remaining coefficients are zero.
ARModel levinson(std::span<const double> r);

ARModel lpc(std::span<const double> x, int order);
ARModel lpc(const TimeSignal& x, int order);

// Full convolution of the model coefficients with x (x zero-padded to length
// N + p); equals A x for the Toeplitz prediction-error matrix A.
std::vector<double> ar_error(const ARModel& model, std::span<const double> x);

}  // namespace specfill
