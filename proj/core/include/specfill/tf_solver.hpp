#pragma once

#include <vector>

#include "specfill/armodel.hpp"
#include "specfill/stft.hpp"

namespace specfill {

struct AdmmConfig {
  double rho = 1.0;
  int inner_iters = 20;  // K
  int outer_iters = 10;  // I
  int ar_order = 512;    // p
};

void validate(const AdmmConfig& cfg);

struct OuterDiagnostics {
  double objective = 0.0;        // 0.5 * ||A x||^2 under that iteration's model
  double primal_residual = 0.0;  // ||G xbar - z||_F after the last inner step
  double seconds = 0.0;
};

struct SolveDiagnostics {
  std::vector<OuterDiagnostics> outer;
};

// Projection onto the feasible set: observed columns from X_cor, missing
// columns from X. Idempotent.
Spectrogram project_feasible(const Spectrogram& X, const Spectrogram& X_cor, const TFMask& mask);

struct AdmmResult {
  TimeSignal x;
  std::vector<double> residual_trace;  // ||G xbar - z||_F per inner iteration
};

// ADMM solve of min 0.5||Ax||^2 s.t. Gx feasible, for a fixed AR model:
//   z = G x_init, u = 0
//   repeat K times:
//     xbar = (I + (1/rho) A^T A)^{-1} G*(z - u)   (one factorization, reused)
//     z    = project_feasible(G xbar + u)
//     u   += G xbar - z
AdmmResult admm_signal_update(const ARModel& model, const Spectrogram& X_cor, const TFMask& mask,
                              const TimeSignal& x_init, const AdmmConfig& cfg);

struct JanssenTfResult {
  TimeSignal x;                          // final estimate, padded length
  Spectrogram spectrogram;               // G x
  Spectrogram spectrogram_with_context;  // project_feasible(G x)
  SolveDiagnostics diagnostics;
};

// Alternates AR estimation on the current signal with the ADMM signal update,
// starting from x = istft(X_cor). X_cor must be zero on missing columns.
JanssenTfResult janssen_tf(const Spectrogram& X_cor, const TFMask& mask, const AdmmConfig& cfg);

}  // namespace specfill
