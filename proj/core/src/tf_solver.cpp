#include "specfill/tf_solver.hpp"

#include <chrono>
#include <cmath>

#include "specfill/banded.hpp"

namespace specfill {

void validate(const AdmmConfig& cfg) {
  if (!(cfg.rho > 0.0)) fail(ErrorCode::invalid_parameter, "rho must be positive");
  if (cfg.inner_iters < 1) fail(ErrorCode::invalid_parameter, "inner_iters must be >= 1");
  if (cfg.outer_iters < 1) fail(ErrorCode::invalid_parameter, "outer_iters must be >= 1");
  if (cfg.ar_order < 1) fail(ErrorCode::invalid_parameter, "ar_order must be >= 1");
}

Spectrogram project_feasible(const Spectrogram& X, const Spectrogram& X_cor, const TFMask& mask) {
  if (!X.same_shape(X_cor))
    fail(ErrorCode::inconsistent_input, "spectrogram shapes do not match");
  validate(mask);
  if (mask.total_columns != X.n_frames)
    fail(ErrorCode::inconsistent_input, "mask does not match the spectrogram column count");

  Spectrogram out = X_cor;  // observed columns from X_cor
  const int nb = X.n_bins();
  for (int t : mask.missing_columns) {
    const auto* src = X.coeffs.data() + static_cast<std::size_t>(t) * nb;
    auto* dst = out.coeffs.data() + static_cast<std::size_t>(t) * nb;
    for (int f = 0; f < nb; ++f) dst[f] = src[f];
  }
  return out;
}

namespace {

double frobenius_diff(const Spectrogram& A, const Spectrogram& B) {
  double acc = 0.0;
  for (std::size_t i = 0; i < A.coeffs.size(); ++i) acc += std::norm(A.coeffs[i] - B.coeffs[i]);
  return std::sqrt(acc);
}

// One full inner ADMM loop with a prebuilt operator and factorization.
AdmmResult admm_inner(StftOperator& op, const BandedCholesky& factor, const Spectrogram& X_cor,
                      const TFMask& mask, const TimeSignal& x_init, const AdmmConfig& cfg) {
  AdmmResult result;
  result.residual_trace.reserve(static_cast<std::size_t>(cfg.inner_iters));

  Spectrogram z = op.analyze(x_init);
  Spectrogram u = z;
  for (auto& c : u.coeffs) c = 0.0;

  Spectrogram work = z;  // holds z - u, then G xbar + u
  TimeSignal xbar;
  for (int k = 0; k < cfg.inner_iters; ++k) {
    for (std::size_t i = 0; i < work.coeffs.size(); ++i)
      work.coeffs[i] = z.coeffs[i] - u.coeffs[i];
    xbar = op.synthesize(work);
    banded_solve_inplace(factor, xbar.samples);
    const Spectrogram gx = op.analyze(xbar);
    for (std::size_t i = 0; i < work.coeffs.size(); ++i)
      work.coeffs[i] = gx.coeffs[i] + u.coeffs[i];
    z = project_feasible(work, X_cor, mask);
    for (std::size_t i = 0; i < u.coeffs.size(); ++i)
      u.coeffs[i] += gx.coeffs[i] - z.coeffs[i];
    result.residual_trace.push_back(frobenius_diff(gx, z));
  }
  result.x = std::move(xbar);
  return result;
}

bool all_zero(const Spectrogram& X) {
  for (const auto& c : X.coeffs) {
    if (c.real() != 0.0 || c.imag() != 0.0) return false;
  }
  return true;
}

}  // namespace

AdmmResult admm_signal_update(const ARModel& model, const Spectrogram& X_cor, const TFMask& mask,
                              const TimeSignal& x_init, const AdmmConfig& cfg) {
  validate(cfg);
  StftOperator op(X_cor.params);
  const int n = X_cor.n_frames * X_cor.params.hop;  // padded signal length
  const BandedCholesky factor = banded_cholesky(gram_plus_identity(model, n, cfg.rho));
  return admm_inner(op, factor, X_cor, mask, x_init, cfg);
}

JanssenTfResult janssen_tf(const Spectrogram& X_cor, const TFMask& mask, const AdmmConfig& cfg) {
  validate(cfg);
  validate(mask);
  if (mask.total_columns != X_cor.n_frames)
    fail(ErrorCode::inconsistent_input, "mask does not match the spectrogram column count");
  if (static_cast<int>(mask.missing_columns.size()) == mask.total_columns)
    fail(ErrorCode::no_reliable_data, "every spectrogram column is missing");

  StftOperator op(X_cor.params);
  JanssenTfResult result;

  if (all_zero(X_cor)) {
    // The zero signal is the exact minimizer of every iteration; lpc on it is
    // degenerate by design, so short-circuit.
    result.x = op.synthesize(X_cor);
    result.spectrogram = X_cor;
    result.spectrogram_with_context = X_cor;
    return result;
  }

  TimeSignal x = op.synthesize(X_cor);
  const int n = static_cast<int>(x.size());

  ARModel model;
  bool have_model = false;
  for (int i = 0; i < cfg.outer_iters; ++i) {
    const auto started = std::chrono::steady_clock::now();
    try {
      model = lpc(std::span<const double>(x.samples), cfg.ar_order);
      have_model = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate_signal || !have_model) throw;
      // keep the previous iteration's model
    }
    const BandedCholesky factor = banded_cholesky(gram_plus_identity(model, n, cfg.rho));
    AdmmResult inner = admm_inner(op, factor, X_cor, mask, x, cfg);
    x = std::move(inner.x);

    OuterDiagnostics diag;
    diag.objective = 0.5 * energy(ar_error(model, x.samples));
    diag.primal_residual = inner.residual_trace.back();
    diag.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.diagnostics.outer.push_back(diag);
  }

  result.x = std::move(x);
  result.spectrogram = op.analyze(result.x);
  result.spectrogram_with_context = project_feasible(result.spectrogram, X_cor, mask);
  return result;
}

}  // namespace specfill
