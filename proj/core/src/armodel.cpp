#include "specfill/armodel.hpp"

#include <cmath>

namespace specfill {

std::vector<double> autocorrelation(std::span<const double> x, int max_lag) {
  const auto n = x.size();
  if (max_lag < 0) fail(ErrorCode::invalid_order, "max_lag must be >= 0");
  if (static_cast<std::size_t>(max_lag) >= n)
    fail(ErrorCode::invalid_order, "max_lag must be smaller than the signal length");
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
  for (int k = 0; k <= max_lag; ++k) {
    double acc = 0.0;
    const std::size_t lim = n - static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < lim; ++i) acc += x[i] * x[i + static_cast<std::size_t>(k)];
    r[static_cast<std::size_t>(k)] = acc / static_cast<double>(n);
  }
  return r;
}

ARModel levinson(std::span<const double> r) {
  if (r.empty()) fail(ErrorCode::invalid_order, "autocorrelation sequence is empty");
  const int p = static_cast<int>(r.size()) - 1;
  if (!(r[0] > 0.0)) fail(ErrorCode::degenerate_signal, "autocorrelation at lag 0 is not positive");

  ARModel model;
  model.order = p;
  model.coeffs.assign(static_cast<std::size_t>(p) + 1, 0.0);
  model.coeffs[0] = 1.0;

  double err = r[0];
  const double floor = 1e-14 * r[0];
  std::vector<double> prev(model.coeffs);
  for (int m = 1; m <= p; ++m) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += model.coeffs[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(m - i)];
    const double k = -acc / err;
    prev = model.coeffs;
    for (int i = 1; i < m; ++i) {
      model.coeffs[static_cast<std::size_t>(i)] =
          prev[static_cast<std::size_t>(i)] + k * prev[static_cast<std::size_t>(m - i)];
    }
    model.coeffs[static_cast<std::size_t>(m)] = k;
    err *= (1.0 - k * k);
    if (err <= floor) break;  // early stop; remaining coefficients stay zero
  }
  model.error_variance = std::max(err, 0.0);
  return model;
}

ARModel lpc(std::span<const double> x, int order) {
  if (order < 1) fail(ErrorCode::invalid_order, "order must be >= 1");
  return levinson(autocorrelation(x, order));
}

ARModel lpc(const TimeSignal& x, int order) {
  validate(x);
  return lpc(std::span<const double>(x.samples), order);
}

std::vector<double> ar_error(const ARModel& model, std::span<const double> x) {
  const auto n = x.size();
  const auto pc = model.coeffs.size();
  std::vector<double> e(n + pc - 1, 0.0);
  for (std::size_t i = 0; i < pc; ++i) {
    const double a = model.coeffs[i];
    if (a == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) e[i + j] += a * x[j];
  }
  return e;
}

}  // namespace specfill
