#include "specfill/td_baseline.hpp"

#include <algorithm>
#include <cmath>

#include "specfill/banded.hpp"

namespace specfill {

namespace {

struct Run {
  std::size_t start = 0;
  std::size_t len = 0;
};

std::vector<Run> missing_runs(const TimeMask& mask) {
  std::vector<Run> runs;
  const std::size_t n = mask.size();
  std::size_t i = 0;
  while (i < n) {
    if (mask.reliable[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !mask.reliable[j]) ++j;
    runs.push_back({i, j - i});
    i = j;
  }
  return runs;
}

// Dense SPD solve for scattered missing indices (small systems).
std::vector<double> dense_spd_solve(std::vector<double>& M, std::vector<double>& b, int m) {
  // in-place Cholesky
  for (int j = 0; j < m; ++j) {
    double d = M[static_cast<std::size_t>(j) * m + j];
    for (int k = 0; k < j; ++k) {
      const double v = M[static_cast<std::size_t>(j) * m + k];
      d -= v * v;
    }
    if (!(d > 0.0)) fail(ErrorCode::not_positive_definite, "singular fill subsystem");
    d = std::sqrt(d);
    M[static_cast<std::size_t>(j) * m + j] = d;
    for (int i = j + 1; i < m; ++i) {
      double v = M[static_cast<std::size_t>(i) * m + j];
      for (int k = 0; k < j; ++k)
        v -= M[static_cast<std::size_t>(i) * m + k] * M[static_cast<std::size_t>(j) * m + k];
      M[static_cast<std::size_t>(i) * m + j] = v / d;
    }
  }
  std::vector<double> y(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double acc = b[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k) acc -= M[static_cast<std::size_t>(i) * m + k] * y[static_cast<std::size_t>(k)];
    y[static_cast<std::size_t>(i)] = acc / M[static_cast<std::size_t>(i) * m + i];
  }
  std::vector<double> x(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    double acc = y[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < m; ++k) acc -= M[static_cast<std::size_t>(k) * m + i] * x[static_cast<std::size_t>(k)];
    x[static_cast<std::size_t>(i)] = acc / M[static_cast<std::size_t>(i) * m + i];
  }
  return x;
}

}  // namespace

std::vector<GapContext> gap_contexts(const TimeMask& mask, std::size_t context) {
  std::vector<GapContext> out;
  for (const Run& run : missing_runs(mask)) {
    GapContext g;
    g.gap_start = run.start;
    g.gap_len = run.len;
    g.context_left = std::min(context, run.start);
    g.context_right = std::min(context, mask.size() - (run.start + run.len));
    out.push_back(g);
  }
  return out;
}

std::vector<double> fill_missing_ls(const ARModel& model, std::span<const double> x,
                                    const TimeMask& mask) {
  const std::size_t n = x.size();
  if (mask.size() != n) fail(ErrorCode::inconsistent_input, "mask length does not match signal");
  const std::size_t n_missing = mask.count_unreliable();
  std::vector<double> out(x.begin(), x.end());
  if (n_missing == 0) return out;
  if (n_missing == n) fail(ErrorCode::no_reliable_data, "every sample is missing");

  const int p = static_cast<int>(model.coeffs.size()) - 1;
  const std::vector<double> t = ar_gram_band(model);  // lag values of A^T A

  std::vector<std::size_t> idx;
  idx.reserve(n_missing);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask.reliable[i]) idx.push_back(i);
  }

  // rhs_i = -sum_{j observed, |i-j| <= p} t_{|i-j|} x_j
  std::vector<double> rhs(idx.size(), 0.0);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const std::ptrdiff_t i = static_cast<std::ptrdiff_t>(idx[r]);
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - p);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, i + p);
    double acc = 0.0;
    for (std::ptrdiff_t j = lo; j <= hi; ++j) {
      if (!mask.reliable[static_cast<std::size_t>(j)]) continue;
      acc += t[static_cast<std::size_t>(std::abs(i - j))] * x[static_cast<std::size_t>(j)];
    }
    rhs[r] = -acc;
  }

  const bool contiguous = idx.back() - idx.front() + 1 == idx.size();
  std::vector<double> fill;
  if (contiguous) {
    const int m = static_cast<int>(idx.size());
    const BandedSpdMatrix B = toeplitz_spd(t, m);
    fill = banded_solve(banded_cholesky(B), rhs);
  } else {
    const int m = static_cast<int>(idx.size());
    std::vector<double> M(static_cast<std::size_t>(m) * m, 0.0);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        const std::size_t d = idx[static_cast<std::size_t>(a)] > idx[static_cast<std::size_t>(b)]
                                  ? idx[static_cast<std::size_t>(a)] - idx[static_cast<std::size_t>(b)]
                                  : idx[static_cast<std::size_t>(b)] - idx[static_cast<std::size_t>(a)];
        if (d <= static_cast<std::size_t>(p)) M[static_cast<std::size_t>(a) * m + b] = t[d];
      }
    }
    fill = dense_spd_solve(M, rhs, m);
  }

  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = fill[r];
  return out;
}

std::vector<double> janssen_td(std::span<const double> x_cor, const TimeMask& mask, int order,
                               int iters) {
  if (iters < 1) fail(ErrorCode::invalid_parameter, "iters must be >= 1");
  if (mask.size() != x_cor.size())
    fail(ErrorCode::inconsistent_input, "mask length does not match signal");
  if (x_cor.size() <= static_cast<std::size_t>(order))
    fail(ErrorCode::invalid_order, "segment length must exceed the model order");

  std::vector<double> x(x_cor.begin(), x_cor.end());
  if (mask.all_reliable()) return x;
  if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) return x;

  for (int i = 0; i < iters; ++i) {
    const ARModel model = lpc(std::span<const double>(x), order);
    x = fill_missing_ls(model, x, mask);
  }
  return x;
}

TimeSignal gapwise_janssen(const TimeSignal& x_cor, const TimeMask& mask, int order, int iters,
                           std::size_t context) {
  validate(x_cor);
  if (mask.size() != x_cor.size())
    fail(ErrorCode::inconsistent_input, "mask length does not match signal");
  if (context <= static_cast<std::size_t>(order))
    fail(ErrorCode::invalid_parameter, "context must exceed the model order");

  TimeSignal out = x_cor;
  for (const GapContext& g : gap_contexts(mask, context)) {
    const std::size_t win_start = g.gap_start - g.context_left;
    const std::size_t win_len = g.context_left + g.gap_len + g.context_right;
    if (win_len < g.gap_len + static_cast<std::size_t>(order))
      fail(ErrorCode::insufficient_context, "context window shorter than order + gap length");

    std::span<const double> seg(x_cor.samples.data() + win_start, win_len);
    TimeMask local;
    local.reliable.assign(win_len, true);
    for (std::size_t i = 0; i < g.gap_len; ++i) local.reliable[g.context_left + i] = false;

    const std::vector<double> filled = janssen_td(seg, local, order, iters);
    for (std::size_t i = 0; i < g.gap_len; ++i)
      out.samples[g.gap_start + i] = filled[g.context_left + i];
  }
  return out;
}

}  // namespace specfill
