#include "specfill/banded.hpp"

#include <algorithm>
#include <cmath>

#include "specfill/error.hpp"

namespace specfill {

std::vector<double> ar_gram_band(const ARModel& model) {
  const int p = static_cast<int>(model.coeffs.size()) - 1;
  std::vector<double> band(static_cast<std::size_t>(p) + 1, 0.0);
  for (int d = 0; d <= p; ++d) {
    double acc = 0.0;
    for (int k = 0; k + d <= p; ++k)
      acc += model.coeffs[static_cast<std::size_t>(k)] * model.coeffs[static_cast<std::size_t>(k + d)];
    band[static_cast<std::size_t>(d)] = acc;
  }
  return band;
}

BandedSpdMatrix toeplitz_spd(std::span<const double> band, int n) {
  if (band.empty() || n < 1) fail(ErrorCode::invalid_parameter, "empty band or dimension");
  const int bw = std::min(static_cast<int>(band.size()) - 1, n - 1);
  BandedSpdMatrix B;
  B.dimension = n;
  B.bandwidth = bw;
  B.bands.assign(static_cast<std::size_t>(n) * (bw + 1), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int d = 0; d <= bw && j + d < n; ++d) B.at(j, d) = band[static_cast<std::size_t>(d)];
  }
  return B;
}

BandedSpdMatrix gram_plus_identity(const ARModel& model, int n, double rho) {
  if (!(rho > 0.0)) fail(ErrorCode::invalid_parameter, "rho must be positive");
  const int p = static_cast<int>(model.coeffs.size()) - 1;
  if (n <= p) fail(ErrorCode::invalid_parameter, "dimension must exceed the model order");
  std::vector<double> band = ar_gram_band(model);
  for (double& v : band) v /= rho;
  band[0] += 1.0;
  return toeplitz_spd(band, n);
}

BandedCholesky banded_cholesky(const BandedSpdMatrix& B) {
  const int n = B.dimension;
  const int bw = B.bandwidth;
  const int stride = bw + 1;
  BandedCholesky L;
  L.dimension = n;
  L.bandwidth = bw;
  L.bands = B.bands;  // factored in place, right-looking

  double* a = L.bands.data();
  for (int j = 0; j < n; ++j) {
    double* colj = a + static_cast<std::size_t>(j) * stride;
    const double pivot = colj[0];
    if (!(pivot > 0.0)) fail(ErrorCode::not_positive_definite, "non-positive pivot");
    const double d = std::sqrt(pivot);
    colj[0] = d;
    const int m = std::min(bw, n - 1 - j);
    const double inv = 1.0 / d;
    for (int r = 1; r <= m; ++r) colj[r] *= inv;
    for (int c = 1; c <= m; ++c) {
      const double v = colj[c];
      if (v == 0.0) continue;
      double* colc = a + static_cast<std::size_t>(j + c) * stride;
      for (int r = c; r <= m; ++r) colc[r - c] -= colj[r] * v;
    }
  }
  return L;
}

std::vector<double> banded_solve(const BandedCholesky& factor, std::span<const double> v) {
  std::vector<double> x(v.begin(), v.end());
  banded_solve_inplace(factor, x);
  return x;
}

void banded_solve_inplace(const BandedCholesky& factor, std::span<double> v) {
  const int n = factor.dimension;
  if (static_cast<int>(v.size()) != n)
    fail(ErrorCode::inconsistent_input, "vector length does not match the factor dimension");
  const int bw = factor.bandwidth;
  const int stride = bw + 1;
  const double* a = factor.bands.data();

  // L y = v
  for (int j = 0; j < n; ++j) {
    const double* colj = a + static_cast<std::size_t>(j) * stride;
    const double y = v[static_cast<std::size_t>(j)] / colj[0];
    v[static_cast<std::size_t>(j)] = y;
    const int m = std::min(bw, n - 1 - j);
    for (int r = 1; r <= m; ++r) v[static_cast<std::size_t>(j + r)] -= colj[r] * y;
  }
  // L^T x = y
  for (int j = n - 1; j >= 0; --j) {
    const double* colj = a + static_cast<std::size_t>(j) * stride;
    double acc = v[static_cast<std::size_t>(j)];
    const int m = std::min(bw, n - 1 - j);
    for (int r = 1; r <= m; ++r) acc -= colj[r] * v[static_cast<std::size_t>(j + r)];
    v[static_cast<std::size_t>(j)] = acc / colj[0];
  }
}

}  // namespace specfill
