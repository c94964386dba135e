#include "specfill/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

#include "specfill/error.hpp"

namespace specfill {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(int n) : n_(n) {
  if (n < 2 || n % 2 != 0) fail(ErrorCode::invalid_parameter, "FFT size must be even and >= 2");
  real_buf_ = fftw_alloc_real(static_cast<std::size_t>(n));
  cplx_buf_ = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_plan_ = fftw_plan_dft_r2c_1d(n, real_buf_, static_cast<fftw_complex*>(cplx_buf_),
                                   FFTW_ESTIMATE);
  inv_plan_ = fftw_plan_dft_c2r_1d(n, static_cast<fftw_complex*>(cplx_buf_), real_buf_,
                                   FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
  }
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

void RealFft::forward(std::span<const double> in, std::complex<double>* out) {
  std::memcpy(real_buf_, in.data(), static_cast<std::size_t>(n_) * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  const auto* c = static_cast<const fftw_complex*>(cplx_buf_);
  for (int k = 0; k < bins(); ++k) {
    out[k] = {c[k][0] * scale, c[k][1] * scale};
  }
}

void RealFft::inverse(std::span<const std::complex<double>> in, double* out) {
  auto* c = static_cast<fftw_complex*>(cplx_buf_);
  const int nb = bins();
  for (int k = 0; k < nb; ++k) {
    c[k][0] = in[k].real();
    c[k][1] = in[k].imag();
  }
  c[0][1] = 0.0;       // DC and Nyquist carry no imaginary part for real signals
  c[nb - 1][1] = 0.0;
  fftw_execute(static_cast<fftw_plan>(inv_plan_));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
}

}  // namespace specfill
