#pragma once

#include <complex>
#include <span>

namespace specfill {

// Real <-> half-spectrum FFT with 1/sqrt(n) scaling on both directions, so that
// inverse() is the real-linear adjoint of forward(). Wraps FFTW3; plan creation
// is serialized internally (FFTW's planner is not thread-safe). Instances hold
// scratch buffers and must not be shared between threads.
class RealFft {
 public:
  explicit RealFft(int n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const { return n_; }
  int bins() const { return n_ / 2 + 1; }

  // out must hold bins() entries.
  void forward(std::span<const double> in, std::complex<double>* out);
  // Imaginary parts of DC and Nyquist are ignored (they are outside the range
  // of real-input transforms). out must hold size() entries.
  void inverse(std::span<const std::complex<double>> in, double* out);

 private:
  int n_;
  double* real_buf_;
  void* cplx_buf_;
  void* fwd_plan_;
  void* inv_plan_;
};

}  // namespace specfill
