#pragma once

#include <span>
#include <vector>

#include "specfill/armodel.hpp"

namespace specfill {

// Symmetric band matrix, lower bands stored column-wise:
// bands[j * (bandwidth + 1) + d] = B(j + d, j), d = 0..bandwidth.
struct BandedSpdMatrix {
  int dimension = 0;
  int bandwidth = 0;
  std::vector<double> bands;

  double& at(int j, int d) { return bands[static_cast<std::size_t>(j) * (bandwidth + 1) + d]; }
  double at(int j, int d) const { return bands[static_cast<std::size_t>(j) * (bandwidth + 1) + d]; }
};

// Band values of A^T A for the (N+p) x N convolution matrix of the model:
// entry at lag d is sum_k a_k a_{k+d}, d = 0..p.
std::vector<double> ar_gram_band(const ARModel& model);

// I + (1/rho) A^T A, stored banded. Requires rho > 0 and n > model order.
BandedSpdMatrix gram_plus_identity(const ARModel& model, int n, double rho);

// Toeplitz symmetric band matrix from explicit lag values (band[0] = diagonal).
BandedSpdMatrix toeplitz_spd(std::span<const double> band, int n);

// Lower Cholesky factor, same band layout.
struct BandedCholesky {
  int dimension = 0;
  int bandwidth = 0;
  std::vector<double> bands;
};

BandedCholesky banded_cholesky(const BandedSpdMatrix& B);

// Solves B x = v given the factor of B.
std::vector<double> banded_solve(const BandedCholesky& factor, std::span<const double> v);
void banded_solve_inplace(const BandedCholesky& factor, std::span<double> v);

}  // namespace specfill
