#pragma once

// Independent dense reference implementations used only by tests. Everything
// here goes through Eigen dense algebra so it shares no code path with the
// banded/recursive implementations under test.

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "specfill/armodel.hpp"
#include "specfill/banded.hpp"
#include "specfill/stft.hpp"

namespace specfill::testing {

// Dense Yule-Walker solve: R alpha = -r[1..p] with R_{ij} = r[|i-j|].
inline std::vector<double> dense_yule_walker(const std::vector<double>& r) {
  const int p = static_cast<int>(r.size()) - 1;
  Eigen::MatrixXd R(p, p);
  Eigen::VectorXd b(p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) R(i, j) = r[static_cast<std::size_t>(std::abs(i - j))];
    b(i) = -r[static_cast<std::size_t>(i) + 1];
  }
  const Eigen::VectorXd alpha = R.colPivHouseholderQr().solve(b);
  std::vector<double> a(static_cast<std::size_t>(p) + 1);
  a[0] = 1.0;
  for (int i = 0; i < p; ++i) a[static_cast<std::size_t>(i) + 1] = alpha(i);
  return a;
}

// (N+p) x N convolution (prediction-error) matrix built by definition.
inline Eigen::MatrixXd dense_conv_matrix(const std::vector<double>& a, int n) {
  const int p = static_cast<int>(a.size()) - 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + p, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k <= p; ++k) A(j + k, j) = a[static_cast<std::size_t>(k)];
  }
  return A;
}

inline Eigen::MatrixXd dense_from_banded(const BandedSpdMatrix& B) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(B.dimension, B.dimension);
  for (int j = 0; j < B.dimension; ++j) {
    for (int d = 0; d <= B.bandwidth && j + d < B.dimension; ++d) {
      M(j + d, j) = B.at(j, d);
      M(j, j + d) = B.at(j, d);
    }
  }
  return M;
}

// Optimum of min 0.5||Ax||^2 s.t. reliable columns of Gx match X_cor, solved by
// eliminating the constraint: x = x_feasible + V q with V a null-space basis of
// the reliable-coefficient rows, then a dense normal-equations solve for q.
struct ConstrainedLsSolution {
  Eigen::VectorXd x;
  double objective = 0.0;
  int null_dim = 0;
};

inline ConstrainedLsSolution constrained_ls_oracle(const std::vector<double>& a,
                                                   const Spectrogram& X_cor, const TFMask& mask,
                                                   const std::vector<double>& x_feasible) {
  const int n = X_cor.n_frames * X_cor.params.hop;
  const int nb = X_cor.n_bins();
  const auto missing = missing_lookup(mask);
  int n_rel = 0;
  for (char m : missing) n_rel += m ? 0 : 1;

  // Constraint rows: real and imaginary parts of every reliable-column
  // coefficient, as functions of x, built column-by-column from unit vectors.
  StftOperator op(X_cor.params);
  Eigen::MatrixXd C(2 * n_rel * nb, n);
  TimeSignal unit;
  unit.sample_rate_hz = 1;
  unit.samples.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    unit.samples[static_cast<std::size_t>(i)] = 1.0;
    const Spectrogram Gi = op.analyze(unit);
    unit.samples[static_cast<std::size_t>(i)] = 0.0;
    int row = 0;
    for (int t = 0; t < X_cor.n_frames; ++t) {
      if (missing[static_cast<std::size_t>(t)]) continue;
      for (int f = 0; f < nb; ++f) {
        C(row++, i) = Gi.at(t, f).real();
        C(row++, i) = Gi.at(t, f).imag();
      }
    }
  }

  const Eigen::MatrixXd CtC = C.transpose() * C;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(CtC);
  const double lambda_max = es.eigenvalues().maxCoeff();
  std::vector<int> null_cols;
  for (int i = 0; i < n; ++i) {
    if (es.eigenvalues()(i) <= 1e-9 * lambda_max) null_cols.push_back(i);
  }

  const Eigen::VectorXd x0 =
      Eigen::Map<const Eigen::VectorXd>(x_feasible.data(), static_cast<Eigen::Index>(n));
  const Eigen::MatrixXd A = dense_conv_matrix(a, n);

  ConstrainedLsSolution sol;
  sol.null_dim = static_cast<int>(null_cols.size());
  if (null_cols.empty()) {
    sol.x = x0;
  } else {
    Eigen::MatrixXd V(n, static_cast<Eigen::Index>(null_cols.size()));
    for (std::size_t k = 0; k < null_cols.size(); ++k)
      V.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(null_cols[k]);
    const Eigen::MatrixXd AV = A * V;
    const Eigen::VectorXd q = (AV.transpose() * AV).llt().solve(-AV.transpose() * (A * x0));
    sol.x = x0 + V * q;
  }
  sol.objective = 0.5 * (A * sol.x).squaredNorm();
  return sol;
}

}  // namespace specfill::testing
