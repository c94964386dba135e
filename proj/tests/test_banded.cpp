#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specfill/banded.hpp"
#include "specfill/rng.hpp"
#include "support/dense_oracles.hpp"

using namespace specfill;
using namespace specfill::testing;

namespace {

ARModel model_from(const std::vector<double>& coeffs) {
  ARModel m;
  m.coeffs = coeffs;
  m.order = static_cast<int>(coeffs.size()) - 1;
  return m;
}

ARModel random_model(std::mt19937_64& rng, int max_order) {
  NormalSampler normal;
  const int p = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(max_order)));
  ARModel m;
  m.order = p;
  m.coeffs.assign(static_cast<std::size_t>(p) + 1, 0.0);
  m.coeffs[0] = 1.0;
  for (int i = 1; i <= p; ++i) m.coeffs[static_cast<std::size_t>(i)] = 0.6 * normal(rng);
  return m;
}

}  // namespace

TEST_CASE("gram_plus_identity small cases") {
  SUBCASE("identity model") {
    const BandedSpdMatrix B = gram_plus_identity(model_from({1.0}), 3, 1.0);
    CHECK(B.bandwidth == 0);
    for (int j = 0; j < 3; ++j) CHECK(B.at(j, 0) == doctest::Approx(2.0));
  }
  SUBCASE("first-difference model gives the tridiagonal") {
    const BandedSpdMatrix B = gram_plus_identity(model_from({1.0, -1.0}), 3, 1.0);
    REQUIRE(B.bandwidth == 1);
    for (int j = 0; j < 3; ++j) CHECK(B.at(j, 0) == doctest::Approx(3.0));
    CHECK(B.at(0, 1) == doctest::Approx(-1.0));
    CHECK(B.at(1, 1) == doctest::Approx(-1.0));
  }
  SUBCASE("rho must be positive") {
    CHECK_THROWS_AS(gram_plus_identity(model_from({1.0}), 3, 0.0), Error);
    try {
      gram_plus_identity(model_from({1.0}), 3, -1.0);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_parameter);
    }
  }
}

TEST_CASE("gram matches the dense A^T A") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const ARModel m = random_model(rng, 6);
    const int n = 8 + static_cast<int>(uniform_index(rng, 25));
    const double rho = 0.25 + 3.0 * uniform_unit(rng);
    const Eigen::MatrixXd dense = dense_from_banded(gram_plus_identity(m, n, rho));
    const Eigen::MatrixXd A = dense_conv_matrix(m.coeffs, n);
    const Eigen::MatrixXd expected = (A.transpose() * A) / rho;
    const Eigen::MatrixXd diff =
        (dense - Eigen::MatrixXd::Identity(n, n)) - expected;
    CHECK(diff.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("gram_plus_identity smallest eigenvalue is at least 1") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 8; ++trial) {
    const ARModel m = random_model(rng, 8);
    const int n = 16 + static_cast<int>(uniform_index(rng, 49));
    const Eigen::MatrixXd dense = dense_from_banded(gram_plus_identity(m, n, 1.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    CHECK(es.eigenvalues().minCoeff() >= 1.0 - 1e-10);
  }
}

TEST_CASE("banded cholesky small cases") {
  SUBCASE("scaled identity") {
    const BandedSpdMatrix B = gram_plus_identity(model_from({1.0}), 4, 1.0);
    const BandedCholesky L = banded_cholesky(B);
    for (int j = 0; j < 4; ++j)
      CHECK(L.bands[static_cast<std::size_t>(j)] == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("tridiagonal reconstructs") {
    const BandedSpdMatrix B = gram_plus_identity(model_from({1.0, -1.0}), 3, 1.0);
    const BandedCholesky L = banded_cholesky(B);
    Eigen::MatrixXd Ld = Eigen::MatrixXd::Zero(3, 3);
    for (int j = 0; j < 3; ++j) {
      for (int d = 0; d <= L.bandwidth && j + d < 3; ++d)
        Ld(j + d, j) = L.bands[static_cast<std::size_t>(j) * (L.bandwidth + 1) + d];
    }
    const Eigen::MatrixXd R = Ld * Ld.transpose() - dense_from_banded(B);
    CHECK(R.cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("zero diagonal entry is rejected") {
    BandedSpdMatrix B;
    B.dimension = 2;
    B.bandwidth = 0;
    B.bands = {0.0, 1.0};
    CHECK_THROWS_AS(banded_cholesky(B), Error);
    try {
      banded_cholesky(B);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_positive_definite);
    }
  }
}

TEST_CASE("banded solve") {
  SUBCASE("identity factor leaves the vector unchanged") {
    BandedCholesky L;
    L.dimension = 3;
    L.bandwidth = 0;
    L.bands = {1.0, 1.0, 1.0};
    const std::vector<double> v{1.0, -2.0, 3.0};
    CHECK(banded_solve(L, v) == v);
  }
  SUBCASE("zero stays zero") {
    const BandedCholesky L = banded_cholesky(gram_plus_identity(model_from({1.0, -0.5}), 5, 2.0));
    const std::vector<double> v(5, 0.0);
    for (double x : banded_solve(L, v)) CHECK(x == 0.0);
  }
  SUBCASE("dimension mismatch") {
    const BandedCholesky L = banded_cholesky(gram_plus_identity(model_from({1.0}), 4, 1.0));
    CHECK_THROWS_AS(banded_solve(L, std::vector<double>{1.0, 2.0}), Error);
  }
}

TEST_CASE("banded solve matches the dense oracle") {
  std::mt19937_64 rng(23);
  NormalSampler normal;
  for (int trial = 0; trial < 25; ++trial) {
    const ARModel m = random_model(rng, 8);
    const int n = m.order + 2 + static_cast<int>(uniform_index(rng, 56));
    const double rho = 0.2 + 4.0 * uniform_unit(rng);
    const BandedSpdMatrix B = gram_plus_identity(m, n, rho);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = normal(rng);

    const std::vector<double> got = banded_solve(banded_cholesky(B), v);
    const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(v.data(), n);
    const Eigen::VectorXd expected = dense_from_banded(B).ldlt().solve(rhs);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      num += (got[static_cast<std::size_t>(i)] - expected(i)) *
             (got[static_cast<std::size_t>(i)] - expected(i));
      den += expected(i) * expected(i);
    }
    CHECK(std::sqrt(num) <= 1e-8 * std::max(1.0, std::sqrt(den)));
  }
}
