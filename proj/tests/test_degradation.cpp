#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "specfill/degradation.hpp"
#include "support/test_signals.hpp"

using namespace specfill;
using specfill::testing::white_noise;

namespace {

StftParams small_params() {
  StftParams p;
  p.win_len = 32;
  p.hop = 8;
  p.n_channels = 32;
  return p;
}

}  // namespace

TEST_CASE("plan_gaps") {
  SUBCASE("deterministic in the seed") {
    const DegradationPlan p1 = plan_gaps(157, 1, 5, 7, 4, 8);
    const DegradationPlan p2 = plan_gaps(157, 1, 5, 7, 4, 8);
    REQUIRE(p1.gap_starts.size() == 5);
    CHECK(p1.gap_starts == p2.gap_starts);
  }
  SUBCASE("infeasible geometry is rejected by counting") {
    CHECK_THROWS_AS(plan_gaps(20, 6, 5, 1, 0, 8), Error);
    try {
      plan_gaps(20, 6, 5, 1, 0, 8);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::cannot_place_gaps);
    }
  }
  SUBCASE("zero gaps gives an empty plan") {
    const DegradationPlan p = plan_gaps(100, 3, 0, 1, 4, 8);
    CHECK(p.gap_starts.empty());
    CHECK(mask_from_plan(p).missing_columns.empty());
  }
  SUBCASE("different seeds eventually differ") {
    const DegradationPlan base = plan_gaps(157, 1, 5, 1, 4, 8);
    bool differs = false;
    for (std::uint64_t seed = 2; seed < 10 && !differs; ++seed)
      differs = plan_gaps(157, 1, 5, seed, 4, 8).gap_starts != base.gap_starts;
    CHECK(differs);
  }
  SUBCASE("placements respect margins and separation") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const int margin = 4, sep = 6, gap = 3, total = 90;
      const DegradationPlan p = plan_gaps(total, gap, 4, seed, margin, sep);
      REQUIRE(p.gap_starts.size() == 4);
      for (std::size_t i = 0; i < p.gap_starts.size(); ++i) {
        CHECK(p.gap_starts[i] >= margin);
        CHECK(p.gap_starts[i] + gap <= total - margin);
        if (i > 0) CHECK(p.gap_starts[i] - (p.gap_starts[i - 1] + gap) >= sep);
      }
    }
  }
  SUBCASE("gap length is limited to the protocol range") {
    CHECK_THROWS_AS(plan_gaps(100, 7, 1, 1, 0, 0), Error);
  }
}

TEST_CASE("degrade") {
  const StftParams p = small_params();
  const TimeSignal x = white_noise(512, 71);
  const Spectrogram X = stft(x, p);

  SUBCASE("empty plan leaves the spectrogram untouched") {
    DegradationPlan plan;
    plan.total_columns = X.n_frames;
    plan.gap_len_columns = 1;
    auto [X_cor, mask] = degrade(X, plan);
    CHECK(X_cor.coeffs == X.coeffs);
    CHECK(mask.missing_columns.empty());
  }
  SUBCASE("planned columns zero, others bit-identical") {
    DegradationPlan plan;
    plan.total_columns = X.n_frames;
    plan.gap_len_columns = 2;
    plan.n_gaps = 1;
    plan.gap_starts = {3};
    auto [X_cor, mask] = degrade(X, plan);
    CHECK(mask.missing_columns == std::vector<int>{3, 4});
    for (int t = 0; t < X.n_frames; ++t) {
      for (int f = 0; f < X.n_bins(); ++f) {
        if (t == 3 || t == 4) {
          CHECK(X_cor.at(t, f) == std::complex<double>{0.0, 0.0});
        } else {
          CHECK(X_cor.at(t, f) == X.at(t, f));
        }
      }
    }
  }
  SUBCASE("energy bookkeeping") {
    DegradationPlan plan;
    plan.total_columns = X.n_frames;
    plan.gap_len_columns = 3;
    plan.n_gaps = 2;
    plan.gap_starts = {5, 20};
    auto [X_cor, mask] = degrade(X, plan);
    double removed = 0.0;
    for (int t : mask.missing_columns) {
      for (int f = 0; f < X.n_bins(); ++f) removed += std::norm(X.at(t, f));
    }
    CHECK(X_cor.energy() == doctest::Approx(X.energy() - removed).epsilon(1e-12));
  }
  SUBCASE("degrade is idempotent") {
    DegradationPlan plan;
    plan.total_columns = X.n_frames;
    plan.gap_len_columns = 2;
    plan.n_gaps = 1;
    plan.gap_starts = {10};
    auto [X1, m1] = degrade(X, plan);
    auto [X2, m2] = degrade(X1, plan);
    CHECK(X1.coeffs == X2.coeffs);
    CHECK(m1.missing_columns == m2.missing_columns);
  }
  SUBCASE("plan shape mismatch") {
    DegradationPlan plan;
    plan.total_columns = X.n_frames + 1;
    plan.gap_len_columns = 1;
    CHECK_THROWS_AS(degrade(X, plan), Error);
  }
}
