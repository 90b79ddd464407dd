#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzy/errors.hpp"
#include "fuzzy/simulation.hpp"

namespace {

using fuzzy::AlphaGrid;
using fuzzy::AlphaProfile;
using fuzzy::FuzzyNumber;

FuzzyNumber unit_triangle() { return FuzzyNumber(AlphaProfile::triangular(-1, 0, 1)); }

fuzzy::ExperimentConfig small_config() {
  fuzzy::ExperimentConfig cfg{.truth = unit_triangle(),
                              .estimator = {},
                              .schedule = {50, 500},
                              .trials = 5,
                              .seed = 99,
                              .offset = std::nullopt,
                              .threads = 0};
  cfg.estimator.epsilon = 0.1;
  return cfg;
}

TEST(Psi, UnitTriangleIsShiftedIdentity) {
  const FuzzyNumber t = unit_triangle();
  for (double u = 0.125; u < 2.0; u += 0.125) EXPECT_NEAR(fuzzy::psi_map(t, u), u - 1, 1e-12) << u;
  EXPECT_EQ(fuzzy::psi_map(t, 1.0), 0.0);
  // The ends clamp to the lowest grid level.
  EXPECT_NEAR(fuzzy::psi_map(t, 0.0), -0.999, 1e-12);
  EXPECT_NEAR(fuzzy::psi_map(t, 2.0), 0.999, 1e-12);
  EXPECT_THROW(fuzzy::psi_map(t, -0.1), fuzzy::DomainError);
  EXPECT_THROW(fuzzy::psi_map(t, 2.5), fuzzy::DomainError);
}

TEST(Realizations, UniformOnTheSupport) {
  const fuzzy::Sample s = fuzzy::draw_realizations({.truth = unit_triangle(), .count = 20000, .seed = 4});
  // Empirical quantiles of Uniform(-1, 1) at p = 0.1 ... 0.9.
  for (int k = 1; k <= 9; ++k) {
    const double p = k / 10.0;
    const auto idx = static_cast<std::size_t>(p * 20000);
    EXPECT_NEAR(s.order_stat(idx), 2 * p - 1, 0.03) << p;
  }
  // Transform of the empirical quantiles comes back to the triangle.
  const std::size_t n = s.size();
  const AlphaProfile back = fuzzy::from_cdf(
      [&](double p) {
        const auto i = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(p * n)), 1, n);
        return s.order_stat(i);
      },
      AlphaGrid::uniform());
  EXPECT_LT(fuzzy::sup_distance(back, AlphaProfile::triangular(-1, 0, 1), 0.05), 0.05);
}

TEST(Realizations, SameSeedSameValues) {
  const auto a = fuzzy::draw_realizations({.truth = unit_triangle(), .count = 100, .seed = 7});
  const auto b = fuzzy::draw_realizations({.truth = unit_triangle(), .count = 100, .seed = 7});
  const auto c = fuzzy::draw_realizations({.truth = unit_triangle(), .count = 100, .seed = 8});
  EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  EXPECT_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
}

TEST(Realizations, NarrowTruthStaysNearModal) {
  const FuzzyNumber narrow(AlphaProfile::triangular(3 - 1e-9, 3, 3 + 1e-9));
  const auto s = fuzzy::draw_realizations({.truth = narrow, .count = 100, .seed = 1});
  for (double x : s.values()) EXPECT_NEAR(x, 3.0, 1e-8);
}

TEST(Realizations, Errors) {
  EXPECT_THROW(fuzzy::draw_realizations({.truth = FuzzyNumber(AlphaProfile::triangular(0, 0, 0)),
                                         .count = 10, .seed = 1}),
               fuzzy::DataError);
  EXPECT_THROW(fuzzy::draw_realizations({.truth = unit_triangle(), .count = 0, .seed = 1}),
               fuzzy::DataError);
}

TEST(TrialSeed, DistinctAcrossInputs) {
  EXPECT_NE(fuzzy::trial_seed(1, 100, 0), fuzzy::trial_seed(1, 100, 1));
  EXPECT_NE(fuzzy::trial_seed(1, 100, 0), fuzzy::trial_seed(1, 1000, 0));
  EXPECT_NE(fuzzy::trial_seed(1, 100, 0), fuzzy::trial_seed(2, 100, 0));
  EXPECT_EQ(fuzzy::trial_seed(1, 100, 0), fuzzy::trial_seed(1, 100, 0));
}

TEST(Experiment, DeterministicAcrossThreadCounts) {
  auto cfg = small_config();
  cfg.threads = 1;
  const auto a = fuzzy::run_experiment(cfg);
  cfg.threads = 4;
  const auto b = fuzzy::run_experiment(cfg);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].trials, b.rows[i].trials);
    EXPECT_EQ(a.rows[i].distance, b.rows[i].distance);
  }
  EXPECT_EQ(a.seed, 99u);
  EXPECT_EQ(a.trials, 5u);
}

TEST(Experiment, DnShrinksWithN) {
  auto cfg = small_config();
  cfg.schedule = {100, 1000, 10000};
  cfg.trials = 20;
  const auto r = fuzzy::run_experiment(cfg);
  EXPECT_TRUE(r.monotone);
  EXPECT_LT(r.rows.back().distance, 0.05);
}

TEST(Experiment, CrispOffsetConvergesToShiftedModal) {
  auto cfg = small_config();
  cfg.schedule = {100, 10000};
  cfg.trials = 10;
  cfg.offset = fuzzy::CrispInterval{2, 3};
  std::vector<AlphaProfile> profiles;
  const auto r = fuzzy::run_experiment(cfg, &profiles);
  ASSERT_EQ(profiles.size(), 2u);
  EXPECT_LT(r.rows.back().modal_distance, 0.05);
  const auto m = fuzzy::modal(profiles.back());
  EXPECT_NEAR(m.lo, 2, 0.05);
  EXPECT_NEAR(m.hi, 3, 0.05);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Experiment, EightPointHistogram) {
  auto cfg = small_config();
  cfg.schedule = {8};
  cfg.trials = 1;
  std::vector<AlphaProfile> profiles;
  fuzzy::run_experiment(cfg, &profiles);
  ASSERT_EQ(profiles.size(), 1u);
  // A step profile: at most 8 distinct lower endpoints.
  std::vector<double> lows(profiles[0].lo().begin(), profiles[0].lo().end());
  lows.erase(std::unique(lows.begin(), lows.end()), lows.end());
  EXPECT_LE(lows.size(), 4u);
  EXPECT_GE(lows.size(), 2u);
}

TEST(Experiment, ConfigValidation) {
  auto cfg = small_config();
  cfg.schedule = {};
  EXPECT_THROW(fuzzy::validate(cfg), fuzzy::ConfigError);
  cfg.schedule = {100, 50};
  EXPECT_THROW(fuzzy::validate(cfg), fuzzy::ConfigError);
  cfg.schedule = {1};
  EXPECT_THROW(fuzzy::validate(cfg), fuzzy::ConfigError);
  cfg = small_config();
  cfg.trials = 0;
  EXPECT_THROW(fuzzy::validate(cfg), fuzzy::ConfigError);
  cfg = small_config();
  cfg.estimator.kind = fuzzy::TNorm::lukasiewicz();
  EXPECT_THROW(fuzzy::run_experiment(cfg), fuzzy::ConfigError);
  cfg = small_config();
  cfg.offset = fuzzy::CrispInterval{3, 2};
  EXPECT_THROW(fuzzy::validate(cfg), fuzzy::ConfigError);
}

TEST(MedianOf, OddAndEven) {
  EXPECT_EQ(fuzzy::median_of({3, 1, 2}), 2.0);
  EXPECT_EQ(fuzzy::median_of({4, 1, 2, 3}), 2.5);
  EXPECT_THROW(fuzzy::median_of({}), fuzzy::DomainError);
}

}  // namespace
