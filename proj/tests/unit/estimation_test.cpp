#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzy/aggregation.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/estimation.hpp"
#include "oracles.hpp"

namespace {

using fuzzy::AlphaGrid;
using fuzzy::AlphaProfile;
using fuzzy::CrispInterval;
using fuzzy::EstimatorConfig;
using fuzzy::IndexPair;
using fuzzy::NormalTriple;
using fuzzy::Sample;

Sample one_to_eight() { return Sample({8, 3, 1, 7, 2, 6, 5, 4}); }

TEST(Sample, SortsAndIndexesFromOne) {
  const Sample s = one_to_eight();
  EXPECT_EQ(s.size(), 8u);
  EXPECT_EQ(s.order_stat(1), 1.0);
  EXPECT_EQ(s.order_stat(8), 8.0);
  EXPECT_THROW(s.order_stat(0), fuzzy::DomainError);
  EXPECT_THROW(s.order_stat(9), fuzzy::DomainError);
  EXPECT_THROW(Sample({}), fuzzy::DataError);
  EXPECT_THROW(Sample({1.0, std::nan("")}), fuzzy::DataError);
}

TEST(PhiHat, EightPointExamples) {
  const Sample s = one_to_eight();
  const EstimatorConfig cfg;
  EXPECT_EQ(fuzzy::phi_hat(s, 0.5, cfg), (CrispInterval{2, 6}));
  EXPECT_EQ(fuzzy::phi_hat(s, 1.0, cfg), (CrispInterval{4, 4}));
  const auto rule = fuzzy::parity_rule(NormalTriple::power(1));
  const IndexPair p = rule(8, 0.3);
  EXPECT_EQ(p.lower, 2u);
  EXPECT_NEAR(fuzzy::index_bias(p, 8, 0.3), 0.2, 1e-12);
  EXPECT_LE(fuzzy::index_bias(p, 8, 0.3), 2.0 / 8);
}

TEST(PhiHat, ParityRuleUsesNPlusOneForOddN) {
  const auto rule = fuzzy::parity_rule(NormalTriple::power(1));
  // n = 7, h = 0.5: v = 8 * 0.5 / 2 = 2, indices [2, 5].
  EXPECT_EQ(rule(7, 0.5), (IndexPair{2, 5}));
  // n = 7, h = 1: v = 4, lower = 4 and upper = 3 collapse to the point 4.
  EXPECT_EQ(rule(7, 1.0), (IndexPair{4, 4}));
  // Exact products are not pushed up by rounding: 10 * 0.3 / 2 = 1.5.
  EXPECT_EQ(rule(10, 0.3).lower, 2u);
  EXPECT_EQ(rule(10, 0.2).lower, 1u);
}

TEST(PhiHat, BiasBoundHoldsForEvenN) {
  const auto rule = fuzzy::parity_rule(NormalTriple::power(1));
  const AlphaGrid g = AlphaGrid::uniform();
  for (std::size_t n = 2; n <= 200; n += 2) {
    for (double a : g.levels()) {
      const double b = fuzzy::index_bias(rule(n, a), n, a);
      EXPECT_GE(b, -1e-12);
      EXPECT_LE(b, 2.0 / static_cast<double>(n) + 1e-12);
    }
  }
}

TEST(PhiHat, OddNBiasExceedsTwoOverN) {
  // The odd-n index uses (n + 1) h / 2, which allows a bias up to (h + 2) / n.
  const auto rule = fuzzy::parity_rule(NormalTriple::power(1));
  const double b = fuzzy::index_bias(rule(3, 0.55), 3, 0.55);
  EXPECT_NEAR(b, 4.0 / 3 - 0.55, 1e-12);
  EXPECT_GT(b, 2.0 / 3);
  const AlphaGrid g = AlphaGrid::uniform();
  for (std::size_t n = 3; n <= 201; n += 2) {
    for (double a : g.levels()) {
      const double bias = fuzzy::index_bias(rule(n, a), n, a);
      EXPECT_LE(bias, (a + 2) / static_cast<double>(n) + 1e-12);
      EXPECT_GE(bias, -1e-12);
    }
  }
}

TEST(PhiHatBiased, ParityRuleReproducesPhiHat) {
  oracle::Rng rng(8);
  std::vector<double> v(37);
  for (double& x : v) x = rng.uniform(-3, 3);
  const Sample s(v);
  const NormalTriple id = NormalTriple::power(1);
  const EstimatorConfig cfg;
  for (double a : cfg.grid.levels()) {
    EXPECT_EQ(fuzzy::phi_hat_biased(s, a, fuzzy::parity_rule(id), id), fuzzy::phi_hat(s, a, cfg));
  }
}

TEST(PhiHatBiased, ConstantBiasShiftsByAtMostOne) {
  const NormalTriple id = NormalTriple::power(1);
  const std::size_t n = 40;
  const auto parity = fuzzy::parity_rule(id);
  const auto biased = fuzzy::constant_bias_rule(id, 2.0);
  for (double a : AlphaGrid::uniform().levels()) {
    const IndexPair p = parity(n, a);
    const IndexPair q = biased(n, a);
    EXPECT_LE(std::abs(static_cast<long>(p.lower) - static_cast<long>(q.lower)), 1) << a;
  }
}

TEST(PhiHatBiased, RejectsNonMonotoneRule) {
  const auto bad = fuzzy::k_rule([](std::size_t, double a) { return a < 0.5 ? std::size_t{3} : std::size_t{1}; });
  EXPECT_THROW(fuzzy::validate_index_rule(bad, 10, AlphaGrid::uniform(), NormalTriple::power(1)),
               fuzzy::ConfigError);
  const auto out_of_range = fuzzy::k_rule([](std::size_t n, double) { return n; });
  EXPECT_THROW(fuzzy::validate_index_rule(out_of_range, 10, AlphaGrid::uniform(), NormalTriple::power(1)),
               fuzzy::ConfigError);
  EstimatorConfig cfg;
  cfg.index_rule = bad;
  EXPECT_THROW(fuzzy::estimate_profile(one_to_eight(), cfg), fuzzy::ConfigError);
}

TEST(KRule, LiteralIndexPair) {
  const auto rule = fuzzy::k_rule([](std::size_t, double) { return std::size_t{2}; });
  EXPECT_EQ(rule(8, 0.5), (IndexPair{2, 6}));
}

TEST(EstimateProfile, EightPointHistogram) {
  EstimatorConfig cfg;
  cfg.grid = AlphaGrid::from_levels({0.25, 0.5, 0.75, 1.0});
  const fuzzy::EstimationResult r = fuzzy::estimate_profile(one_to_eight(), cfg);
  EXPECT_EQ(r.profile.cut_at(1), (CrispInterval{2, 6}));
  EXPECT_EQ(r.profile.cut_at(3), (CrispInterval{4, 4}));
  EXPECT_EQ(r.n, 8u);
  EXPECT_EQ(r.tnorm, "product");
  EXPECT_EQ(r.indices.size(), 4u);
}

TEST(EstimateProfile, ConstantSampleIsDegenerate) {
  const auto r = fuzzy::estimate_profile(Sample(std::vector<double>(50, 1.5)), EstimatorConfig{});
  for (std::size_t i = 0; i < r.profile.size(); ++i) EXPECT_EQ(r.profile.cut_at(i), (CrispInterval{1.5, 1.5}));
}

TEST(EstimateProfile, CutsAreNested) {
  oracle::Rng rng(21);
  for (std::size_t n : {2u, 3u, 10u, 101u, 1000u}) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-1, 1);
    const auto r = fuzzy::estimate_profile(Sample(v), EstimatorConfig{});
    for (std::size_t i = 1; i < r.profile.size(); ++i) {
      EXPECT_LE(r.profile.lo()[i - 1], r.profile.lo()[i]);
      EXPECT_GE(r.profile.hi()[i - 1], r.profile.hi()[i]);
      EXPECT_LE(r.profile.lo()[i], r.profile.hi()[i]);
    }
  }
}

TEST(EstimateProfile, RejectsNonStrictNorms) {
  EstimatorConfig cfg;
  cfg.kind = fuzzy::TNorm::lukasiewicz();
  try {
    fuzzy::estimate_profile(one_to_eight(), cfg);
    FAIL() << "expected ConfigError";
  } catch (const fuzzy::ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("strict"), std::string::npos);
  }
  cfg.kind = fuzzy::TNorm::minimum();
  EXPECT_THROW(fuzzy::validate(cfg), fuzzy::ConfigError);
  cfg.kind = fuzzy::TNorm::product();
  cfg.epsilon = 0.0;
  EXPECT_THROW(fuzzy::validate(cfg), fuzzy::ConfigError);
}

TEST(EstimateProfile, PowerNormUsesItsGenerator) {
  EstimatorConfig cfg;
  cfg.kind = fuzzy::TNorm::power(2);
  cfg.grid = AlphaGrid::from_levels({0.5, 1.0});
  // h(0.5) = 0.25, v = 8 * 0.25 / 2 = 1: indices [1, 7].
  const auto r = fuzzy::estimate_profile(one_to_eight(), cfg);
  EXPECT_EQ(r.profile.cut_at(0), (CrispInterval{1, 7}));
}

TEST(IntervalEstimate, UsesLowerAndUpperSamples) {
  std::vector<double> lo{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> hi = lo;
  for (double& x : hi) x += 1;
  EstimatorConfig cfg;
  cfg.grid = AlphaGrid::from_levels({0.5, 1.0});
  const auto r = fuzzy::estimate_interval_profile(Sample(lo), Sample(hi), cfg);
  EXPECT_EQ(r.profile.cut_at(0), (CrispInterval{2, 7}));
  EXPECT_EQ(r.profile.cut_at(1), (CrispInterval{4, 5}));
  EXPECT_THROW(fuzzy::estimate_interval_profile(Sample(lo), Sample({1, 2}), cfg), fuzzy::DataError);
}

TEST(DnStatistic, Examples) {
  const AlphaProfile t = AlphaProfile::triangular(-1, 0, 1);
  fuzzy::EstimationResult r{.profile = t, .n = 1, .tnorm = "product", .epsilon = 0.05,
                            .grid_step = t.grid().max_step(), .indices = {}, .bias = {}, .dn = {}};
  EXPECT_EQ(fuzzy::dn_statistic(r, t, 0.05), 0.0);
  EXPECT_NEAR(fuzzy::dn_statistic(r, fuzzy::shift_by_crisp(t, {0.1, 0.1}), 0.05), 0.1, 1e-12);
  EXPECT_THROW(fuzzy::dn_statistic(r, AlphaProfile::triangular(-1, 0, 1, AlphaGrid::uniform(11)), 0.05),
               fuzzy::DataError);
}

TEST(ModalBiasPrediction, Examples) {
  const AlphaProfile t = AlphaProfile::triangular(-1, 0, 1);
  const EstimatorConfig cfg;
  const CrispInterval p = fuzzy::modal_bias_prediction(t, 8, 0.3, cfg);
  EXPECT_NEAR(p.lo, -0.5, 1e-9);
  EXPECT_NEAR(p.hi, 0.5, 1e-9);
  // Zero bias: n = 10, alpha = 0.2 gives v = 1 exactly.
  const CrispInterval z = fuzzy::modal_bias_prediction(t, 10, 0.2, cfg);
  EXPECT_NEAR(z.lo, -0.8, 1e-9);
  const CrispInterval big = fuzzy::modal_bias_prediction(t, 100000, 0.3, cfg);
  EXPECT_NEAR(big.lo, -0.7, 1e-4);
}

}  // namespace
