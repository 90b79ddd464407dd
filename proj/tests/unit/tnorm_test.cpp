#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "fuzzy/errors.hpp"
#include "fuzzy/tnorm.hpp"
#include "oracles.hpp"

namespace {

using fuzzy::Generator;
using fuzzy::NormalTriple;
using fuzzy::TNorm;

TEST(TNormEval, ProductOfHalves) { EXPECT_DOUBLE_EQ(fuzzy::tnorm_eval(TNorm::product(), 0.5, 0.5), 0.25); }

TEST(TNormEval, LukasiewiczBoundedDifference) {
  EXPECT_NEAR(fuzzy::tnorm_eval(TNorm::lukasiewicz(), 0.7, 0.7), 0.4, 1e-15);
  EXPECT_EQ(fuzzy::tnorm_eval(TNorm::lukasiewicz(), 0.3, 0.6), 0.0);
}

TEST(TNormEval, OneIsNeutral) {
  for (const TNorm& t : {TNorm::product(), TNorm::lukasiewicz(), TNorm::minimum(), TNorm::power(2)}) {
    EXPECT_NEAR(fuzzy::tnorm_eval(t, 0.3, 1.0), 0.3, 1e-15) << t.name();
  }
}

TEST(TNormEval, MinimumIsMin) {
  EXPECT_EQ(fuzzy::tnorm_eval(TNorm::minimum(), 0.3, 0.8), 0.3);
}

TEST(TNormEval, ListForm) {
  const std::vector<double> xs{0.5, 0.5, 0.5};
  EXPECT_NEAR(fuzzy::tnorm_eval(TNorm::product(), xs), 0.125, 1e-15);
  EXPECT_NEAR(fuzzy::tnorm_eval(TNorm::lukasiewicz(), std::vector<double>{0.9, 0.9, 0.9}), 0.7, 1e-12);
  EXPECT_THROW(fuzzy::tnorm_eval(TNorm::product(), std::vector<double>{}), fuzzy::DomainError);
}

TEST(TNormEval, RejectsOutOfRange) {
  EXPECT_THROW(fuzzy::tnorm_eval(TNorm::product(), 1.2, 0.5), fuzzy::DomainError);
  EXPECT_THROW(fuzzy::tnorm_eval(TNorm::product(), -0.1, 0.5), fuzzy::DomainError);
  EXPECT_THROW(fuzzy::tnorm_eval(TNorm::product(), std::nan(""), 0.5), fuzzy::DomainError);
}

TEST(TConormEval, ProductTripleIsBoundedSum) {
  EXPECT_DOUBLE_EQ(fuzzy::tconorm_eval(TNorm::product(), 0.5, 0.5), 1.0);
  EXPECT_NEAR(fuzzy::tconorm_eval(TNorm::product(), 0.2, 0.3), 0.5, 1e-15);
  oracle::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(0, 1);
    const double y = rng.uniform(0, 1);
    EXPECT_NEAR(fuzzy::tconorm_eval(TNorm::product(), x, y), std::min(x + y, 1.0), 1e-15);
  }
}

TEST(TConormEval, ZeroIsNeutral) {
  for (const TNorm& t : {TNorm::product(), TNorm::lukasiewicz(), TNorm::minimum(), TNorm::power(3)}) {
    EXPECT_NEAR(fuzzy::tconorm_eval(t, 0.4, 0.0), 0.4, 1e-12) << t.name();
  }
}

TEST(TConormEval, NonStrictKindsUseDeMorganDual) {
  EXPECT_NEAR(fuzzy::tconorm_eval(TNorm::lukasiewicz(), 0.7, 0.6), 1.0, 1e-15);
  EXPECT_NEAR(fuzzy::tconorm_eval(TNorm::lukasiewicz(), 0.2, 0.3), 0.5, 1e-15);
  EXPECT_EQ(fuzzy::tconorm_eval(TNorm::minimum(), 0.2, 0.3), 0.3);
}

TEST(NormalTriple, IdentityGenerator) {
  const NormalTriple t = fuzzy::make_normal_triple([](double x) { return x; });
  EXPECT_NEAR(t.negation(0.25), 0.75, 1e-12);
  EXPECT_NEAR(t.tnorm(0.6, 0.8), 0.48, 1e-12);
  EXPECT_NEAR(t.conorm(t.tnorm(0.6, 0.8), t.tnorm(0.6, t.negation(0.8))), 0.6, 1e-12);
}

TEST(NormalTriple, SquareGeneratorMatchesBisectionOracle) {
  const NormalTriple t = fuzzy::make_normal_triple([](double x) { return x * x; });
  EXPECT_NEAR(t.negation(0.6), 0.8, 1e-10);
  // n(x) = h^-1(1 - h(x)) solved independently.
  for (double x : {0.1, 0.35, 0.6, 0.9}) {
    const double expect =
        oracle::bisect_decreasing([](double y) { return -(y * y); }, -(1.0 - x * x));
    EXPECT_NEAR(t.negation(x), expect, 1e-10) << x;
  }
}

TEST(NormalTriple, PowerTripleMatchesGenericOne) {
  const NormalTriple closed = NormalTriple::power(2.0);
  const NormalTriple generic = fuzzy::make_normal_triple([](double x) { return x * x; });
  for (double x = 0.0; x <= 1.0; x += 0.05) {
    for (double y = 0.0; y <= 1.0; y += 0.05) {
      EXPECT_NEAR(closed.conorm(x, y), generic.conorm(x, y), 1e-10);
      EXPECT_NEAR(closed.tnorm(x, y), generic.tnorm(x, y), 1e-10);
    }
  }
}

TEST(NormalTriple, RejectsNonHomeomorphisms) {
  EXPECT_THROW(fuzzy::make_normal_triple([](double x) { return 1.0 - x; }), fuzzy::ConfigError);
  EXPECT_THROW(fuzzy::make_normal_triple([](double x) { return 0.5 * x; }), fuzzy::ConfigError);
  EXPECT_THROW(NormalTriple::power(0.0), fuzzy::ConfigError);
  EXPECT_THROW(NormalTriple::from_tnorm(TNorm::lukasiewicz()), fuzzy::ConfigError);
  EXPECT_THROW(NormalTriple::from_tnorm(TNorm::minimum()), fuzzy::ConfigError);
}

TEST(NormalTriple, FromProductIsIdentity) {
  const NormalTriple t = NormalTriple::from_tnorm(TNorm::product());
  for (double x : {0.0, 0.123, 0.5, 1.0}) EXPECT_EQ(t.h(x), x);
}

TEST(Necessity, FromPossibility) {
  const NormalTriple id = NormalTriple::power(1.0);
  EXPECT_EQ(fuzzy::necessity_from_possibility(id, 1.0), 0.0);
  EXPECT_NEAR(fuzzy::necessity_from_possibility(id, 0.3), 0.7, 1e-15);
  const NormalTriple sq = fuzzy::make_normal_triple([](double x) { return x * x; });
  EXPECT_NEAR(fuzzy::necessity_from_possibility(sq, 0.6), 0.8, 1e-10);
  EXPECT_THROW(fuzzy::necessity_from_possibility(id, 1.5), fuzzy::DomainError);
}

TEST(PseudoInverse, Examples) {
  EXPECT_NEAR(fuzzy::pseudo_inverse_eval(Generator::negative_log(), std::log(2.0)), 0.5, 1e-15);
  EXPECT_EQ(fuzzy::pseudo_inverse_eval(Generator::linear(), 1.5), 0.0);
  EXPECT_NEAR(fuzzy::pseudo_inverse_eval(Generator::linear(), 0.25), 0.75, 1e-15);
  EXPECT_THROW(fuzzy::pseudo_inverse_eval(Generator::linear(), -0.1), fuzzy::DomainError);
}

TEST(PseudoInverse, CustomGeneratorBisectionAgreesWithAnalyticRoot) {
  const Generator g = Generator::custom([](double x) { return (1 - x) * (1 - x); }, false, "sq");
  EXPECT_NEAR(fuzzy::pseudo_inverse_eval(g, 0.25), 0.5, 1e-10);
  oracle::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const double y = rng.uniform(0, 1);
    EXPECT_NEAR(g.pseudo_inverse(y), 1.0 - std::sqrt(y), 1e-10) << y;
  }
  EXPECT_EQ(g.pseudo_inverse(2.0), 0.0);
}

TEST(Generator, CustomValidation) {
  EXPECT_THROW(Generator::custom([](double x) { return 2 - x; }, false), fuzzy::ConfigError);
  EXPECT_THROW(Generator::custom([](double x) { return x - 1; }, false), fuzzy::ConfigError);
  EXPECT_THROW(Generator::custom([](double x) { return 1 - x; }, true), fuzzy::ConfigError);
  EXPECT_NO_THROW(Generator::custom([](double x) { return -std::log(x); }, true));
  EXPECT_THROW(Generator::negative_log(0.0), fuzzy::ConfigError);
  EXPECT_THROW(Generator::linear(-1.0), fuzzy::ConfigError);
}

TEST(Generator, StrictSentinelAtZero) {
  EXPECT_TRUE(Generator::negative_log().strict());
  EXPECT_EQ(Generator::negative_log()(0.0), fuzzy::kUnboundedGenerator);
  EXPECT_FALSE(Generator::linear().strict());
  EXPECT_EQ(Generator::linear()(0.0), 1.0);
  EXPECT_EQ(Generator::negative_log().pseudo_inverse(fuzzy::kUnboundedGenerator), 0.0);
}

TEST(Generator, ScalingLeavesTheNormUnchanged) {
  for (double c : {0.25, 2.0, 7.5}) {
    const TNorm scaled = TNorm::generic(Generator::negative_log().scaled(c));
    const TNorm luk = TNorm::generic(Generator::linear().scaled(c));
    for (double x = 0.0; x <= 1.0; x += 0.1) {
      for (double y = 0.0; y <= 1.0; y += 0.1) {
        EXPECT_NEAR(fuzzy::tnorm_eval(scaled, x, y), x * y, 1e-12);
        EXPECT_NEAR(fuzzy::tnorm_eval(luk, x, y), std::max(x + y - 1, 0.0), 1e-12);
      }
    }
  }
}

TEST(TNormParse, KnownSpecs) {
  EXPECT_EQ(TNorm::parse("product").family(), TNorm::Family::product);
  EXPECT_EQ(TNorm::parse("lukasiewicz").family(), TNorm::Family::lukasiewicz);
  EXPECT_EQ(TNorm::parse("minimum").family(), TNorm::Family::minimum);
  EXPECT_EQ(TNorm::parse("power:2").family(), TNorm::Family::power);
  EXPECT_TRUE(TNorm::parse("product").strict());
  EXPECT_FALSE(TNorm::parse("lukasiewicz").strict());
  EXPECT_FALSE(TNorm::parse("minimum").archimedean());
  EXPECT_THROW(TNorm::minimum().generator(), fuzzy::ConfigError);
}

TEST(TNormParse, RejectsUnknown) {
  EXPECT_THROW(TNorm::parse("hamacher"), fuzzy::ConfigError);
  EXPECT_THROW(TNorm::parse("power:"), fuzzy::ConfigError);
  EXPECT_THROW(TNorm::parse("power:-1"), fuzzy::ConfigError);
  EXPECT_THROW(TNorm::parse(""), fuzzy::ConfigError);
}

TEST(TNormAxioms, RandomTriples) {
  oracle::Rng rng(2024);
  const std::array kinds{TNorm::product(), TNorm::lukasiewicz(), TNorm::minimum(), TNorm::power(0.5),
                         TNorm::generic(Generator::custom(
                             [](double x) { return (1 - x) * (1 - x); }, false, "sq"))};
  for (const TNorm& t : kinds) {
    for (int i = 0; i < 500; ++i) {
      const double x = rng.uniform(0, 1);
      const double y = rng.uniform(0, 1);
      const double z = rng.uniform(0, 1);
      const double tol = t.family() == TNorm::Family::generic ? 1e-9 : 1e-12;
      EXPECT_NEAR(fuzzy::tnorm_eval(t, x, y), fuzzy::tnorm_eval(t, y, x), tol) << t.name();
      EXPECT_NEAR(fuzzy::tnorm_eval(t, fuzzy::tnorm_eval(t, x, y), z),
                  fuzzy::tnorm_eval(t, x, fuzzy::tnorm_eval(t, y, z)), tol)
          << t.name();
      const double lo = std::min(y, z);
      const double hi = std::max(y, z);
      EXPECT_LE(fuzzy::tnorm_eval(t, x, lo), fuzzy::tnorm_eval(t, x, hi) + tol) << t.name();
      EXPECT_LE(fuzzy::tnorm_eval(t, x, y), std::min(x, y) + tol) << t.name();
    }
  }
}

}  // namespace
