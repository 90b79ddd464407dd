#ifndef FUZZY_SIMULATION_HPP
#define FUZZY_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fuzzy/estimation.hpp"
#include "fuzzy/interval.hpp"
#include "fuzzy/profile.hpp"
#include "fuzzy/report.hpp"

namespace fuzzy {

// Realizations of a fuzzy-number variable X with membership A are produced as
// psi(U): U has the tent membership on [0,2], and psi inverts the left slope
// of A on [0,1] and the right slope (at 2 - u) on (1,2].
//
// For Monte Carlo the parameter u is drawn uniformly on [0,2]. That is the law
// under which the sample quantiles of psi(U) satisfy F(lo(a)) = a/2 and
// F(hi(a)) = 1 - a/2, i.e. the law that makes the probability-possibility
// transform of the realizations reproduce A. Other laws are not supported.

/// psi(u). Throws DomainError for u outside [0,2].
double psi_map(const FuzzyNumber& truth, double u);

struct RealizationSpec {
  FuzzyNumber truth;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/// Generator stream used for every draw; the same seed always yields the same
/// values on every platform (mt19937_64 and a fixed 53-bit conversion).
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  explicit UniformStream(std::seed_seq& seq) : engine_(seq) {}
  /// Uniform on [0, 1).
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// count values psi(u_i), u_i uniform on [0,2]. Throws DataError when the
/// truth has a flat slope segment (psi would not be single valued).
Sample draw_realizations(const RealizationSpec& spec);
std::vector<double> draw_values(const FuzzyNumber& truth, std::size_t count, UniformStream& rng);

/// Seed of the generator owned by one trial, derived from the master seed,
/// the sample size and the trial index, so results do not depend on the
/// order in which trials run.
std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t trial);

struct ExperimentConfig {
  FuzzyNumber truth;
  EstimatorConfig estimator;
  /// Strictly ascending sample sizes.
  std::vector<std::size_t> schedule;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  /// Crisp systematic offset Y added to every realization, which turns each
  /// observation into the interval [x + Y.lo, x + Y.hi].
  std::optional<CrispInterval> offset;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Throws ConfigError for an empty or non-ascending schedule, sizes below 2,
/// zero trials, or an invalid estimator config.
void validate(const ExperimentConfig& cfg);

/// For each n and trial: draw, estimate, and compare with the truth (shifted
/// by the offset if any). Rows carry per-trial D_n, their median and
/// maximum, and the median modal-cut distance. When `first_trial_profiles`
/// is non-null it receives the trial-0 estimate for every n.
ConvergenceReport run_experiment(const ExperimentConfig& cfg,
                                 std::vector<AlphaProfile>* first_trial_profiles = nullptr);

/// Median of a non-empty list (mean of the middle pair for even sizes).
double median_of(std::vector<double> values);

}  // namespace fuzzy

#endif  // FUZZY_SIMULATION_HPP
