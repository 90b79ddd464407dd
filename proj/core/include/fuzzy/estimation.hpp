#ifndef FUZZY_ESTIMATION_HPP
#define FUZZY_ESTIMATION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzy/interval.hpp"
#include "fuzzy/profile.hpp"
#include "fuzzy/tnorm.hpp"

namespace fuzzy {

/// Observations sorted ascending, with 1-based order statistics.
class Sample {
 public:
  /// Sorts the values. Throws DataError for an empty sample or non-finite values.
  explicit Sample(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  /// k-th smallest value, 1 <= k <= n. Throws DomainError otherwise.
  double order_stat(std::size_t k) const;

 private:
  std::vector<double> values_;
};

/// Order-statistic indices (1-based) of the estimated cut [X_lower, X_upper].
struct IndexPair {
  std::size_t lower = 1;
  std::size_t upper = 1;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Maps (n, alpha) to the order statistics spanning the estimated cut.
using IndexRule = std::function<IndexPair(std::size_t n, double alpha)>;

/// The default rule. With m = n for even n and m = n + 1 for odd n:
///   lower = ceil(m h(a) / 2) clamped to {1, ..., ceil(n/2)},
///   upper = n - floor(m h(a) / 2).
/// If lower > upper (odd n near a = 1) both collapse to lower.
IndexRule parity_rule(const NormalTriple& triple);

/// [X_k, X_{n-k}] from an explicit k(n, a); collapses to X_k when n - k < k.
IndexRule k_rule(std::function<std::size_t(std::size_t n, double alpha)> k);

/// k(n, a) = ceil(n/2 (h(a) + b(n, a))) clamped to {1, ..., ceil(n/2)},
/// with the parity rule's upper index shifted by the same amount.
IndexRule constant_bias_rule(const NormalTriple& triple, double bias_times_n);

/// b(n, a) = 2 k / n - h(a) with k the lower index.
double index_bias(const IndexPair& indices, std::size_t n, double h_alpha);

/// Checks an index rule on `grid` for sample size n: lower index in
/// {1, ..., ceil(n/2)}, lower <= upper <= n, lower non-decreasing and upper
/// non-increasing in alpha, and a bias that has dropped below 1e-3 at
/// n = 100000. Throws ConfigError on the first violation.
void validate_index_rule(const IndexRule& rule, std::size_t n, const AlphaGrid& grid,
                         const NormalTriple& triple);

struct EstimatorConfig {
  /// Must be strict Archimedean.
  TNorm kind = TNorm::product();
  AlphaGrid grid = AlphaGrid::uniform();
  /// Lower level cut-off for D_n.
  double epsilon = 0.05;
  /// Empty means the parity rule.
  IndexRule index_rule;
};

/// Throws ConfigError when the t-norm is not strict or epsilon is outside (0,1].
void validate(const EstimatorConfig& cfg);

struct EstimationResult {
  AlphaProfile profile;
  std::size_t n = 0;
  std::string tnorm;
  double epsilon = 0.05;
  double grid_step = 0.0;
  /// Per grid level.
  std::vector<IndexPair> indices;
  std::vector<double> bias;
  /// Filled when a truth profile was supplied.
  std::optional<double> dn;
};

/// Order-statistics estimate of the cut at `alpha` under the configured rule.
/// Throws ConfigError for a non-strict t-norm and DataError when n < 2.
CrispInterval phi_hat(const Sample& sample, double alpha, const EstimatorConfig& cfg);

/// [X_lower, X_upper] from an explicit rule, validated on the default grid.
CrispInterval phi_hat_biased(const Sample& sample, double alpha, const IndexRule& rule,
                             const NormalTriple& triple);

/// phi_hat on every grid level.
EstimationResult estimate_profile(const Sample& sample, const EstimatorConfig& cfg);

/// Estimate for interval-valued observations [x_i + y_lo, x_i + y_hi]: lower
/// endpoints come from `lower` and upper endpoints from `upper`.
EstimationResult estimate_interval_profile(const Sample& lower, const Sample& upper,
                                           const EstimatorConfig& cfg);

/// D_n = sup over grid levels in [eps, 1] of d(estimated cut, true cut).
/// Throws DataError when the grids differ.
double dn_statistic(const EstimationResult& result, const AlphaProfile& truth, double eps);

/// Most possible estimate: the true cut at level h^-1(h(a) + b(n, a)).
/// Levels outside (0,1] are clamped with a warning.
CrispInterval modal_bias_prediction(const AlphaProfile& truth, std::size_t n, double alpha,
                                    const EstimatorConfig& cfg);

}  // namespace fuzzy

#endif  // FUZZY_ESTIMATION_HPP
