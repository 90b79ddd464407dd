#ifndef FUZZY_REPORT_HPP
#define FUZZY_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fuzzy {

inline constexpr double kNotComputed = std::numeric_limits<double>::quiet_NaN();

/// One sequence index n of an LLN run or one schedule entry of a simulation.
struct ConvergenceRow {
  std::size_t n = 0;
  /// LLN: sup-distance of the n-th profile to the modal value.
  /// Simulation: median of D_n over trials.
  double distance = kNotComputed;
  /// LLN: smallest level whose cut lies in the ball around the modal midpoint.
  double margin = kNotComputed;
  /// Simulation: maximum of D_n over trials.
  double maximum = kNotComputed;
  /// Simulation: median Hausdorff distance of the estimated modal cut to the
  /// reference modal interval.
  double modal_distance = kNotComputed;
  /// Median statistic for even n uses the postulated any-n formula.
  bool postulated = false;
  std::vector<double> trials;
  std::vector<double> trial_modal_distance;
};

struct ConvergenceReport {
  std::string statistic;  // "median", "average" or "D_n"
  std::string tnorm;
  double epsilon = kNotComputed;
  double grid_step = kNotComputed;
  /// The average statistic was evaluated on the concave envelope, so the
  /// distances bound the true ones from above.
  bool upper_bound = false;
  /// distance is non-increasing along the rows.
  bool monotone = false;
  /// Simulation only.
  std::optional<std::uint64_t> seed;
  std::size_t trials = 0;
  std::vector<ConvergenceRow> rows;
  std::vector<std::string> notes;
};

/// True when the distance column never increases.
bool distances_non_increasing(const ConvergenceReport& report);

}  // namespace fuzzy

#endif  // FUZZY_REPORT_HPP
