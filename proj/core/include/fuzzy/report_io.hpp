#ifndef FUZZY_REPORT_IO_HPP
#define FUZZY_REPORT_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzy/estimation.hpp"
#include "fuzzy/report.hpp"
#include "fuzzy/simulation.hpp"

namespace fuzzy {

/// "triangular:<lo>,<mode>,<hi>" or a profile file path (relative paths are
/// resolved against `base_dir`). The profile is resampled onto `grid`.
FuzzyNumber parse_truth_spec(std::string_view spec, const std::filesystem::path& base_dir,
                             const AlphaGrid& grid);

/// Experiment config JSON:
///   {"truth": "triangular:-1,0,1" | "<profile file>", "tnorm": "product",
///    "schedule": [100, 1000, 10000], "trials": 20, "seed": 7, "epsilon": 0.1,
///    "grid": 1001, "offset": [2, 3], "threads": 0}
/// grid, offset and threads are optional. `grid_levels` is used when the file
/// has no "grid" entry. Malformed JSON or fields throw ConfigError.
ExperimentConfig parse_experiment_config(std::string_view json,
                                         const std::filesystem::path& base_dir,
                                         std::size_t grid_levels = AlphaGrid::kDefaultLevels);

/// Per-n columns of a report as JSON. Deterministic byte output for a given
/// report.
std::string write_report_json(const ConvergenceReport& report);

/// Estimation metadata: n, t-norm, epsilon, grid step, index pairs, bias
/// vector and D_n when present.
std::string write_estimation_sidecar_json(const EstimationResult& result);

}  // namespace fuzzy

#endif  // FUZZY_REPORT_IO_HPP
