#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "fuzzy/errors.hpp"
#include "fuzzy/format.hpp"
#include "fuzzy/io.hpp"
#include "fuzzy/report_io.hpp"

namespace fuzzy {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<double> split_numbers(std::string_view list) {
  std::vector<double> out;
  while (true) {
    const auto comma = list.find(',');
    out.push_back(parse_number(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
T required(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(std::string("experiment config: missing '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("experiment config: bad value for '") + key + "'");
  }
}

std::size_t positive_count(const nlohmann::json& v, const char* key) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw ConfigError(std::string("experiment config: '") + key + "' must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<std::uint64_t>());
}

ordered_json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

FuzzyNumber parse_truth_spec(std::string_view spec, const std::filesystem::path& base_dir,
                             const AlphaGrid& grid) {
  constexpr std::string_view tri = "triangular:";
  if (spec.starts_with(tri)) {
    std::vector<double> v;
    try {
      v = split_numbers(spec.substr(tri.size()));
    } catch (const DataError&) {
      throw ConfigError("truth: malformed '" + std::string(spec) + "'");
    }
    if (v.size() != 3 || !(v[0] < v[1] && v[1] < v[2])) {
      throw ConfigError("truth: expected triangular:<lo>,<mode>,<hi> with lo < mode < hi");
    }
    return FuzzyNumber(AlphaProfile::triangular(v[0], v[1], v[2], grid));
  }
  std::filesystem::path path{std::string(spec)};
  if (path.is_relative()) path = base_dir / path;
  return FuzzyNumber(read_profile(path).resampled(grid));
}

ExperimentConfig parse_experiment_config(std::string_view json,
                                         const std::filesystem::path& base_dir,
                                         std::size_t grid_levels) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("experiment config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("experiment config: expected a JSON object");

  static const char* const kKnown[] = {"truth",   "tnorm", "schedule", "trials", "seed",
                                       "epsilon", "grid",  "offset",   "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw ConfigError("experiment config: unknown field '" + key + "'");
    }
  }

  if (doc.contains("grid")) grid_levels = positive_count(doc["grid"], "grid");
  if (grid_levels < 2) throw ConfigError("experiment config: grid needs at least 2 levels");
  const AlphaGrid grid = AlphaGrid::uniform(grid_levels);

  EstimatorConfig estimator{.kind = TNorm::parse(required<std::string>(doc, "tnorm")),
                            .grid = grid,
                            .epsilon = required<double>(doc, "epsilon"),
                            .index_rule = {}};

  if (!doc.contains("schedule") || !doc["schedule"].is_array()) {
    throw ConfigError("experiment config: 'schedule' must be an array");
  }
  std::vector<std::size_t> schedule;
  for (const auto& v : doc["schedule"]) schedule.push_back(positive_count(v, "schedule"));

  if (!doc.contains("trials")) throw ConfigError("experiment config: missing 'trials'");
  const std::size_t trials = positive_count(doc["trials"], "trials");
  if (!doc.contains("seed") || !doc["seed"].is_number_unsigned()) {
    throw ConfigError("experiment config: 'seed' must be a non-negative integer");
  }

  ExperimentConfig cfg{
      .truth = parse_truth_spec(required<std::string>(doc, "truth"), base_dir, grid),
      .estimator = std::move(estimator),
      .schedule = std::move(schedule),
      .trials = trials,
      .seed = doc["seed"].get<std::uint64_t>(),
      .offset = std::nullopt,
      .threads = 0,
  };
  if (doc.contains("offset")) {
    const auto& o = doc["offset"];
    if (!o.is_array() || o.size() != 2 || !o[0].is_number() || !o[1].is_number()) {
      throw ConfigError("experiment config: 'offset' must be [lo, hi]");
    }
    cfg.offset = CrispInterval{o[0].get<double>(), o[1].get<double>()};
  }
  if (doc.contains("threads")) {
    if (!doc["threads"].is_number_unsigned()) {
      throw ConfigError("experiment config: 'threads' must be a non-negative integer");
    }
    cfg.threads = doc["threads"].get<unsigned>();
  }
  validate(cfg);
  return cfg;
}

std::string write_report_json(const ConvergenceReport& report) {
  ordered_json doc;
  doc["statistic"] = report.statistic;
  doc["tnorm"] = report.tnorm;
  doc["epsilon"] = number_or_null(report.epsilon);
  doc["grid_step"] = number_or_null(report.grid_step);
  if (report.seed) {
    doc["seed"] = *report.seed;
    doc["trials"] = report.trials;
  }
  doc["upper_bound"] = report.upper_bound;
  doc["monotone"] = report.monotone;

  ordered_json n = ordered_json::array();
  ordered_json distance = ordered_json::array();
  for (const auto& row : report.rows) {
    n.push_back(row.n);
    distance.push_back(number_or_null(row.distance));
  }
  doc["n"] = std::move(n);

  if (report.seed) {
    ordered_json max = ordered_json::array();
    ordered_json modal = ordered_json::array();
    ordered_json dn = ordered_json::array();
    ordered_json dn_modal = ordered_json::array();
    for (const auto& row : report.rows) {
      max.push_back(number_or_null(row.maximum));
      modal.push_back(number_or_null(row.modal_distance));
      dn.push_back(row.trials);
      dn_modal.push_back(row.trial_modal_distance);
    }
    doc["median_dn"] = std::move(distance);
    doc["max_dn"] = std::move(max);
    doc["median_modal_distance"] = std::move(modal);
    doc["dn"] = std::move(dn);
    doc["modal_distance"] = std::move(dn_modal);
  } else {
    ordered_json margin = ordered_json::array();
    ordered_json postulated = ordered_json::array();
    for (const auto& row : report.rows) {
      margin.push_back(number_or_null(row.margin));
      postulated.push_back(row.postulated);
    }
    doc["sup_distance"] = std::move(distance);
    doc["margin"] = std::move(margin);
    doc["postulated"] = std::move(postulated);
  }
  doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

std::string write_estimation_sidecar_json(const EstimationResult& result) {
  ordered_json doc;
  doc["n"] = result.n;
  doc["tnorm"] = result.tnorm;
  doc["epsilon"] = result.epsilon;
  doc["grid_levels"] = result.profile.size();
  doc["grid_step"] = result.grid_step;
  ordered_json lower = ordered_json::array();
  ordered_json upper = ordered_json::array();
  for (const auto& p : result.indices) {
    lower.push_back(p.lower);
    upper.push_back(p.upper);
  }
  doc["lower_index"] = std::move(lower);
  doc["upper_index"] = std::move(upper);
  doc["bias"] = result.bias;
  if (result.dn) doc["dn"] = *result.dn;
  return doc.dump(2) + "\n";
}

}  // namespace fuzzy
