#include "fuzzy/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "fuzzy/aggregation.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/format.hpp"

namespace fuzzy {
namespace {

struct TrialOutcome {
  double dn = 0.0;
  double modal_distance = 0.0;
  std::optional<AlphaProfile> profile;
};

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void require_invertible(const FuzzyNumber& truth) {
  if (!truth.continuous_membership()) {
    throw DataError(
        "realizations need a truth with strictly monotone slopes (continuous, invertible "
        "membership)");
  }
}

}  // namespace

double psi_map(const FuzzyNumber& truth, double u) {
  if (!(u >= 0.0 && u <= 2.0)) {
    throw DomainError("psi: argument " + describe_number(u) + " outside [0,2]");
  }
  const AlphaProfile& a = truth.profile();
  const double floor_level = a.grid().min_level();
  if (u <= 1.0) return alpha_cut(a, std::max(u, floor_level)).lo;
  return alpha_cut(a, std::max(2.0 - u, floor_level)).hi;
}

std::vector<double> draw_values(const FuzzyNumber& truth, std::size_t count, UniformStream& rng) {
  std::vector<double> out(count);
  for (double& x : out) x = psi_map(truth, 2.0 * rng.next_unit());
  return out;
}

Sample draw_realizations(const RealizationSpec& spec) {
  require_invertible(spec.truth);
  if (spec.count == 0) throw DataError("realizations: count must be positive");
  UniformStream rng(spec.seed);
  return Sample(draw_values(spec.truth, spec.count, rng));
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) {
  const auto n64 = static_cast<std::uint64_t>(n);
  const auto t64 = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(n64), static_cast<std::uint32_t>(n64 >> 32),
                    static_cast<std::uint32_t>(t64), static_cast<std::uint32_t>(t64 >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

double median_of(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size() / 2;
  if (values.size() % 2 == 1) return values[k];
  return 0.5 * (values[k - 1] + values[k]);
}

void validate(const ExperimentConfig& cfg) {
  validate(cfg.estimator);
  if (cfg.schedule.empty()) throw ConfigError("experiment: empty schedule");
  for (std::size_t i = 0; i < cfg.schedule.size(); ++i) {
    if (cfg.schedule[i] < 2) throw ConfigError("experiment: sample sizes must be at least 2");
    if (i > 0 && cfg.schedule[i] <= cfg.schedule[i - 1]) {
      throw ConfigError("experiment: schedule must be strictly ascending");
    }
  }
  if (cfg.trials == 0) throw ConfigError("experiment: trials must be positive");
  if (cfg.offset && !cfg.offset->valid()) throw ConfigError("experiment: offset has lo > hi");
}

ConvergenceReport run_experiment(const ExperimentConfig& cfg,
                                 std::vector<AlphaProfile>* first_trial_profiles) {
  validate(cfg);
  require_invertible(cfg.truth);

  const AlphaGrid& grid = cfg.estimator.grid;
  const AlphaProfile truth_on_grid = cfg.truth.profile().resampled(grid);
  const CrispInterval y = cfg.offset.value_or(CrispInterval{0.0, 0.0});
  const AlphaProfile reference = shift_by_crisp(truth_on_grid, y);
  const ModalValue m = modal(truth_on_grid);
  const CrispInterval reference_modal{m.lo + y.lo, m.hi + y.hi};

  ConvergenceReport report;
  report.statistic = "D_n";
  report.tnorm = cfg.estimator.kind.name();
  report.epsilon = cfg.estimator.epsilon;
  report.grid_step = grid.max_step();
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  if (cfg.offset) {
    report.notes.push_back("realizations offset by the crisp interval [" + format_number(y.lo) +
                           ", " + format_number(y.hi) + "]");
  }
  if (first_trial_profiles) first_trial_profiles->clear();

  for (std::size_t n : cfg.schedule) {
    std::vector<TrialOutcome> outcomes(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
      UniformStream rng(trial_seed(cfg.seed, n, t));
      const std::vector<double> x = draw_values(cfg.truth, n, rng);
      EstimationResult est = [&] {
        if (!cfg.offset) return estimate_profile(Sample(x), cfg.estimator);
        std::vector<double> lower(x.size());
        std::vector<double> upper(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          lower[i] = x[i] + y.lo;
          upper[i] = x[i] + y.hi;
        }
        return estimate_interval_profile(Sample(std::move(lower)), Sample(std::move(upper)),
                                         cfg.estimator);
      }();
      TrialOutcome& out = outcomes[t];
      out.dn = dn_statistic(est, reference, cfg.estimator.epsilon);
      out.modal_distance = hausdorff_interval(modal(est.profile), reference_modal);
      if (t == 0 && first_trial_profiles) out.profile = std::move(est.profile);
    });

    ConvergenceRow row;
    row.n = n;
    for (TrialOutcome& o : outcomes) {
      row.trials.push_back(o.dn);
      row.trial_modal_distance.push_back(o.modal_distance);
    }
    row.distance = median_of(row.trials);
    row.maximum = *std::max_element(row.trials.begin(), row.trials.end());
    row.modal_distance = median_of(row.trial_modal_distance);
    report.rows.push_back(std::move(row));
    if (first_trial_profiles) first_trial_profiles->push_back(std::move(*outcomes[0].profile));
  }
  report.monotone = distances_non_increasing(report);
  return report;
}

}  // namespace fuzzy
