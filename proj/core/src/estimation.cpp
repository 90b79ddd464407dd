#include "fuzzy/estimation.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzy/diagnostics.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/format.hpp"

namespace fuzzy {
namespace {

// n h / 2 products that should be integers (n = 8, h = 0.5) must not pick up
// an ulp that moves ceil/floor.
double snap_to_integer(double v) {
  const double r = std::round(v);
  return std::abs(v - r) <= 1e-9 * std::max(1.0, std::abs(v)) ? r : v;
}

std::size_t half_up(std::size_t n) { return (n + 1) / 2; }

IndexPair clamp_pair(std::size_t n, long long lower, long long upper) {
  const auto cap = static_cast<long long>(half_up(n));
  lower = std::clamp(lower, 1LL, cap);
  upper = std::min(upper, static_cast<long long>(n));
  if (upper < lower) upper = lower;
  return {static_cast<std::size_t>(lower), static_cast<std::size_t>(upper)};
}

IndexRule rule_of(const EstimatorConfig& cfg, const NormalTriple& triple) {
  return cfg.index_rule ? cfg.index_rule : parity_rule(triple);
}

CrispInterval cut_from(const Sample& lower, const Sample& upper, const IndexPair& p) {
  return {lower.order_stat(p.lower), upper.order_stat(p.upper)};
}

EstimationResult estimate_from(const Sample& lower, const Sample& upper,
                               const EstimatorConfig& cfg) {
  validate(cfg);
  const std::size_t n = lower.size();
  if (n < 2) throw DataError("estimation needs at least 2 observations");
  if (upper.size() != n) throw DataError("interval sample: endpoint counts differ");

  const NormalTriple triple = NormalTriple::from_tnorm(cfg.kind);
  const IndexRule rule = rule_of(cfg, triple);
  if (cfg.index_rule) validate_index_rule(rule, n, cfg.grid, triple);

  const AlphaGrid& grid = cfg.grid;
  EstimationResult out{.profile = AlphaProfile::crisp({0.0, 0.0}, grid),
                       .n = n,
                       .tnorm = cfg.kind.name(),
                       .epsilon = cfg.epsilon,
                       .grid_step = grid.max_step(),
                       .indices = std::vector<IndexPair>(grid.size()),
                       .bias = std::vector<double>(grid.size()),
                       .dn = std::nullopt};
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const IndexPair p = rule(n, grid[i]);
    out.indices[i] = p;
    out.bias[i] = index_bias(p, n, triple.h(grid[i]));
    const CrispInterval c = cut_from(lower, upper, p);
    lo[i] = c.lo;
    hi[i] = c.hi;
  }
  out.profile = AlphaProfile::repaired(grid, std::move(lo), std::move(hi));
  return out;
}

}  // namespace

// --- Sample ------------------------------------------------------------------

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DataError("sample: no observations");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DataError("sample: non-finite observation");
  }
  std::sort(values_.begin(), values_.end());
}

double Sample::order_stat(std::size_t k) const {
  if (k < 1 || k > values_.size()) {
    throw DomainError("order statistic " + std::to_string(k) + " outside 1.." +
                      std::to_string(values_.size()));
  }
  return values_[k - 1];
}

// --- index rules -------------------------------------------------------------

IndexRule parity_rule(const NormalTriple& triple) {
  return [triple](std::size_t n, double alpha) {
    const std::size_t m = n % 2 == 0 ? n : n + 1;
    const double v = snap_to_integer(static_cast<double>(m) * triple.h(alpha) / 2.0);
    const auto lower = static_cast<long long>(std::ceil(v));
    const auto upper = static_cast<long long>(n) - static_cast<long long>(std::floor(v));
    return clamp_pair(n, lower, upper);
  };
}

IndexRule k_rule(std::function<std::size_t(std::size_t n, double alpha)> k) {
  return [k = std::move(k)](std::size_t n, double alpha) {
    const std::size_t lower = k(n, alpha);
    if (lower < 1 || lower > half_up(n)) {
      throw ConfigError("index rule: k(" + std::to_string(n) + ", " + format_number(alpha) +
                        ") = " + std::to_string(lower) + " outside 1.." +
                        std::to_string(half_up(n)));
    }
    return IndexPair{lower, std::max(lower, n - lower)};
  };
}

IndexRule constant_bias_rule(const NormalTriple& triple, double bias_times_n) {
  return [triple, bias_times_n](std::size_t n, double alpha) {
    const double shift = bias_times_n / 2.0;  // n/2 * (b = bias_times_n / n)
    const double v = snap_to_integer(static_cast<double>(n) * triple.h(alpha) / 2.0 + shift);
    const auto lower = static_cast<long long>(std::ceil(v));
    const auto upper = static_cast<long long>(n) - static_cast<long long>(std::floor(v));
    return clamp_pair(n, lower, upper);
  };
}

double index_bias(const IndexPair& indices, std::size_t n, double h_alpha) {
  return 2.0 * static_cast<double>(indices.lower) / static_cast<double>(n) - h_alpha;
}

void validate_index_rule(const IndexRule& rule, std::size_t n, const AlphaGrid& grid,
                         const NormalTriple& triple) {
  IndexPair prev{0, n};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const IndexPair p = rule(n, grid[i]);
    const std::string where = " at n = " + std::to_string(n) + ", alpha = " + format_number(grid[i]);
    if (p.lower < 1 || p.lower > half_up(n)) {
      throw ConfigError("index rule: lower index outside 1..ceil(n/2)" + where);
    }
    if (p.upper < p.lower || p.upper > n) {
      throw ConfigError("index rule: upper index outside lower..n" + where);
    }
    if (p.lower < prev.lower || p.upper > prev.upper) {
      throw ConfigError("index rule: indices not monotone in alpha" + where);
    }
    prev = p;
  }
  constexpr std::size_t kLarge = 100000;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double b = index_bias(rule(kLarge, grid[i]), kLarge, triple.h(grid[i]));
    if (std::abs(b) > 1e-3) {
      throw ConfigError("index rule: bias " + format_number(b) + " does not vanish (alpha = " +
                        format_number(grid[i]) + ", n = 100000)");
    }
  }
}

void validate(const EstimatorConfig& cfg) {
  if (!cfg.kind.strict()) {
    throw ConfigError("t-norm '" + cfg.kind.name() +
                      "' is not strict: membership estimation needs a strict Archimedean "
                      "t-norm, whose multiplicative generator is a homeomorphism of [0,1]");
  }
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0)) {
    throw ConfigError("epsilon must lie in (0,1]");
  }
}

// --- estimators --------------------------------------------------------------

CrispInterval phi_hat(const Sample& sample, double alpha, const EstimatorConfig& cfg) {
  validate(cfg);
  if (sample.size() < 2) throw DataError("estimation needs at least 2 observations");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("level outside (0,1]");
  const NormalTriple triple = NormalTriple::from_tnorm(cfg.kind);
  const IndexPair p = rule_of(cfg, triple)(sample.size(), alpha);
  return cut_from(sample, sample, p);
}

CrispInterval phi_hat_biased(const Sample& sample, double alpha, const IndexRule& rule,
                             const NormalTriple& triple) {
  if (sample.size() < 2) throw DataError("estimation needs at least 2 observations");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("level outside (0,1]");
  validate_index_rule(rule, sample.size(), AlphaGrid::uniform(), triple);
  return cut_from(sample, sample, rule(sample.size(), alpha));
}

EstimationResult estimate_profile(const Sample& sample, const EstimatorConfig& cfg) {
  return estimate_from(sample, sample, cfg);
}

EstimationResult estimate_interval_profile(const Sample& lower, const Sample& upper,
                                           const EstimatorConfig& cfg) {
  return estimate_from(lower, upper, cfg);
}

double dn_statistic(const EstimationResult& result, const AlphaProfile& truth, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("D_n: eps outside (0,1]");
  const AlphaProfile& est = result.profile;
  if (!(est.grid() == truth.grid())) {
    throw DataError("D_n: estimate and truth are sampled on different grids");
  }
  double d = 0.0;
  for (std::size_t i = est.grid().first_at_or_above(eps); i < est.size(); ++i) {
    d = std::max(d, hausdorff_interval(est.cut_at(i), truth.cut_at(i)));
  }
  return d;
}

CrispInterval modal_bias_prediction(const AlphaProfile& truth, std::size_t n, double alpha,
                                    const EstimatorConfig& cfg) {
  validate(cfg);
  if (n < 2) throw DataError("bias prediction needs n >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("level outside (0,1]");
  const NormalTriple triple = NormalTriple::from_tnorm(cfg.kind);
  const double h_alpha = triple.h(alpha);
  const double b = index_bias(rule_of(cfg, triple)(n, alpha), n, h_alpha);
  double target = h_alpha + b;
  if (target > 1.0) {
    warn("bias prediction: h(alpha) + b = " + describe_number(target) + " clamped to 1");
    target = 1.0;
  } else if (!(target > 0.0)) {
    warn("bias prediction: h(alpha) + b = " + describe_number(target) +
         " clamped to the lowest grid level");
    return alpha_cut(truth, truth.grid().min_level());
  }
  return alpha_cut(truth, std::clamp(triple.h_inverse(target), truth.grid().min_level(), 1.0));
}

}  // namespace fuzzy
