#include "fuzzy/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzy/diagnostics.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/format.hpp"
#include "fuzzy/tnorm.hpp"

namespace fuzzy {
namespace {

constexpr double kRepairTolerance = 1e-9;

// Cut at alpha on arbitrary ascending levels, linear between levels and
// clamped to the lowest/highest level outside their range.
CrispInterval interpolate_cut(std::span<const double> levels, std::span<const double> lo,
                              std::span<const double> hi, double alpha) {
  if (alpha <= levels.front()) return {lo.front(), hi.front()};
  if (alpha >= levels.back()) return {lo.back(), hi.back()};
  const auto it = std::lower_bound(levels.begin(), levels.end(), alpha);
  const auto j = static_cast<std::size_t>(it - levels.begin());
  if (levels[j] == alpha) return {lo[j], hi[j]};
  const double t = (alpha - levels[j - 1]) / (levels[j] - levels[j - 1]);
  return {lo[j - 1] + t * (lo[j] - lo[j - 1]), hi[j - 1] + t * (hi[j] - hi[j - 1])};
}

double interpolate_membership(std::span<const double> levels, std::span<const double> lo,
                              std::span<const double> hi, double x) {
  const std::size_t top = levels.size() - 1;
  if (x < lo.front() || x > hi.front()) return 0.0;
  if (lo[top] <= x && x <= hi[top]) return levels[top];
  if (x < lo[top]) {
    // Largest i with lo[i] <= x; lo[i + 1] > x.
    const auto it = std::upper_bound(lo.begin(), lo.end(), x);
    const auto i = static_cast<std::size_t>(it - lo.begin()) - 1;
    const double t = (x - lo[i]) / (lo[i + 1] - lo[i]);
    return levels[i] + t * (levels[i + 1] - levels[i]);
  }
  // Largest i with hi[i] >= x; hi[i + 1] < x.
  const auto it = std::partition_point(hi.begin(), hi.end(), [x](double v) { return v >= x; });
  const auto i = static_cast<std::size_t>(it - hi.begin()) - 1;
  const double t = (hi[i] - x) / (hi[i] - hi[i + 1]);
  return levels[i] + t * (levels[i + 1] - levels[i]);
}

void check_cut_arrays(std::size_t levels, const std::vector<double>& lo,
                      const std::vector<double>& hi) {
  if (lo.size() != levels || hi.size() != levels) {
    throw DataError("profile: expected " + std::to_string(levels) + " cuts, got " +
                    std::to_string(lo.size()) + "/" + std::to_string(hi.size()));
  }
  for (std::size_t i = 0; i < levels; ++i) {
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) {
      throw DataError("profile: non-finite endpoint at level index " + std::to_string(i));
    }
  }
}

void check_nested(std::span<const double> levels, std::span<const double> lo,
                  std::span<const double> hi) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      throw DataError("profile: empty cut at alpha = " + format_number(levels[i]));
    }
    if (i > 0 && (lo[i] < lo[i - 1] || hi[i] > hi[i - 1])) {
      throw DataError("profile: cuts not nested at alpha = " + format_number(levels[i]));
    }
  }
}

void repair_monotone(std::vector<double>& lo, std::vector<double>& hi, double& worst) {
  for (std::size_t i = 1; i < lo.size(); ++i) {
    if (lo[i] < lo[i - 1]) {
      worst = std::max(worst, lo[i - 1] - lo[i]);
      lo[i] = lo[i - 1];
    }
    if (hi[i] > hi[i - 1]) {
      worst = std::max(worst, hi[i] - hi[i - 1]);
      hi[i] = hi[i - 1];
    }
  }
}

}  // namespace

// --- AlphaGrid ---------------------------------------------------------------

AlphaGrid AlphaGrid::uniform(std::size_t levels, double min_level) {
  if (!(min_level > 0.0 && min_level <= 1.0)) {
    throw DomainError("alpha grid: minimum level must lie in (0,1]");
  }
  if (levels == 0) throw DomainError("alpha grid: at least one level required");
  if (levels == 1 || min_level == 1.0) {
    if (levels != 1) throw DomainError("alpha grid: several levels need min_level < 1");
    return AlphaGrid({1.0});
  }
  std::vector<double> v(levels);
  const double span = 1.0 - min_level;
  const auto last = static_cast<double>(levels - 1);
  for (std::size_t i = 0; i < levels; ++i) {
    v[i] = min_level + span * (static_cast<double>(i) / last);
  }
  v.back() = 1.0;
  return AlphaGrid(std::move(v));
}

AlphaGrid AlphaGrid::from_levels(std::vector<double> levels) {
  if (levels.empty()) throw DataError("alpha grid: no levels");
  if (!(levels.front() > 0.0)) throw DataError("alpha grid: levels must be positive");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!(levels[i] > levels[i - 1])) {
      throw DataError("alpha grid: levels must be strictly ascending");
    }
  }
  if (levels.back() != 1.0) throw DataError("alpha grid: the last level must be exactly 1");
  return AlphaGrid(std::move(levels));
}

double AlphaGrid::max_step() const noexcept {
  double step = 0.0;
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    step = std::max(step, levels_[i] - levels_[i - 1]);
  }
  return step;
}

std::size_t AlphaGrid::first_at_or_above(double alpha) const noexcept {
  return static_cast<std::size_t>(std::lower_bound(levels_.begin(), levels_.end(), alpha) -
                                  levels_.begin());
}

// --- AlphaProfile ------------------------------------------------------------

AlphaProfile AlphaProfile::from_cuts(AlphaGrid grid, std::vector<double> lo,
                                     std::vector<double> hi) {
  check_cut_arrays(grid.size(), lo, hi);
  check_nested(grid.levels(), lo, hi);
  return AlphaProfile(std::move(grid), std::move(lo), std::move(hi));
}

AlphaProfile AlphaProfile::repaired(AlphaGrid grid, std::vector<double> lo,
                                    std::vector<double> hi) {
  check_cut_arrays(grid.size(), lo, hi);
  double worst = 0.0;
  repair_monotone(lo, hi, worst);

  bool collapsed = false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      const double gap = lo[i] - hi[i];
      const double scale = 1.0 + std::max(std::abs(lo[i]), std::abs(hi[i]));
      if (gap > kRepairTolerance * scale) {
        throw DataError("profile: empty cut at alpha = " + format_number(grid[i]) +
                        " (lo exceeds hi by " + format_number(gap) + ")");
      }
      worst = std::max(worst, gap);
      lo[i] = hi[i] = 0.5 * (lo[i] + hi[i]);
      collapsed = true;
    }
  }
  if (collapsed) repair_monotone(lo, hi, worst);
  check_nested(grid.levels(), lo, hi);

  if (worst > kRepairTolerance) {
    warn("profile: monotonicity repair of " + format_number(worst) + " applied to alpha-cuts");
  }
  return AlphaProfile(std::move(grid), std::move(lo), std::move(hi));
}

AlphaProfile AlphaProfile::from_slopes(const AlphaGrid& grid, const SlopeFn& left,
                                       const SlopeFn& right) {
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    lo[i] = left(grid[i]);
    hi[i] = right(grid[i]);
  }
  return repaired(grid, std::move(lo), std::move(hi));
}

AlphaProfile AlphaProfile::crisp(CrispInterval x, const AlphaGrid& grid) {
  if (!x.valid()) throw DomainError("crisp interval with lo > hi");
  return from_cuts(grid, std::vector<double>(grid.size(), x.lo),
                   std::vector<double>(grid.size(), x.hi));
}

AlphaProfile AlphaProfile::triangular(double lo, double mode, double hi, const AlphaGrid& grid) {
  if (!(lo <= mode && mode <= hi)) throw DomainError("triangular: need lo <= mode <= hi");
  return trapezoidal(lo, mode, mode, hi, grid);
}

AlphaProfile AlphaProfile::trapezoidal(double a, double b, double c, double d,
                                       const AlphaGrid& grid) {
  if (!(a <= b && b <= c && c <= d)) throw DomainError("trapezoidal: need a <= b <= c <= d");
  return from_slopes(
      grid, [=](double al) { return a + al * (b - a); },
      [=](double al) { return d - al * (d - c); });
}

AlphaProfile AlphaProfile::resampled(const AlphaGrid& grid) const {
  if (grid == grid_) return *this;
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const CrispInterval c = interpolate_cut(grid_.levels(), lo_, hi_, grid[i]);
    lo[i] = c.lo;
    hi[i] = c.hi;
  }
  return repaired(grid, std::move(lo), std::move(hi));
}

// --- FuzzyNumber -------------------------------------------------------------

FuzzyNumber::FuzzyNumber(AlphaProfile profile, double tolerance) : profile_(std::move(profile)) {
  const ModalValue m = modal(profile_);
  if (m.width() > tolerance) {
    throw DataError("fuzzy number: modal cut has width " + format_number(m.width()));
  }
}

double FuzzyNumber::modal_point() const noexcept { return modal(profile_).midpoint(); }

bool FuzzyNumber::continuous_membership() const noexcept {
  const auto lo = profile_.lo();
  const auto hi = profile_.hi();
  for (std::size_t i = 1; i < lo.size(); ++i) {
    if (!(lo[i] > lo[i - 1]) || !(hi[i] < hi[i - 1])) return false;
  }
  return true;
}

// --- SubnormalProfile --------------------------------------------------------

SubnormalProfile::SubnormalProfile(std::vector<double> levels, std::vector<double> lo,
                                   std::vector<double> hi)
    : levels_(std::move(levels)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (levels_.empty()) throw DomainError("degenerate fuzzy set of height 0 cannot be normalized");
  if (!(levels_.front() > 0.0) || levels_.back() > 1.0) {
    throw DataError("subnormal profile: levels must lie in (0,1]");
  }
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (!(levels_[i] > levels_[i - 1])) {
      throw DataError("subnormal profile: levels must be strictly ascending");
    }
  }
  check_cut_arrays(levels_.size(), lo_, hi_);
  check_nested(levels_, lo_, hi_);
}

double SubnormalProfile::membership(double x) const {
  return interpolate_membership(levels_, lo_, hi_, x);
}

// --- operations --------------------------------------------------------------

CrispInterval alpha_cut(const AlphaProfile& a, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha-cut: level " + describe_number(alpha) + " outside (0,1]");
  }
  return interpolate_cut(a.grid().levels(), a.lo(), a.hi(), alpha);
}

double membership(const AlphaProfile& a, double x) {
  return interpolate_membership(a.grid().levels(), a.lo(), a.hi(), x);
}

ModalValue modal(const AlphaProfile& a) { return a.cut_at(a.size() - 1); }

double sup_distance(const AlphaProfile& a, const AlphaProfile& b, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw DomainError("sup-distance: eps " + describe_number(eps) + " outside (0,1]");
  }
  double d = hausdorff_interval(alpha_cut(a, eps), alpha_cut(b, eps));
  if (a.grid() == b.grid()) {
    for (std::size_t i = a.grid().first_at_or_above(eps); i < a.size(); ++i) {
      d = std::max(d, hausdorff_interval(a.cut_at(i), b.cut_at(i)));
    }
    return d;
  }
  for (const AlphaGrid* g : {&a.grid(), &b.grid()}) {
    for (std::size_t i = g->first_at_or_above(eps); i < g->size(); ++i) {
      const double level = (*g)[i];
      d = std::max(d, hausdorff_interval(alpha_cut(a, level), alpha_cut(b, level)));
    }
  }
  return d;
}

double possibility_of(const AlphaProfile& a, const CrispInterval& b) {
  if (!b.valid() || std::isnan(b.lo) || std::isnan(b.hi)) {
    throw DomainError("possibility: empty set");
  }
  const ModalValue m = modal(a);
  if (b.intersects(m)) return 1.0;
  // The closest point of B to the modal cut carries the supremum.
  return membership(a, b.hi < m.lo ? b.hi : b.lo);
}

double possibility_of(const AlphaProfile& a, std::span<const CrispInterval> union_of) {
  if (union_of.empty()) throw DomainError("possibility: empty set");
  double p = 0.0;
  for (const CrispInterval& b : union_of) p = std::max(p, possibility_of(a, b));
  return p;
}

double measure_convergence_margin(const AlphaProfile& a, double c, double radius) {
  if (!(radius > 0.0)) throw DomainError("convergence margin: radius must be positive");
  const CrispInterval ball{c - radius, c + radius};
  const auto levels = a.grid().levels();
  const auto lo = a.lo();
  const auto hi = a.hi();
  const std::size_t n = a.size();

  std::size_t first = 0;
  std::size_t count = n;
  while (count > 0) {  // cuts shrink with the level, so containment is monotone
    const std::size_t half = count / 2;
    if (!ball.contains(a.cut_at(first + half))) {
      first += half + 1;
      count -= half + 1;
    } else {
      count = half;
    }
  }
  if (first == n) {
    const double step = n > 1 ? levels[n - 1] - levels[n - 2] : 1.0;
    return 1.0 + step;
  }
  if (first == 0) return levels[0];

  // Refine inside (levels[first - 1], levels[first]] on the interpolated cuts.
  const std::size_t j = first;
  double t_lo = 0.0;
  if (lo[j - 1] < ball.lo) t_lo = (ball.lo - lo[j - 1]) / (lo[j] - lo[j - 1]);
  double t_hi = 0.0;
  if (hi[j - 1] > ball.hi) t_hi = (hi[j - 1] - ball.hi) / (hi[j - 1] - hi[j]);
  const double t = std::clamp(std::max(t_lo, t_hi), 0.0, 1.0);
  return levels[j - 1] + t * (levels[j] - levels[j - 1]);
}

double normalized_membership(double value, double height, const NormalTriple& triple) {
  if (!(height > 0.0 && height <= 1.0)) {
    throw DomainError("normalization: height must lie in (0,1]");
  }
  if (!(value >= 0.0 && value <= height)) {
    throw DomainError("normalization: membership value outside [0, height]");
  }
  return triple.h_inverse(triple.h(value) / triple.h(height));
}

AlphaProfile normalize(const SubnormalProfile& a, const NormalTriple& triple,
                       const AlphaGrid& out) {
  const double s = a.height();
  const double hs = triple.h(s);
  if (!(hs > 0.0)) throw DomainError("normalization: h(height) = 0");
  std::vector<double> relabeled(a.levels().size());
  for (std::size_t i = 0; i < relabeled.size(); ++i) {
    relabeled[i] = std::min(1.0, triple.h_inverse(triple.h(a.levels()[i]) / hs));
  }
  relabeled.back() = 1.0;

  std::vector<double> lo(out.size());
  std::vector<double> hi(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const CrispInterval c = interpolate_cut(relabeled, a.lo(), a.hi(), out[i]);
    lo[i] = c.lo;
    hi[i] = c.hi;
  }
  return AlphaProfile::repaired(out, std::move(lo), std::move(hi));
}

AlphaProfile normalize(const SubnormalProfile& a, const NormalTriple& triple) {
  const double s = a.height();
  const double first = triple.h_inverse(triple.h(a.levels().front()) / triple.h(s));
  const std::size_t n = a.levels().size();
  const double min_level = n > 1 ? std::clamp(first, 1e-12, 1.0 - 1e-12) : 1.0;
  return normalize(a, triple, AlphaGrid::uniform(n, min_level));
}

AlphaProfile normalize(const AlphaProfile& a, const NormalTriple& triple) {
  const SubnormalProfile sub({a.grid().levels().begin(), a.grid().levels().end()},
                             {a.lo().begin(), a.lo().end()}, {a.hi().begin(), a.hi().end()});
  return normalize(sub, triple, a.grid());
}

AlphaProfile from_cdf(const std::function<double(double)>& quantile, const AlphaGrid& grid) {
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    lo[i] = quantile(0.5 * grid[i]);
    hi[i] = quantile(1.0 - 0.5 * grid[i]);
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) {
      throw DataError("probability-possibility transform: quantile not finite at p = " +
                      format_number(0.5 * grid[i]));
    }
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double scale = 1.0 + std::max(std::abs(lo[i]), std::abs(hi[i]));
    if (lo[i - 1] - lo[i] > kRepairTolerance * scale ||
        hi[i] - hi[i - 1] > kRepairTolerance * scale) {
      throw DataError("probability-possibility transform: quantile function is not monotone");
    }
  }
  return AlphaProfile::repaired(grid, std::move(lo), std::move(hi));
}

QuantileTable::QuantileTable(std::vector<double> p, std::vector<double> x)
    : p_(std::move(p)), x_(std::move(x)) {
  if (p_.size() != x_.size()) throw DataError("quantile table: column length mismatch");
  if (p_.size() < 2) throw DataError("quantile table: at least two rows required");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0 && p_[i] <= 1.0) || !std::isfinite(x_[i])) {
      throw DataError("quantile table: row " + std::to_string(i + 1) + " out of range");
    }
    if (i > 0 && !(p_[i] > p_[i - 1])) {
      throw DataError("quantile table: probabilities must be strictly ascending");
    }
    if (i > 0 && x_[i] < x_[i - 1]) {
      throw DataError("quantile table: quantiles are not monotone at p = " + format_number(p_[i]));
    }
  }
}

double QuantileTable::operator()(double p) const {
  if (p <= p_.front()) return x_.front();
  if (p >= p_.back()) return x_.back();
  const auto it = std::upper_bound(p_.begin(), p_.end(), p);
  const auto j = static_cast<std::size_t>(it - p_.begin());
  const double t = (p - p_[j - 1]) / (p_[j] - p_[j - 1]);
  return x_[j - 1] + t * (x_[j] - x_[j - 1]);
}

LevelwiseTable levelwise_distance_profile(std::span<const AlphaProfile> sequence,
                                          const AlphaProfile& target) {
  LevelwiseTable table;
  table.levels.assign(target.grid().levels().begin(), target.grid().levels().end());
  table.distance.reserve(sequence.size());
  for (std::size_t n = 0; n < sequence.size(); ++n) {
    const AlphaProfile& p = sequence[n];
    if (!(p.grid() == target.grid())) {
      throw DataError("levelwise distance: profile " + std::to_string(n + 1) +
                      " is on a different grid than the target");
    }
    std::vector<double> row(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      row[i] = hausdorff_interval(p.cut_at(i), target.cut_at(i));
    }
    table.distance.push_back(std::move(row));
  }
  return table;
}

bool nested_within(const AlphaProfile& inner, const AlphaProfile& outer, double slack) {
  if (!(inner.grid() == outer.grid())) throw DataError("nesting check: grids differ");
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner.lo()[i] < outer.lo()[i] - slack || inner.hi()[i] > outer.hi()[i] + slack) {
      return false;
    }
  }
  return true;
}

}  // namespace fuzzy
