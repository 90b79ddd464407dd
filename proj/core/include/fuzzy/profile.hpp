#ifndef FUZZY_PROFILE_HPP
#define FUZZY_PROFILE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fuzzy/interval.hpp"

namespace fuzzy {

class NormalTriple;

/// Ascending membership levels in (0,1] whose last entry is exactly 1.
///
/// Level 0 is never represented: the support of a fuzzy interval is
/// approximated by its cut at the smallest level.
class AlphaGrid {
 public:
  static constexpr std::size_t kDefaultLevels = 1001;
  static constexpr double kDefaultMinLevel = 0.001;

  /// `levels` equally spaced values from `min_level` to 1 inclusive.
  static AlphaGrid uniform(std::size_t levels = kDefaultLevels,
                           double min_level = kDefaultMinLevel);

  /// Throws DataError unless strictly ascending in (0,1] and ending in 1.
  static AlphaGrid from_levels(std::vector<double> levels);

  std::span<const double> levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }
  double min_level() const noexcept { return levels_.front(); }

  /// Largest spacing between adjacent levels (0 for a single-level grid).
  double max_step() const noexcept;

  /// Index of the first level >= alpha (size() when alpha > 1).
  std::size_t first_at_or_above(double alpha) const noexcept;

  friend bool operator==(const AlphaGrid&, const AlphaGrid&) = default;

 private:
  explicit AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {}
  std::vector<double> levels_;
};

/// A compact fuzzy interval on the real line stored as its alpha-cuts
/// [lo(a), hi(a)] on a finite grid.
///
/// Invariants: lo is non-decreasing in a, hi is non-increasing, lo <= hi
/// everywhere, and the level-1 cut exists. Between grid levels cuts are
/// interpolated linearly, which is exact for triangular and trapezoidal
/// shapes and O(grid step) otherwise.
class AlphaProfile {
 public:
  using SlopeFn = std::function<double(double)>;

  /// Exact validation; throws DataError on any invariant violation.
  static AlphaProfile from_cuts(AlphaGrid grid, std::vector<double> lo, std::vector<double> hi);

  /// Enforces monotonicity by a running max over lo and a running min over
  /// hi, from the lowest level upward. Repairs larger than 1e-9 emit a
  /// warning; crossings of lo and hi larger than that throw DataError.
  static AlphaProfile repaired(AlphaGrid grid, std::vector<double> lo, std::vector<double> hi);

  /// Samples lo = left(a), hi = right(a) on the grid (then repaired).
  static AlphaProfile from_slopes(const AlphaGrid& grid, const SlopeFn& left,
                                  const SlopeFn& right);

  static AlphaProfile crisp(CrispInterval x, const AlphaGrid& grid = AlphaGrid::uniform());
  static AlphaProfile triangular(double lo, double mode, double hi,
                                 const AlphaGrid& grid = AlphaGrid::uniform());
  static AlphaProfile trapezoidal(double a, double b, double c, double d,
                                  const AlphaGrid& grid = AlphaGrid::uniform());

  const AlphaGrid& grid() const noexcept { return grid_; }
  std::span<const double> lo() const noexcept { return lo_; }
  std::span<const double> hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return lo_.size(); }

  CrispInterval cut_at(std::size_t i) const { return {lo_[i], hi_[i]}; }
  /// Cut at the smallest grid level.
  CrispInterval support() const { return cut_at(0); }

  /// Same fuzzy interval sampled on another grid.
  AlphaProfile resampled(const AlphaGrid& grid) const;

  friend bool operator==(const AlphaProfile&, const AlphaProfile&) = default;

 private:
  AlphaProfile(AlphaGrid grid, std::vector<double> lo, std::vector<double> hi)
      : grid_(std::move(grid)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  AlphaGrid grid_;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

/// A fuzzy interval with a single modal point.
class FuzzyNumber {
 public:
  /// Throws DataError if the level-1 cut is wider than `tolerance`.
  explicit FuzzyNumber(AlphaProfile profile, double tolerance = 1e-9);

  const AlphaProfile& profile() const noexcept { return profile_; }
  double modal_point() const noexcept;
  /// True when both slopes are strictly monotone, i.e. the membership
  /// function is continuous and invertible on each side.
  bool continuous_membership() const noexcept;

 private:
  AlphaProfile profile_;
};

/// Fuzzy set whose height s = sup A is below 1, given as cuts on ascending
/// levels in (0, s]. Only used as input to normalize().
class SubnormalProfile {
 public:
  /// Throws DomainError for an empty level list (height 0) and DataError for
  /// non-nested cuts or levels outside (0,1].
  SubnormalProfile(std::vector<double> levels, std::vector<double> lo, std::vector<double> hi);

  double height() const noexcept { return levels_.back(); }
  std::span<const double> levels() const noexcept { return levels_; }
  std::span<const double> lo() const noexcept { return lo_; }
  std::span<const double> hi() const noexcept { return hi_; }
  double membership(double x) const;

 private:
  std::vector<double> levels_;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

/// Cut at level alpha in (0,1]; levels below the grid minimum return the
/// support cut. Throws DomainError outside (0,1].
CrispInterval alpha_cut(const AlphaProfile& a, double alpha);

/// sup{alpha : x in A^alpha}; 0 outside the support cut.
double membership(const AlphaProfile& a, double x);

ModalValue modal(const AlphaProfile& a);

/// sup over alpha in [eps, 1] of the Hausdorff distance between cuts.
/// Evaluated at eps and at every grid level of either profile in [eps, 1].
double sup_distance(const AlphaProfile& a, const AlphaProfile& b, double eps);

/// Pi_A(B) = sup A(B). Throws DomainError for an empty or inverted B.
double possibility_of(const AlphaProfile& a, const CrispInterval& b);
double possibility_of(const AlphaProfile& a, std::span<const CrispInterval> union_of);

/// Smallest level delta with A^delta inside [c - radius, c + radius].
/// Exact for the interpolated profile. When no level qualifies the result is
/// 1 + (last grid step), which is > 1; see margin_found().
double measure_convergence_margin(const AlphaProfile& a, double c, double radius);
constexpr bool margin_found(double margin) noexcept { return margin <= 1.0; }

/// Pointwise normalization h^-1(h(v) / h(s)) of a membership value v of a set
/// with height s.
double normalized_membership(double value, double height, const NormalTriple& triple);

/// A^N: relabels level b to h^-1(h(b) / h(s)) and resamples onto `out`.
AlphaProfile normalize(const SubnormalProfile& a, const NormalTriple& triple,
                       const AlphaGrid& out);
/// As above onto a uniform grid with as many levels as `a`, starting at the
/// relabeled lowest level.
AlphaProfile normalize(const SubnormalProfile& a, const NormalTriple& triple);
/// Height-1 input; returns A resampled on its own grid.
AlphaProfile normalize(const AlphaProfile& a, const NormalTriple& triple);

/// Probability-possibility transform A^a = [Q(a/2), Q(1 - a/2)] of a quantile
/// function Q. Throws DataError when Q is not monotone on the grid.
AlphaProfile from_cdf(const std::function<double(double)>& quantile, const AlphaGrid& grid);

/// Piecewise-linear quantile function through (p, x) knots, clamped outside
/// the knot range.
class QuantileTable {
 public:
  /// Throws DataError unless p is strictly ascending in [0,1] and x is
  /// non-decreasing, with at least two knots.
  QuantileTable(std::vector<double> p, std::vector<double> x);

  double operator()(double p) const;
  std::span<const double> probabilities() const noexcept { return p_; }
  std::span<const double> values() const noexcept { return x_; }

 private:
  std::vector<double> p_;
  std::vector<double> x_;
};

struct LevelwiseTable {
  std::vector<double> levels;
  /// distance[n][i] = d(A_n at level i, target at level i).
  std::vector<std::vector<double>> distance;
};

/// Per-level, per-sequence-index Hausdorff distances. All profiles must share
/// the target's grid (DataError otherwise).
LevelwiseTable levelwise_distance_profile(std::span<const AlphaProfile> sequence,
                                          const AlphaProfile& target);

/// Cutwise inclusion inner^a within outer^a at every grid level, with slack.
bool nested_within(const AlphaProfile& inner, const AlphaProfile& outer, double slack = 0.0);

}  // namespace fuzzy

#endif  // FUZZY_PROFILE_HPP
