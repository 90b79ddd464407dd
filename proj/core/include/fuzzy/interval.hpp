#ifndef FUZZY_INTERVAL_HPP
#define FUZZY_INTERVAL_HPP

#include <algorithm>
#include <cmath>

namespace fuzzy {

/// Closed real interval [lo, hi]. A degenerate interval lo == hi is a point.
struct CrispInterval {
  double lo = 0.0;
  double hi = 0.0;

  static constexpr CrispInterval point(double x) noexcept { return {x, x}; }

  constexpr bool valid() const noexcept { return lo <= hi; }
  constexpr double width() const noexcept { return hi - lo; }
  constexpr double midpoint() const noexcept { return 0.5 * (lo + hi); }
  constexpr bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  constexpr bool contains(const CrispInterval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }
  constexpr bool intersects(const CrispInterval& other) const noexcept {
    return lo <= other.hi && other.lo <= hi;
  }

  friend constexpr bool operator==(const CrispInterval&, const CrispInterval&) = default;
};

/// The level-1 cut of a fuzzy interval.
using ModalValue = CrispInterval;

/// Smallest interval containing both arguments.
constexpr CrispInterval hull(const CrispInterval& a, const CrispInterval& b) noexcept {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

/// Hausdorff distance of two compact intervals, max(|a.lo - b.lo|, |a.hi - b.hi|).
inline double hausdorff_interval(const CrispInterval& a, const CrispInterval& b) noexcept {
  return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

}  // namespace fuzzy

#endif  // FUZZY_INTERVAL_HPP
