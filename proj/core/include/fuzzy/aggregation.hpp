#ifndef FUZZY_AGGREGATION_HPP
#define FUZZY_AGGREGATION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fuzzy/interval.hpp"
#include "fuzzy/profile.hpp"
#include "fuzzy/report.hpp"
#include "fuzzy/tnorm.hpp"

namespace fuzzy {

/// A continuous binary map f(x, y) together with its interval extension.
///
/// For maps monotone in each coordinate the extension is exact: the image of
/// a box is spanned by the images of its corners.
class MonotoneBinaryOp {
 public:
  using Eval = std::function<double(double, double)>;
  using Extension = std::function<CrispInterval(const CrispInterval&, const CrispInterval&)>;

  enum class Direction { increasing, decreasing };

  static MonotoneBinaryOp plus();
  static MonotoneBinaryOp minus();
  /// (x + y) / 2.
  static MonotoneBinaryOp average();
  /// w x + (1 - w) y with w in [0,1].
  static MonotoneBinaryOp weighted_average(double w);
  static MonotoneBinaryOp minimum();
  static MonotoneBinaryOp maximum();
  static MonotoneBinaryOp monotone(std::string name, Eval f, Direction in_x, Direction in_y);
  /// A map without interval extension; nfk_binary rejects it.
  static MonotoneBinaryOp opaque(std::string name, Eval f);

  double operator()(double x, double y) const { return eval_(x, y); }
  /// Throws UnsupportedError when the op has no interval extension.
  CrispInterval image(const CrispInterval& x, const CrispInterval& y) const;
  bool has_extension() const noexcept { return static_cast<bool>(extension_); }
  const std::string& name() const noexcept { return name_; }

 private:
  MonotoneBinaryOp(std::string name, Eval eval, Extension ext)
      : name_(std::move(name)), eval_(std::move(eval)), extension_(std::move(ext)) {}

  std::string name_;
  Eval eval_;
  Extension extension_;
};

/// f_*A for a continuous monotone f: (f_*A)^a = f(A^a).
AlphaProfile unary_image(const std::function<double(double)>& f, const AlphaProfile& a);

/// Extension-principle image f_*(A, B) under a t-norm.
///
/// Minimum: f(A^a, B^a). Archimedean with generator g: the hull of
/// f(A^xi, B^eta) along the boundary g(xi) + g(eta) = g(a), swept once with xi
/// on the grid and once with eta on the grid. Interior pairs of the region
/// add nothing because cuts shrink as levels grow.
AlphaProfile nfk_binary(const MonotoneBinaryOp& f, const AlphaProfile& a, const AlphaProfile& b,
                        const TNorm& kind);

/// Level whose cut of A is the median cut at `alpha`: g^[-1](2 g(alpha) / (n + 1)).
double median_level(double alpha, std::size_t n, const Generator& g);

/// Median of n T-independent copies of A. Proven for odd n; even n uses the
/// same formula as a postulate (see median_power_postulated).
AlphaProfile median_power(const AlphaProfile& a, std::size_t n, const Generator& g);
/// Throws ConfigError for the minimum norm.
AlphaProfile median_power(const AlphaProfile& a, std::size_t n, const TNorm& kind);
constexpr bool median_power_postulated(std::size_t n) noexcept { return n % 2 == 0; }

/// Level whose cut of A is the averaged cut at `alpha`: g^[-1](g(alpha) / n).
double average_level(double alpha, std::size_t n, const Generator& g);

enum class ConcavityPolicy {
  require,         ///< throw DataError for non-concave slopes
  envelope_bound,  ///< evaluate on concave_envelope(A), flag the result as a bound
};

struct AverageResult {
  AlphaProfile profile;
  /// Computed on the concave envelope; contains the exact average cutwise.
  bool upper_bound = false;
};

/// Mean of n T-independent copies of A for concave slopes.
AverageResult average_power(const AlphaProfile& a, std::size_t n, const Generator& g,
                            ConcavityPolicy policy = ConcavityPolicy::require);

/// Both membership slopes concave on the support (lo convex and hi concave as
/// functions of the level). `tolerance` is relative to the slope magnitude.
bool has_concave_slopes(const AlphaProfile& a, double tolerance = 1e-6);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Least concave majorant of a point set: the upper convex hull, ascending in
/// x. Points sharing an x keep the largest y.
std::vector<Point2> upper_concave_hull(std::vector<Point2> points);

/// Linear interpolation along a polyline ascending in x (clamped outside).
double polyline_at(std::span<const Point2> polyline, double x);

/// Replaces each membership slope by its least concave majorant, anchored at
/// the modal point and the support endpoint. The result contains A cutwise.
AlphaProfile concave_envelope(const AlphaProfile& a);

/// A + Y for a crisp interval Y: [lo + Y.lo, hi + Y.hi] at every level.
AlphaProfile shift_by_crisp(const AlphaProfile& a, const CrispInterval& y);

enum class Statistic { median, average };

struct LlnSequenceSpec {
  AlphaProfile base;
  Statistic statistic = Statistic::median;
  TNorm kind = TNorm::product();
  std::size_t n_max = 1;
  /// Lower level cut-off of the sup-distance column.
  double epsilon = 0.1;
  /// Ball radius for the convergence-margin column.
  double radius = 0.1;
};

struct LlnSequence {
  /// profiles[n - 1] is the statistic of n copies.
  std::vector<AlphaProfile> profiles;
  ConvergenceReport report;
};

/// M_n (median) or A_n (average) for n = 1..n_max with convergence
/// diagnostics against the modal value of the base profile.
LlnSequence lln_sequence(const LlnSequenceSpec& spec);

}  // namespace fuzzy

#endif  // FUZZY_AGGREGATION_HPP
