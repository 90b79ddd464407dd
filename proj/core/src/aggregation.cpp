#include "fuzzy/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzy/errors.hpp"
#include "fuzzy/format.hpp"

namespace fuzzy {
namespace {

void require_same_grid(const AlphaProfile& a, const AlphaProfile& b, const char* what) {
  if (!(a.grid() == b.grid())) {
    throw DataError(std::string(what) + ": operands are sampled on different grids");
  }
}

void require_count(std::size_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": n must be at least 1");
}

// Profile whose cut at each grid level a is A^{level(a)}.
template <class LevelMap>
AlphaProfile relevel(const AlphaProfile& a, LevelMap level) {
  const AlphaGrid& grid = a.grid();
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double beta = std::clamp(level(grid[i]), grid[i], 1.0);
    const CrispInterval c = alpha_cut(a, beta);
    lo[i] = c.lo;
    hi[i] = c.hi;
  }
  return AlphaProfile::repaired(grid, std::move(lo), std::move(hi));
}

// Left slope of the envelope: hull of (lo_i, a_i), inverted back to levels.
std::vector<double> envelope_left(std::span<const double> levels, std::span<const double> lo) {
  std::vector<Point2> pts(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) pts[i] = {lo[i], levels[i]};
  const std::vector<Point2> hull = upper_concave_hull(std::move(pts));

  std::vector<double> out(levels.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double a = levels[i];
    while (k + 1 < hull.size() && hull[k + 1].y < a) ++k;
    if (k + 1 >= hull.size() || a <= hull[k].y) {
      out[i] = hull[k].x;
      continue;
    }
    const Point2& p = hull[k];
    const Point2& q = hull[k + 1];
    out[i] = p.x + (a - p.y) * (q.x - p.x) / (q.y - p.y);
  }
  // Hull x never exceeds the original endpoint at the same level. Points that
  // sit on the hull up to rounding keep their original value, so concave
  // input comes back bit-identical.
  double scale = 1.0;
  for (double v : lo) scale = std::max(scale, std::abs(v));
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = lo[i] - out[i] <= snap ? lo[i] : out[i];
  }
  return out;
}

}  // namespace

// --- MonotoneBinaryOp --------------------------------------------------------

MonotoneBinaryOp MonotoneBinaryOp::plus() {
  return MonotoneBinaryOp(
      "plus", [](double x, double y) { return x + y; },
      [](const CrispInterval& x, const CrispInterval& y) {
        return CrispInterval{x.lo + y.lo, x.hi + y.hi};
      });
}

MonotoneBinaryOp MonotoneBinaryOp::minus() {
  return MonotoneBinaryOp(
      "minus", [](double x, double y) { return x - y; },
      [](const CrispInterval& x, const CrispInterval& y) {
        return CrispInterval{x.lo - y.hi, x.hi - y.lo};
      });
}

MonotoneBinaryOp MonotoneBinaryOp::average() {
  return MonotoneBinaryOp(
      "average", [](double x, double y) { return 0.5 * (x + y); },
      [](const CrispInterval& x, const CrispInterval& y) {
        return CrispInterval{0.5 * (x.lo + y.lo), 0.5 * (x.hi + y.hi)};
      });
}

MonotoneBinaryOp MonotoneBinaryOp::weighted_average(double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("weighted average: weight outside [0,1]");
  return MonotoneBinaryOp(
      "weighted_average:" + format_number(w),
      [w](double x, double y) { return w * x + (1.0 - w) * y; },
      [w](const CrispInterval& x, const CrispInterval& y) {
        return CrispInterval{w * x.lo + (1.0 - w) * y.lo, w * x.hi + (1.0 - w) * y.hi};
      });
}

MonotoneBinaryOp MonotoneBinaryOp::minimum() {
  return MonotoneBinaryOp(
      "min", [](double x, double y) { return std::min(x, y); },
      [](const CrispInterval& x, const CrispInterval& y) {
        return CrispInterval{std::min(x.lo, y.lo), std::min(x.hi, y.hi)};
      });
}

MonotoneBinaryOp MonotoneBinaryOp::maximum() {
  return MonotoneBinaryOp(
      "max", [](double x, double y) { return std::max(x, y); },
      [](const CrispInterval& x, const CrispInterval& y) {
        return CrispInterval{std::max(x.lo, y.lo), std::max(x.hi, y.hi)};
      });
}

MonotoneBinaryOp MonotoneBinaryOp::monotone(std::string name, Eval f, Direction in_x,
                                            Direction in_y) {
  Extension ext = [f, in_x, in_y](const CrispInterval& x, const CrispInterval& y) {
    const double x_low = in_x == Direction::increasing ? x.lo : x.hi;
    const double x_high = in_x == Direction::increasing ? x.hi : x.lo;
    const double y_low = in_y == Direction::increasing ? y.lo : y.hi;
    const double y_high = in_y == Direction::increasing ? y.hi : y.lo;
    return CrispInterval{f(x_low, y_low), f(x_high, y_high)};
  };
  return MonotoneBinaryOp(std::move(name), std::move(f), std::move(ext));
}

MonotoneBinaryOp MonotoneBinaryOp::opaque(std::string name, Eval f) {
  return MonotoneBinaryOp(std::move(name), std::move(f), {});
}

CrispInterval MonotoneBinaryOp::image(const CrispInterval& x, const CrispInterval& y) const {
  if (!extension_) {
    throw UnsupportedError("binary map '" + name_ +
                           "' has no exact interval extension; only coordinatewise monotone "
                           "maps are supported");
  }
  return extension_(x, y);
}

// --- images ------------------------------------------------------------------

AlphaProfile unary_image(const std::function<double(double)>& f, const AlphaProfile& a) {
  std::vector<double> lo(a.size());
  std::vector<double> hi(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double u = f(a.lo()[i]);
    const double v = f(a.hi()[i]);
    lo[i] = std::min(u, v);
    hi[i] = std::max(u, v);
  }
  return AlphaProfile::repaired(a.grid(), std::move(lo), std::move(hi));
}

AlphaProfile nfk_binary(const MonotoneBinaryOp& f, const AlphaProfile& a, const AlphaProfile& b,
                        const TNorm& kind) {
  require_same_grid(a, b, "extension principle");
  if (!f.has_extension()) f.image(a.cut_at(0), b.cut_at(0));  // throws

  const AlphaGrid& grid = a.grid();
  const std::size_t m = grid.size();
  std::vector<double> lo(m);
  std::vector<double> hi(m);

  if (!kind.archimedean()) {
    for (std::size_t i = 0; i < m; ++i) {
      const CrispInterval c = f.image(a.cut_at(i), b.cut_at(i));
      lo[i] = c.lo;
      hi[i] = c.hi;
    }
    return AlphaProfile::repaired(grid, std::move(lo), std::move(hi));
  }

  const Generator& g = kind.generator();
  std::vector<double> g_grid(m);
  for (std::size_t j = 0; j < m; ++j) g_grid[j] = g(grid[j]);

  for (std::size_t i = 0; i < m; ++i) {
    const double alpha = grid[i];
    const double budget = g_grid[i];
    CrispInterval acc = f.image(a.cut_at(i), b.cut_at(m - 1));
    for (std::size_t j = i; j < m; ++j) {
      const double rest = std::max(0.0, budget - g_grid[j]);
      const double partner = std::clamp(g.pseudo_inverse(rest), alpha, 1.0);
      acc = hull(acc, f.image(a.cut_at(j), alpha_cut(b, partner)));
      acc = hull(acc, f.image(alpha_cut(a, partner), b.cut_at(j)));
    }
    lo[i] = acc.lo;
    hi[i] = acc.hi;
  }
  return AlphaProfile::repaired(grid, std::move(lo), std::move(hi));
}

// --- closed forms ------------------------------------------------------------

double median_level(double alpha, std::size_t n, const Generator& g) {
  require_count(n, "median");
  return g.pseudo_inverse(2.0 * g(alpha) / static_cast<double>(n + 1));
}

AlphaProfile median_power(const AlphaProfile& a, std::size_t n, const Generator& g) {
  require_count(n, "median");
  if (n == 1) return a;
  return relevel(a, [&](double alpha) { return median_level(alpha, n, g); });
}

AlphaProfile median_power(const AlphaProfile& a, std::size_t n, const TNorm& kind) {
  if (!kind.archimedean()) {
    throw ConfigError("median closed form needs an Archimedean t-norm, got '" + kind.name() + "'");
  }
  return median_power(a, n, kind.generator());
}

double average_level(double alpha, std::size_t n, const Generator& g) {
  require_count(n, "average");
  return g.pseudo_inverse(g(alpha) / static_cast<double>(n));
}

bool has_concave_slopes(const AlphaProfile& a, double tolerance) {
  const auto levels = a.grid().levels();
  const auto lo = a.lo();
  const auto hi = a.hi();
  double prev_lo = 0.0;
  double prev_hi = 0.0;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const double da = levels[i + 1] - levels[i];
    const double s_lo = (lo[i + 1] - lo[i]) / da;
    const double s_hi = (hi[i + 1] - hi[i]) / da;
    if (i > 0) {
      // lo convex: slopes non-decreasing. hi concave: slopes non-increasing.
      if (s_lo < prev_lo - tolerance * (1.0 + std::abs(prev_lo))) return false;
      if (s_hi > prev_hi + tolerance * (1.0 + std::abs(prev_hi))) return false;
    }
    prev_lo = s_lo;
    prev_hi = s_hi;
  }
  return true;
}

AverageResult average_power(const AlphaProfile& a, std::size_t n, const Generator& g,
                            ConcavityPolicy policy) {
  require_count(n, "average");
  if (has_concave_slopes(a)) {
    if (n == 1) return {a, false};
    return {relevel(a, [&](double alpha) { return average_level(alpha, n, g); }), false};
  }
  if (policy == ConcavityPolicy::require) {
    throw DataError(
        "average closed form needs concave membership slopes; pass the envelope policy to "
        "obtain an upper bound");
  }
  const AlphaProfile env = concave_envelope(a);
  if (n == 1) return {env, true};
  return {relevel(env, [&](double alpha) { return average_level(alpha, n, g); }), true};
}

// --- envelope ----------------------------------------------------------------

std::vector<Point2> upper_concave_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), [](const Point2& p, const Point2& q) {
    return p.x < q.x || (p.x == q.x && p.y > q.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Point2& p, const Point2& q) { return p.x == q.x; }),
               points.end());

  std::vector<Point2> hull;
  for (const Point2& p : points) {
    while (hull.size() >= 2) {
      const Point2& o = hull[hull.size() - 2];
      const Point2& q = hull.back();
      // Drop q when it lies on or below the chord o -> p.
      const double cross = (q.x - o.x) * (p.y - o.y) - (q.y - o.y) * (p.x - o.x);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

double polyline_at(std::span<const Point2> polyline, double x) {
  if (polyline.empty()) throw DomainError("polyline: no points");
  if (x <= polyline.front().x) return polyline.front().y;
  if (x >= polyline.back().x) return polyline.back().y;
  const auto it = std::upper_bound(polyline.begin(), polyline.end(), x,
                                   [](double v, const Point2& p) { return v < p.x; });
  const Point2& q = *it;
  const Point2& p = *(it - 1);
  return p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
}

AlphaProfile concave_envelope(const AlphaProfile& a) {
  const auto levels = a.grid().levels();
  std::vector<double> lo = envelope_left(levels, a.lo());

  // Right slope: mirror x -> -x and reuse the left construction.
  std::vector<double> mirrored(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mirrored[i] = -a.hi()[i];
  std::vector<double> hi = envelope_left(levels, mirrored);
  for (double& v : hi) v = -v;

  return AlphaProfile::repaired(a.grid(), std::move(lo), std::move(hi));
}

AlphaProfile shift_by_crisp(const AlphaProfile& a, const CrispInterval& y) {
  if (!y.valid()) throw DomainError("crisp shift: interval with lo > hi");
  std::vector<double> lo(a.size());
  std::vector<double> hi(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    lo[i] = a.lo()[i] + y.lo;
    hi[i] = a.hi()[i] + y.hi;
  }
  return AlphaProfile::repaired(a.grid(), std::move(lo), std::move(hi));
}

// --- LLN ---------------------------------------------------------------------

LlnSequence lln_sequence(const LlnSequenceSpec& spec) {
  if (spec.n_max == 0) throw ConfigError("LLN sequence: n_max must be at least 1");
  if (!spec.kind.archimedean()) {
    throw ConfigError("LLN sequence: closed forms need an Archimedean t-norm, got '" +
                      spec.kind.name() + "'");
  }
  const Generator& g = spec.kind.generator();
  const ModalValue target = modal(spec.base);
  const AlphaProfile limit = AlphaProfile::crisp(target, spec.base.grid());

  LlnSequence out;
  out.report.statistic = spec.statistic == Statistic::median ? "median" : "average";
  out.report.tnorm = spec.kind.name();
  out.report.epsilon = spec.epsilon;
  out.report.grid_step = spec.base.grid().max_step();
  out.profiles.reserve(spec.n_max);

  for (std::size_t n = 1; n <= spec.n_max; ++n) {
    ConvergenceRow row;
    row.n = n;
    if (spec.statistic == Statistic::median) {
      out.profiles.push_back(median_power(spec.base, n, g));
      row.postulated = median_power_postulated(n);
    } else {
      AverageResult r = average_power(spec.base, n, g, ConcavityPolicy::envelope_bound);
      out.report.upper_bound = out.report.upper_bound || r.upper_bound;
      out.profiles.push_back(std::move(r.profile));
    }
    const AlphaProfile& p = out.profiles.back();
    row.distance = sup_distance(p, limit, spec.epsilon);
    row.margin = measure_convergence_margin(p, target.midpoint(), spec.radius);
    out.report.rows.push_back(std::move(row));
  }
  out.report.monotone = distances_non_increasing(out.report);
  if (out.report.upper_bound) {
    out.report.notes.emplace_back(
        "base profile has non-concave slopes; averages computed on its concave envelope are "
        "upper bounds");
  }
  if (spec.statistic == Statistic::median && spec.n_max >= 2) {
    out.report.notes.emplace_back("median rows with even n use the postulated any-n formula");
  }
  return out;
}

bool distances_non_increasing(const ConvergenceReport& report) {
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].distance > report.rows[i - 1].distance) return false;
  }
  return true;
}

}  // namespace fuzzy
