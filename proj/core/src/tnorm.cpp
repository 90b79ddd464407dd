#include "fuzzy/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "fuzzy/errors.hpp"
#include "fuzzy/format.hpp"

namespace fuzzy {
namespace {

constexpr double kBisectionTolerance = 1e-12;
constexpr int kBisectionIterations = 200;
constexpr int kValidationPoints = 1001;

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + ": argument " + describe_number(x) +
                      " outside [0,1]");
  }
}

void check_args(std::span<const double> xs, const char* what) {
  if (xs.empty()) throw DomainError(std::string(what) + ": empty argument list");
  for (double x : xs) check_unit(x, what);
}

// Root of a monotone function on [0,1]. `above(mid)` tells whether the
// target lies to the right of mid.
template <class Above>
double bisect_unit(Above above) {
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kBisectionIterations && hi - lo > kBisectionTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (above(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

// --- Generator ---------------------------------------------------------------

Generator::Generator(Form form, double scale, bool strict, Fn fn, std::string name)
    : form_(form), scale_(scale), strict_(strict), fn_(std::move(fn)), name_(std::move(name)) {
  if (!strict_) at_zero_ = (*this)(0.0);
}

Generator Generator::negative_log(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ConfigError("generator scale must be positive and finite");
  }
  return Generator(Form::negative_log, scale, true, {}, "negative_log");
}

Generator Generator::linear(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ConfigError("generator scale must be positive and finite");
  }
  return Generator(Form::linear, scale, false, {}, "linear");
}

Generator Generator::custom(Fn g, bool strict, std::string name) {
  if (!g) throw ConfigError("custom generator: empty function");
  if (std::abs(g(1.0)) > 1e-12) throw ConfigError("custom generator: g(1) must be 0");

  const double g0 = g(0.0);
  if (strict && std::isfinite(g0) && g0 < kUnboundedGenerator) {
    throw ConfigError("custom generator: flagged strict but g(0) is finite");
  }
  if (!strict && !std::isfinite(g0)) {
    throw ConfigError("custom generator: g(0) is unbounded, so the norm is strict");
  }

  double previous = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kValidationPoints; ++i) {
    const double x = static_cast<double>(i) / (kValidationPoints - 1);
    const double v = g(x);
    if (std::isnan(v) || !(v < previous)) {
      throw ConfigError("custom generator: not strictly decreasing near x = " + format_number(x));
    }
    previous = v;
  }
  if (!strict && !(g0 > g(1.0 / (kValidationPoints - 1)))) {
    throw ConfigError("custom generator: not strictly decreasing at 0");
  }
  return Generator(Form::custom, 1.0, strict, std::move(g), std::move(name));
}

double Generator::operator()(double x) const {
  switch (form_) {
    case Form::negative_log:
      if (x <= 0.0) return kUnboundedGenerator;
      return -scale_ * std::log(x);
    case Form::linear:
      return scale_ * (1.0 - x);
    case Form::custom:
      break;
  }
  if (strict_ && x <= 0.0) return kUnboundedGenerator;
  const double v = scale_ * fn_(x);
  return std::min(v, kUnboundedGenerator);
}

double Generator::pseudo_inverse(double y) const {
  if (!(y > 0.0)) return 1.0;
  if (strict_) {
    if (y >= kUnboundedGenerator) return 0.0;
  } else if (y >= at_zero_) {
    return 0.0;
  }
  switch (form_) {
    case Form::negative_log:
      return std::exp(-y / scale_);
    case Form::linear:
      return 1.0 - y / scale_;
    case Form::custom:
      break;
  }
  // g decreasing: the root lies right of mid while g(mid) > y.
  return bisect_unit([&](double mid) { return (*this)(mid) > y; });
}

Generator Generator::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("generator scale must be positive");
  Generator out = *this;
  out.scale_ = scale_ * c;
  if (!out.strict_) out.at_zero_ = at_zero_ * c;
  return out;
}

double pseudo_inverse_eval(const Generator& gen, double y) {
  if (std::isnan(y) || y < 0.0) throw DomainError("pseudo-inverse: argument must be >= 0");
  return gen.pseudo_inverse(y);
}

// --- TNorm -------------------------------------------------------------------

TNorm::TNorm(Family family, std::optional<Generator> g)
    : family_(family), generator_(std::move(g)) {}

TNorm TNorm::product() { return TNorm(Family::product, Generator::negative_log()); }
TNorm TNorm::lukasiewicz() { return TNorm(Family::lukasiewicz, Generator::linear()); }
TNorm TNorm::minimum() { return TNorm(Family::minimum, std::nullopt); }

TNorm TNorm::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw ConfigError("power t-norm: exponent must be positive and finite");
  }
  return TNorm(Family::power, Generator::negative_log(exponent));
}

TNorm TNorm::generic(Generator g) { return TNorm(Family::generic, std::move(g)); }

TNorm TNorm::parse(std::string_view spec) {
  if (spec == "product") return product();
  if (spec == "lukasiewicz") return lukasiewicz();
  if (spec == "minimum") return minimum();
  constexpr std::string_view prefix = "power:";
  if (spec.starts_with(prefix)) {
    double a = 0.0;
    try {
      a = parse_number(spec.substr(prefix.size()));
    } catch (const DataError&) {
      throw ConfigError("t-norm: bad exponent in '" + std::string(spec) + "'");
    }
    return power(a);
  }
  throw ConfigError("t-norm: unknown kind '" + std::string(spec) +
                    "' (expected product, lukasiewicz, minimum or power:<a>)");
}

const Generator& TNorm::generator() const {
  if (!generator_) throw ConfigError("the minimum t-norm has no additive generator");
  return *generator_;
}

std::string TNorm::name() const {
  switch (family_) {
    case Family::product: return "product";
    case Family::lukasiewicz: return "lukasiewicz";
    case Family::minimum: return "minimum";
    case Family::power: return "power:" + format_number(generator_->scale());
    case Family::generic: return generator_->name();
  }
  return "unknown";
}

double tnorm_eval(const TNorm& kind, std::span<const double> xs) {
  check_args(xs, "t-norm");
  if (!kind.archimedean()) return *std::min_element(xs.begin(), xs.end());

  const Generator& g = kind.generator();
  double sum = 0.0;
  for (double x : xs) {
    if (g.strict() && x <= 0.0) return 0.0;
    sum += g(x);
  }
  return g.pseudo_inverse(sum);
}

double tnorm_eval(const TNorm& kind, double x, double y) {
  const double xs[] = {x, y};
  return tnorm_eval(kind, xs);
}

double tconorm_eval(const TNorm& kind, std::span<const double> xs) {
  check_args(xs, "t-conorm");
  if (!kind.archimedean()) return *std::max_element(xs.begin(), xs.end());

  const Generator& g = kind.generator();
  if (g.strict()) {
    // Increasing generator h = exp(-g) with h(0) = 0, pseudo-inverse clamped at 1.
    const NormalTriple triple = NormalTriple::from_tnorm(kind);
    double sum = 0.0;
    for (double x : xs) sum += triple.h(x);
    return triple.h_inverse(std::min(sum, 1.0));
  }
  // Dual conorm: increasing generator x -> g(1 - x), g(0) finite.
  double sum = 0.0;
  for (double x : xs) sum += g(1.0 - x);
  return 1.0 - g.pseudo_inverse(sum);
}

double tconorm_eval(const TNorm& kind, double x, double y) {
  const double xs[] = {x, y};
  return tconorm_eval(kind, xs);
}

// --- NormalTriple ------------------------------------------------------------

NormalTriple::NormalTriple(Fn h, Fn h_inv, std::string name)
    : h_(std::move(h)), h_inv_(std::move(h_inv)), name_(std::move(name)) {}

NormalTriple NormalTriple::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw ConfigError("normal triple: exponent must be positive and finite");
  }
  if (exponent == 1.0) {
    return NormalTriple([](double x) { return x; }, [](double t) { return t; }, "power:1");
  }
  return NormalTriple([exponent](double x) { return std::pow(x, exponent); },
                      [exponent](double t) { return std::pow(t, 1.0 / exponent); },
                      "power:" + format_number(exponent));
}

NormalTriple NormalTriple::from_generator(Fn h, std::string name) {
  if (!h) throw ConfigError("normal triple: empty generator");
  if (std::abs(h(0.0)) > 1e-12) throw ConfigError("normal triple: h(0) must be 0");
  if (std::abs(h(1.0) - 1.0) > 1e-12) throw ConfigError("normal triple: h(1) must be 1");
  double previous = h(0.0);
  for (int i = 1; i < kValidationPoints; ++i) {
    const double x = static_cast<double>(i) / (kValidationPoints - 1);
    const double v = h(x);
    if (!std::isfinite(v) || !(v > previous)) {
      throw ConfigError("normal triple: h is not continuous strictly increasing near x = " +
                        format_number(x));
    }
    previous = v;
  }
  Fn inverse = [h](double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return bisect_unit([&](double mid) { return h(mid) < t; });
  };
  return NormalTriple(std::move(h), std::move(inverse), std::move(name));
}

NormalTriple NormalTriple::from_tnorm(const TNorm& kind) {
  if (!kind.strict()) {
    throw ConfigError("t-norm '" + kind.name() +
                      "' is not strict; a continuous normal triple needs a strict "
                      "Archimedean t-norm");
  }
  const Generator& g = kind.generator();
  if (g.form() == Generator::Form::negative_log) {
    NormalTriple t = power(g.scale());
    t.name_ = kind.name();
    return t;
  }
  Fn h = [g](double x) { return x <= 0.0 ? 0.0 : std::exp(-g(x)); };
  Fn h_inv = [g](double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return g.pseudo_inverse(-std::log(t));
  };
  return NormalTriple(std::move(h), std::move(h_inv), kind.name());
}

double NormalTriple::h_inverse(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return h_inv_(t);
}

double NormalTriple::conorm(double x, double y) const {
  check_unit(x, "conorm");
  check_unit(y, "conorm");
  return h_inverse(std::min(h(x) + h(y), 1.0));
}

double NormalTriple::tnorm(double x, double y) const {
  check_unit(x, "t-norm");
  check_unit(y, "t-norm");
  return h_inverse(h(x) * h(y));
}

double NormalTriple::negation(double x) const {
  check_unit(x, "negation");
  return h_inverse(1.0 - h(x));
}

NormalTriple make_normal_triple(NormalTriple::Fn h) {
  return NormalTriple::from_generator(std::move(h));
}

double necessity_from_possibility(const NormalTriple& triple, double pi) {
  return triple.negation(pi);
}

}  // namespace fuzzy
