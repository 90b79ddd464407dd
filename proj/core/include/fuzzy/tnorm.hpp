#ifndef FUZZY_TNORM_HPP
#define FUZZY_TNORM_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace fuzzy {

/// Finite stand-in for g(0) = +inf of a strict generator. Code never compares
/// against this value to decide strictness; it asks Generator::strict().
inline constexpr double kUnboundedGenerator = 1e300;

/// Additive generator g : [0,1] -> [0,inf] of a continuous Archimedean t-norm,
/// T(x, y) = g^[-1](g(x) + g(y)).
///
/// g is strictly decreasing with g(1) = 0. The pseudo-inverse g^[-1] agrees
/// with g^-1 on [0, g(0)] and is 0 beyond. Built-in forms invert in closed
/// form; custom generators are inverted by bisection (tolerance 1e-12, at
/// most 200 iterations).
///
/// Convexity of g is not checked, only strict monotonicity.
class Generator {
 public:
  using Fn = std::function<double(double)>;

  enum class Form {
    negative_log,  ///< g(x) = -c ln x (product norm; strict)
    linear,        ///< g(x) = c (1 - x) (Lukasiewicz norm; non-strict)
    custom,
  };

  static Generator negative_log(double scale = 1.0);
  static Generator linear(double scale = 1.0);

  /// Wraps a user supplied g. Throws ConfigError if g(1) != 0, if g is not
  /// strictly decreasing on a 1001-point sample of [0,1], or if the
  /// strictness flag contradicts the value of g(0).
  static Generator custom(Fn g, bool strict, std::string name = "generic");

  double operator()(double x) const;
  double at_zero() const noexcept { return strict_ ? kUnboundedGenerator : at_zero_; }
  double pseudo_inverse(double y) const;

  /// c * g generates the same t-norm for every c > 0.
  Generator scaled(double c) const;

  bool strict() const noexcept { return strict_; }
  Form form() const noexcept { return form_; }
  double scale() const noexcept { return scale_; }
  const std::string& name() const noexcept { return name_; }

 private:
  Generator(Form form, double scale, bool strict, Fn fn, std::string name);

  Form form_;
  double scale_;
  bool strict_;
  double at_zero_ = 0.0;
  Fn fn_;
  std::string name_;
};

/// Selects a t-norm. Archimedean kinds carry an additive generator; the
/// minimum norm carries none.
class TNorm {
 public:
  enum class Family { product, lukasiewicz, minimum, power, generic };

  static TNorm product();
  static TNorm lukasiewicz();
  static TNorm minimum();
  /// Strict norm with multiplicative generator h(x) = x^a, i.e. additive
  /// generator g(x) = -a ln x. As a t-norm this is the product for every
  /// a > 0; the exponent matters for the induced conorm, negation and the
  /// estimator indices.
  static TNorm power(double exponent);
  static TNorm generic(Generator g);

  /// Parses "product" | "lukasiewicz" | "minimum" | "power:<a>".
  static TNorm parse(std::string_view spec);

  Family family() const noexcept { return family_; }
  bool archimedean() const noexcept { return generator_.has_value(); }
  bool strict() const noexcept { return generator_ && generator_->strict(); }

  /// Throws ConfigError for the minimum norm.
  const Generator& generator() const;

  /// Config-string form; parse(name()) reproduces built-in kinds.
  std::string name() const;

 private:
  TNorm(Family family, std::optional<Generator> g);

  Family family_;
  std::optional<Generator> generator_;
};

/// n-ary t-norm. Archimedean kinds fold in generator space:
/// g^[-1](sum g(x_i)). Throws DomainError for an empty list or a value
/// outside [0,1].
double tnorm_eval(const TNorm& kind, std::span<const double> xs);
double tnorm_eval(const TNorm& kind, double x, double y);

/// n-ary t-conorm with neutral element 0. Strict kinds use the conorm of
/// their normal triple, S = h^[-1](min(1, sum h(x_i))) with h = exp(-g);
/// non-strict Archimedean kinds use the De Morgan dual 1 - T(1 - x, ...);
/// the minimum norm pairs with max.
double tconorm_eval(const TNorm& kind, std::span<const double> xs);
double tconorm_eval(const TNorm& kind, double x, double y);

/// Continuous normal triple (S, T, n) generated by a continuous strictly
/// increasing h with h(0) = 0 and h(1) = 1:
///   S(x, y) = h^[-1](h(x) + h(y)),  T(x, y) = h^-1(h(x) h(y)),
///   n(x) = h^-1(1 - h(x)).
class NormalTriple {
 public:
  using Fn = std::function<double(double)>;

  /// h(x) = x^a. a = 1 gives the product norm with n(x) = 1 - x.
  static NormalTriple power(double exponent);

  /// Validates h on a 1001-point sample and throws ConfigError when it is
  /// not normalized or not strictly increasing.
  static NormalTriple from_generator(Fn h, std::string name = "generic");

  /// The triple whose t-norm is `kind`. Throws ConfigError unless the kind
  /// is strict Archimedean.
  static NormalTriple from_tnorm(const TNorm& kind);

  double h(double x) const { return h_(x); }
  double h_inverse(double t) const;

  double conorm(double x, double y) const;
  double tnorm(double x, double y) const;
  double negation(double x) const;

  const std::string& name() const noexcept { return name_; }

 private:
  NormalTriple(Fn h, Fn h_inv, std::string name);

  Fn h_;
  Fn h_inv_;
  std::string name_;
};

/// make_normal_triple(h): alias for NormalTriple::from_generator.
NormalTriple make_normal_triple(NormalTriple::Fn h);

/// Necessity-like measure of the anti-event: n(pi).
double necessity_from_possibility(const NormalTriple& triple, double pi);

/// g^[-1](y).
double pseudo_inverse_eval(const Generator& gen, double y);

}  // namespace fuzzy

#endif  // FUZZY_TNORM_HPP
