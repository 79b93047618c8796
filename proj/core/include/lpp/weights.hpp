#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "lpp/rng.hpp"

namespace lpp {

// Value `high` with probability `p_high`, otherwise `low`; 0 < low < high.
struct TwoPoint {
  double low;
  double high;
  double p_high;

  friend bool operator==(const TwoPoint&, const TwoPoint&) = default;
};

// Continuous uniform law on [lo, hi], 0 <= lo < hi.
struct Uniform {
  double lo;
  double hi;

  friend bool operator==(const Uniform&, const Uniform&) = default;
};

struct Exponential {
  double rate;

  friend bool operator==(const Exponential&, const Exponential&) = default;
};

// P(X > x) = (x / scale)^(-alpha) for x >= scale.
struct Pareto {
  double alpha;
  double scale = 1.0;

  friend bool operator==(const Pareto&, const Pareto&) = default;
};

enum class WeightKind { kTwoPoint, kUniform, kExponential, kPareto };

// A real number or +infinity. Infinity compares above every finite value.
class ExtendedReal {
 public:
  static ExtendedReal finite(double value);
  static ExtendedReal infinity() { return ExtendedReal(); }

  bool is_finite() const { return finite_; }
  // Throws PreconditionError on the infinite variant.
  double value() const;

  std::string to_string() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;
  friend std::partial_ordering operator<=>(const ExtendedReal& a,
                                           const ExtendedReal& b);

 private:
  ExtendedReal() = default;

  bool finite_ = false;
  double value_ = 0.0;
};

// Law of a single edge passage time. Immutable once constructed; the factory
// functions validate parameters and throw PreconditionError.
class WeightDistribution {
 public:
  using Law = std::variant<TwoPoint, Uniform, Exponential, Pareto>;

  static WeightDistribution two_point(double low, double high, double p_high);
  static WeightDistribution uniform(double lo, double hi);
  static WeightDistribution exponential(double rate);
  static WeightDistribution pareto(double alpha, double scale = 1.0);

  // Parses "twopoint:a=1,b=2,p0=0.05", "uniform:lo=0,hi=1", "exp:lambda=1",
  // "pareto:alpha=2,scale=1". Case-insensitive; unknown or repeated keys and
  // missing required keys throw ParseError.
  static WeightDistribution parse(std::string_view text);

  // Canonical law string; parse(to_string()) reproduces the law exactly.
  std::string to_string() const;

  WeightKind kind() const;
  const Law& law() const { return law_; }
  bool bounded() const;

  friend bool operator==(const WeightDistribution&,
                         const WeightDistribution&) = default;

 private:
  explicit WeightDistribution(Law law) : law_(law) {}

  Law law_;
};

// H(x) = P(X > x).
double tail(const WeightDistribution& dist, double x);

ExtendedReal essential_supremum(const WeightDistribution& dist);

// Inverse-transform map from a uniform draw u in (0, 1) to a variate.
double quantile_from_uniform(const WeightDistribution& dist, double u);

double sample(const WeightDistribution& dist, Rng& rng);

// The x with tail(x) = ln n / n. Unbounded laws only, n >= 3.
double f_of_n(const WeightDistribution& dist, std::int64_t n);

// Canonical g(n) with n^2 tail(g(n)) -> 0:
//   Exponential(rate): (2 ln n + ln ln n) / rate
//   Pareto(alpha, s):  s n^(2/alpha) (ln ln n)^(1/alpha)
// Unbounded laws only, n >= 16.
double g_of_n(const WeightDistribution& dist, std::int64_t n);

}  // namespace lpp
