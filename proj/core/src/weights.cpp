#include "lpp/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpp/error.hpp"

namespace lpp {
namespace {

// Shortest text that parses back to the same double.
std::string format_double(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view text, std::string_view key) {
  text = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("invalid number for '" + std::string(key) + "': '" +
                     std::string(text) + "'");
  }
  return value;
}

class KeyValues {
 public:
  KeyValues(std::string_view kind, std::string_view body) : kind_(kind) {
    body = trim(body);
    if (body.empty()) return;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      if (comma == std::string_view::npos) comma = body.size();
      std::string_view item = trim(body.substr(start, comma - start));
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected key=value in distribution '" + kind_ +
                         "', got '" + std::string(item) + "'");
      }
      std::string key = lower(trim(item.substr(0, eq)));
      if (values_.count(key) != 0) {
        throw ParseError("repeated key '" + key + "' in distribution '" +
                         kind_ + "'");
      }
      values_[key] = parse_number(item.substr(eq + 1), key);
      start = comma + 1;
    }
  }

  double take(const std::string& key, std::optional<double> fallback = {}) {
    auto it = values_.find(key);
    if (it == values_.end()) {
      if (fallback) return *fallback;
      throw ParseError("missing key '" + key + "' in distribution '" + kind_ +
                       "'");
    }
    double v = it->second;
    values_.erase(it);
    return v;
  }

  void expect_consumed() const {
    if (!values_.empty()) {
      throw ParseError("unknown key '" + values_.begin()->first +
                       "' in distribution '" + kind_ + "'");
    }
  }

 private:
  std::string kind_;
  std::map<std::string, double> values_;
};

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_unbounded(const WeightDistribution& dist, const char* what) {
  if (dist.bounded()) {
    throw PreconditionError(std::string(what) + " undefined: mu < infinity");
  }
}

}  // namespace

ExtendedReal ExtendedReal::finite(double value) {
  if (!std::isfinite(value)) {
    throw PreconditionError("ExtendedReal::finite needs a finite value");
  }
  ExtendedReal r;
  r.finite_ = true;
  r.value_ = value;
  return r;
}

double ExtendedReal::value() const {
  if (!finite_) throw PreconditionError("value() of infinite ExtendedReal");
  return value_;
}

std::string ExtendedReal::to_string() const {
  return finite_ ? format_double(value_) : "inf";
}

std::partial_ordering operator<=>(const ExtendedReal& a,
                                  const ExtendedReal& b) {
  if (!a.finite_ || !b.finite_) {
    return static_cast<int>(!a.finite_) <=> static_cast<int>(!b.finite_);
  }
  return a.value_ <=> b.value_;
}

WeightDistribution WeightDistribution::two_point(double low, double high,
                                                 double p_high) {
  if (!(low > 0.0) || !(high > low) || !std::isfinite(high) ||
      !(p_high > 0.0 && p_high < 1.0)) {
    throw PreconditionError(
        "twopoint needs 0 < a < b < inf and 0 < p0 < 1");
  }
  return WeightDistribution(TwoPoint{low, high, p_high});
}

WeightDistribution WeightDistribution::uniform(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw PreconditionError("uniform needs 0 <= lo < hi < inf");
  }
  return WeightDistribution(Uniform{lo, hi});
}

WeightDistribution WeightDistribution::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw PreconditionError("exp needs 0 < lambda < inf");
  }
  return WeightDistribution(Exponential{rate});
}

WeightDistribution WeightDistribution::pareto(double alpha, double scale) {
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !(scale > 0.0) ||
      !std::isfinite(scale)) {
    throw PreconditionError("pareto needs alpha > 0 and scale > 0");
  }
  return WeightDistribution(Pareto{alpha, scale});
}

WeightDistribution WeightDistribution::parse(std::string_view text) {
  text = trim(text);
  std::size_t colon = text.find(':');
  std::string kind = lower(trim(text.substr(0, colon)));
  std::string_view body =
      colon == std::string_view::npos ? std::string_view{}
                                      : text.substr(colon + 1);
  KeyValues kv(kind, body);
  auto build = [&]() -> WeightDistribution {
    if (kind == "twopoint") {
      double a = kv.take("a");
      double b = kv.take("b");
      double p0 = kv.take("p0");
      kv.expect_consumed();
      return two_point(a, b, p0);
    }
    if (kind == "uniform") {
      double lo = kv.take("lo");
      double hi = kv.take("hi");
      kv.expect_consumed();
      return uniform(lo, hi);
    }
    if (kind == "exp" || kind == "exponential") {
      double rate = kv.take("lambda");
      kv.expect_consumed();
      return exponential(rate);
    }
    if (kind == "pareto") {
      double alpha = kv.take("alpha");
      double scale = kv.take("scale", 1.0);
      kv.expect_consumed();
      return pareto(alpha, scale);
    }
    throw ParseError("unknown distribution kind '" + kind + "'");
  };
  try {
    return build();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid parameters in '") +
                     std::string(text) + "': " + e.what());
  }
}

std::string WeightDistribution::to_string() const {
  return std::visit(
      Overloaded{
          [](const TwoPoint& d) {
            return "twopoint:a=" + format_double(d.low) +
                   ",b=" + format_double(d.high) +
                   ",p0=" + format_double(d.p_high);
          },
          [](const Uniform& d) {
            return "uniform:lo=" + format_double(d.lo) +
                   ",hi=" + format_double(d.hi);
          },
          [](const Exponential& d) {
            return "exp:lambda=" + format_double(d.rate);
          },
          [](const Pareto& d) {
            return "pareto:alpha=" + format_double(d.alpha) +
                   ",scale=" + format_double(d.scale);
          }},
      law_);
}

WeightKind WeightDistribution::kind() const {
  return static_cast<WeightKind>(law_.index());
}

bool WeightDistribution::bounded() const {
  return kind() == WeightKind::kTwoPoint || kind() == WeightKind::kUniform;
}

double tail(const WeightDistribution& dist, double x) {
  return std::visit(
      Overloaded{
          [x](const TwoPoint& d) {
            if (x < d.low) return 1.0;
            if (x < d.high) return d.p_high;
            return 0.0;
          },
          [x](const Uniform& d) {
            if (x < d.lo) return 1.0;
            if (x >= d.hi) return 0.0;
            return (d.hi - x) / (d.hi - d.lo);
          },
          [x](const Exponential& d) {
            return x < 0.0 ? 1.0 : std::exp(-d.rate * x);
          },
          [x](const Pareto& d) {
            return x < d.scale ? 1.0 : std::pow(x / d.scale, -d.alpha);
          }},
      dist.law());
}

ExtendedReal essential_supremum(const WeightDistribution& dist) {
  return std::visit(
      Overloaded{
          [](const TwoPoint& d) { return ExtendedReal::finite(d.high); },
          [](const Uniform& d) { return ExtendedReal::finite(d.hi); },
          [](const Exponential&) { return ExtendedReal::infinity(); },
          [](const Pareto&) { return ExtendedReal::infinity(); }},
      dist.law());
}

double quantile_from_uniform(const WeightDistribution& dist, double u) {
  return std::visit(
      Overloaded{
          [u](const TwoPoint& d) { return u < d.p_high ? d.high : d.low; },
          [u](const Uniform& d) { return d.lo + (d.hi - d.lo) * u; },
          [u](const Exponential& d) { return -std::log(u) / d.rate; },
          [u](const Pareto& d) {
            return d.scale * std::pow(u, -1.0 / d.alpha);
          }},
      dist.law());
}

double sample(const WeightDistribution& dist, Rng& rng) {
  return quantile_from_uniform(dist, uniform_open(rng));
}

double f_of_n(const WeightDistribution& dist, std::int64_t n) {
  require_unbounded(dist, "f(n)");
  if (n < 3) throw PreconditionError("f(n) needs n >= 3");
  const double ln_n = std::log(static_cast<double>(n));
  const double target = ln_n / static_cast<double>(n);
  if (const auto* e = std::get_if<Exponential>(&dist.law())) {
    return -std::log(target) / e->rate;
  }
  const auto& p = std::get<Pareto>(dist.law());
  return p.scale * std::pow(target, -1.0 / p.alpha);
}

double g_of_n(const WeightDistribution& dist, std::int64_t n) {
  require_unbounded(dist, "g(n)");
  if (n < 16) throw PreconditionError("g(n) needs n >= 16");
  const double nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  const double ln_ln_n = std::log(ln_n);
  if (const auto* e = std::get_if<Exponential>(&dist.law())) {
    return (2.0 * ln_n + ln_ln_n) / e->rate;
  }
  const auto& p = std::get<Pareto>(dist.law());
  return p.scale * std::pow(nd, 2.0 / p.alpha) *
         std::pow(ln_ln_n, 1.0 / p.alpha);
}

}  // namespace lpp
