#include "lpp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lpp/bisection.hpp"
#include "lpp/error.hpp"

namespace lpp {
namespace {

constexpr int kGridPoints = 200;

double finite_mu(const WeightDistribution& dist, const char* what) {
  const ExtendedReal mu = essential_supremum(dist);
  if (!mu.is_finite()) {
    throw PreconditionError(std::string(what) + " needs mu < infinity");
  }
  return mu.value();
}

std::vector<double> log_spaced(double lo, double hi, int count,
                               bool include_hi) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  const double log_lo = std::log(lo);
  const double span = std::log(hi) - log_lo;
  const double denom = include_hi ? count - 1 : count;
  for (int i = 0; i < count; ++i) out.push_back(std::exp(log_lo + span * i / denom));
  return out;
}

}  // namespace

DeviationConstants deviation_constants(const WeightDistribution& dist,
                                       double x, double epsilon) {
  const double mu = finite_mu(dist, "deviation_constants");
  if (!(x > 0.0 && x < mu)) {
    throw PreconditionError("deviation_constants needs 0 < x < mu");
  }
  const double p = tail(dist, mu - x);
  if (!(p < 1.0)) {
    throw PreconditionError("deviation_constants needs H(mu - x) < 1");
  }
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw PreconditionError("deviation_constants needs 0 < epsilon < 1/2");
  }
  const double x_prime = mu - (mu - x) / (1.0 - 2.0 * epsilon);
  if (!(x_prime > 0.0)) {
    throw PreconditionError("deviation_constants: epsilon too large, x' <= 0");
  }
  DeviationConstants c{};
  c.mu = mu;
  c.x = x;
  c.p = p;
  c.epsilon = epsilon;
  c.x_prime = x_prime;
  c.big_c1 = std::pow(2.0 * std::numbers::e / epsilon, epsilon);
  c.big_c2 = epsilon * epsilon * tail(dist, mu - x_prime) / 5.0;
  c.small_c1 = 1.0 / std::sqrt(1.0 - p);
  c.small_c2 = 0.5 * std::log(1.0 / (1.0 - p));
  return c;
}

double log_upper_bound(const DeviationConstants& c, double n) {
  return n * std::log(c.big_c1) - c.big_c2 * n * n;
}

double log_lower_bound(const DeviationConstants& c, double n) {
  return n * std::log(c.small_c1) - c.small_c2 * n * n;
}

std::vector<double> epsilon_grid(double x, double mu) {
  // x' > 0  <=>  epsilon < x / (2 mu).
  const double eps_max = std::min(x / (2.0 * mu), 0.5);
  const double eps_min = std::min(1e-4, 1e-2 * eps_max);
  if (!(eps_max > eps_min)) return {};
  std::vector<double> grid = log_spaced(eps_min, eps_max, kGridPoints, false);
  for (double decade : {1e-4, 1e-3, 1e-2, 1e-1}) {
    if (decade >= eps_min && decade < eps_max) grid.push_back(decade);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double optimize_epsilon(const WeightDistribution& dist, double x,
                        std::int64_t n) {
  const double mu = finite_mu(dist, "optimize_epsilon");
  const std::vector<double> grid = epsilon_grid(x, mu);
  if (grid.empty()) throw PreconditionError("optimize_epsilon: empty grid");
  const auto nd = static_cast<double>(n);
  double best_eps = grid.front();
  double best = std::numeric_limits<double>::infinity();
  for (double eps : grid) {
    const double value = log_upper_bound(deviation_constants(dist, x, eps), nd);
    if (value < best) {
      best = value;
      best_eps = eps;
    }
  }
  return best_eps;
}

double xbar(const WeightDistribution& dist, std::int64_t n) {
  const double mu = finite_mu(dist, "xbar");
  if (n < 3) throw PreconditionError("xbar needs n >= 3");
  if (dist.kind() == WeightKind::kTwoPoint) {
    throw PreconditionError("xbar needs H left-continuous at mu (no atom)");
  }
  const auto nd = static_cast<double>(n);
  const double target = std::log(nd) / nd;
  auto phi = [&](double x) { return x * tail(dist, mu - x / 2.0) - target; };
  if (!(phi(mu) > 0.0)) {
    throw PreconditionError("xbar: no sign change on (0, mu]");
  }
  const double root = bisect(phi, 0.0, mu, 0.0);
  if (root < target) {
    throw std::logic_error("xbar: root below ln n / n");
  }
  return root;
}

double variance_upper_bound(const WeightDistribution& dist, std::int64_t n) {
  const double mu = finite_mu(dist, "variance_upper_bound");
  const auto nd = static_cast<double>(n);
  double best = std::numeric_limits<double>::infinity();
  for (double x : log_spaced(1e-6 * mu, 0.5 * mu, kGridPoints, true)) {
    if (!(tail(dist, mu - x) < 1.0)) continue;
    if (epsilon_grid(x, mu).empty()) continue;
    const double eps = optimize_epsilon(dist, x, n);
    const DeviationConstants c = deviation_constants(dist, x, eps);
    const double prob = std::min(1.0, std::exp(log_upper_bound(c, nd)));
    best = std::min(best, 2.0 * x + 2.0 * mu * mu * prob);
  }
  if (!std::isfinite(best)) {
    throw PreconditionError("variance_upper_bound: no feasible x");
  }
  return best;
}

double aks_reference_length(double theta, std::int64_t n) {
  if (n < 3) throw PreconditionError("aks_reference_length needs n >= 3");
  const auto nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  const double upper = ln_n - 3.0 * std::log(ln_n);
  if (!(theta > 0.0 && theta < upper)) {
    throw PreconditionError("aks_reference_length needs 0 < theta < ln n - 3 ln ln n");
  }
  return std::max(0.0, (1.0 - 4.0 * std::numbers::ln2 / theta) * nd);
}

}  // namespace lpp
