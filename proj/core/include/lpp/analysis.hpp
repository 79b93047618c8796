#pragma once

#include <cstdint>
#include <vector>

#include "lpp/weights.hpp"

namespace lpp {

// Constants of the two-sided bound
//   c1^n e^{-c2 n^2} <= P(W_n / n <= mu - x) <= C1^n e^{-C2 n^2}
// for a bounded law.
struct DeviationConstants {
  double mu;
  double x;
  double p;           // H(mu - x)
  double epsilon;
  double x_prime;     // mu - (mu - x) / (1 - 2 epsilon)
  double big_c1;      // (2e / epsilon)^epsilon
  double big_c2;      // epsilon^2 H(mu - x') / 5
  double small_c1;    // (1 - p)^(-1/2)
  double small_c2;    // ln(1 / (1 - p)) / 2
};

// Throws PreconditionError for unbounded laws, x outside (0, mu), p >= 1,
// epsilon outside (0, 1/2) or x' <= 0.
DeviationConstants deviation_constants(const WeightDistribution& dist,
                                       double x, double epsilon);

// n ln C1 - C2 n^2, the log of the upper bound.
double log_upper_bound(const DeviationConstants& c, double n);
// n ln c1 - c2 n^2, the log of the lower bound; equals
// (n(n-1)/2) ln(1 - p).
double log_lower_bound(const DeviationConstants& c, double n);

// Feasible epsilons: 200 log-spaced points on [lo, x / (2 mu)) with
// lo = min(1e-4, x / (200 mu)), plus the decades 1e-4, 1e-3, 1e-2, 1e-1 that
// fall inside, ascending.
std::vector<double> epsilon_grid(double x, double mu);

// Grid minimizer of log_upper_bound over epsilon_grid.
double optimize_epsilon(const WeightDistribution& dist, double x,
                        std::int64_t n);

// Root of x H(mu - x/2) = ln n / n on (0, mu] by bisection. Needs a bounded
// law without an atom at mu and n >= 3.
double xbar(const WeightDistribution& dist, std::int64_t n);

// Upper bound on Var(W_n / n):
//   min_x 2x + 2 mu^2 min(1, C1(x)^n e^{-C2(x) n^2})
// over 200 log-spaced x in [1e-6 mu, mu / 2], epsilon optimized per x.
double variance_upper_bound(const WeightDistribution& dist, std::int64_t n);

// (1 - 4 ln 2 / theta) n clamped at 0, for 0 < theta < ln n - 3 ln ln n.
double aks_reference_length(double theta, std::int64_t n);

}  // namespace lpp
