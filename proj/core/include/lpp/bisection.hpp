#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

#include "lpp/error.hpp"

namespace lpp {

// Root of a monotone function with f(lo) < 0 < f(hi). Stops once the bracket
// is no wider than `tolerance` or stops shrinking in floating point. The
// observer, when set, sees (lo, hi) after every halving.
template <class F>
double bisect(F&& f, double lo, double hi, double tolerance,
              const std::function<void(double, double)>& observer = {}) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!(f_lo < 0.0) || !(f_hi > 0.0)) {
    throw PreconditionError("bisect: no sign change on the bracket");
  }
  for (std::size_t iter = 0; iter < 2000 && hi - lo > tolerance; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (observer) observer(lo, hi);
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace lpp
