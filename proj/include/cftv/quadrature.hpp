#pragma once

#include <functional>
#include <limits>

namespace cftv {

/// [lo, hi]; hi may be +infinity, in which case the integral is mapped onto
/// [0, 1) by x = lo + y / (1 - y).
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod integration to an absolute error target.  Throws
/// std::runtime_error carrying the achieved error when the subdivision budget
/// runs out first.
QuadratureResult integrate(const std::function<double(double)>& f, Interval domain,
                           double abs_tol = 1e-10, unsigned max_depth = 18);

/// Nested 2-D integration over a rectangle (either side may be half-infinite).
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, Interval x_domain,
                              Interval y_domain, double abs_tol = 1e-8, unsigned max_depth = 15);

}  // namespace cftv
