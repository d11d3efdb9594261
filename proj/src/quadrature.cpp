#include "cftv/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cftv {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

QuadratureResult finite(const std::function<double(double)>& f, double a, double b, double abs_tol,
                        unsigned max_depth) {
  // Boost terminates on a relative target; a cheap first pass estimates the
  // L1 norm so the relative target can be set to meet abs_tol.
  double error = 0.0;
  double l1 = 0.0;
  Rule::integrate(f, a, b, 3, 1e-6, &error, &l1);
  const double rel = l1 > 0.0 ? abs_tol / l1 : abs_tol;
  double value = Rule::integrate(f, a, b, max_depth, rel, &error, &l1);
  if (!std::isfinite(value) || error > abs_tol) {
    std::ostringstream msg;
    msg << "quadrature did not converge: achieved error " << error << " against target " << abs_tol;
    throw std::runtime_error(msg.str());
  }
  return {value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, Interval domain, double abs_tol,
                           unsigned max_depth) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be positive");
  if (std::isinf(domain.hi)) {
    const double lo = domain.lo;
    auto mapped = [&](double y) {
      if (y >= 1.0) return 0.0;
      const double s = 1.0 - y;
      return f(lo + y / s) / (s * s);
    };
    return finite(mapped, 0.0, 1.0, abs_tol, max_depth);
  }
  return finite(f, domain.lo, domain.hi, abs_tol, max_depth);
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, Interval x_domain,
                              Interval y_domain, double abs_tol, unsigned max_depth) {
  const double inner_tol = abs_tol / 4.0;
  double worst_inner = 0.0;
  auto outer = [&](double x) {
    auto r = integrate([&](double y) { return f(x, y); }, y_domain, inner_tol, max_depth);
    worst_inner = std::max(worst_inner, r.error);
    return r.value;
  };
  auto result = integrate(outer, x_domain, abs_tol / 2.0, max_depth);
  result.error += worst_inner * (std::isinf(x_domain.hi) ? 1.0 : (x_domain.hi - x_domain.lo));
  return result;
}

}  // namespace cftv
