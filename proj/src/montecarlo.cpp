#include "cftv/montecarlo.hpp"

#include <limits>

namespace cftv {

void MeanAccumulator::merge(const MeanAccumulator& o) {
  if (o.n == 0) return;
  if (n == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n);
  const double nb = static_cast<double>(o.n);
  const double nt = na + nb;
  const double dr = o.mean_re - mean_re;
  const double di = o.mean_im - mean_im;
  mean_re += dr * nb / nt;
  mean_im += di * nb / nt;
  m2_re += o.m2_re + dr * dr * na * nb / nt;
  m2_im += o.m2_im + di * di * na * nb / nt;
  n += o.n;
}

Estimate MeanAccumulator::finish(std::uint64_t seed) const {
  Estimate e;
  e.mean = {mean_re, mean_im};
  e.n = n;
  e.seed = seed;
  if (n > 1) {
    const double nn = static_cast<double>(n);
    e.se_re = std::sqrt(std::max(m2_re, 0.0) / (nn - 1.0) / nn);
    e.se_im = std::sqrt(std::max(m2_im, 0.0) / (nn - 1.0) / nn);
  }
  return e;
}

namespace {

double part_z(double diff, double se, double floor) { return std::fabs(diff) / std::max(se, floor); }

Comparison statistical(double z, double threshold) {
  Comparison c;
  c.kind = ComparisonKind::statistical;
  c.z = z;
  c.threshold = threshold;
  c.pass = z <= threshold;
  return c;
}

}  // namespace

Comparison compare(const Estimate& est, cplx reference, double z_threshold, double stderr_floor) {
  const cplx d = est.mean - reference;
  return statistical(std::max(part_z(d.real(), est.se_re, stderr_floor),
                              part_z(d.imag(), est.se_im, stderr_floor)),
                     z_threshold);
}

Comparison compare(const Estimate& a, const Estimate& b, double z_threshold, double stderr_floor) {
  const cplx d = a.mean - b.mean;
  return statistical(std::max(part_z(d.real(), std::hypot(a.se_re, b.se_re), stderr_floor),
                              part_z(d.imag(), std::hypot(a.se_im, b.se_im), stderr_floor)),
                     z_threshold);
}

Comparison compare_tolerance(cplx value, cplx reference, double tol) {
  Comparison c;
  c.kind = ComparisonKind::tolerance;
  c.threshold = 1.0;
  const double residual = std::abs(value - reference);
  c.z = residual / tol;
  c.pass = residual <= tol;
  return c;
}

Comparison compare_exact(bool equal) {
  Comparison c;
  c.kind = ComparisonKind::exact;
  c.threshold = 0.0;
  c.z = equal ? 0.0 : std::numeric_limits<double>::infinity();
  c.pass = equal;
  return c;
}

Comparison worst(const Comparison& a, const Comparison& b) {
  if (a.pass != b.pass) return a.pass ? b : a;
  auto ratio = [](const Comparison& c) {
    if (c.threshold > 0.0) return c.z / c.threshold;
    return c.z;
  };
  return ratio(b) > ratio(a) ? b : a;
}

}  // namespace cftv
