#pragma once

namespace cftv {

/// Bessel function of the first kind, order zero.  Absolute error about 1e-13
/// on [0, 50]; even in x.
double bessel_j0(double x);

/// Neumann function of order zero; x > 0.
double bessel_y0(double x);

/// Modified Bessel function of the first kind, order zero.  Power series, meant
/// for |x| <= 30.
double bessel_i0(double x);

/// log |Gamma(x)|.
double log_gamma(double x);

enum class SpecialKind { J0, Y0, LogGamma };

/// Dispatching entry point used by the CLI and reports.
double special(SpecialKind kind, double x);

}  // namespace cftv
