#include "cftv/symmetric.hpp"

namespace cftv {

Rational weyl_dimension(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("weyl_dimension: negative n");
  const int m = lambda.length();
  if (m > n) return Rational(0);
  Rational dim(1);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) dim *= lambda[i] - i - lambda[j] + j;
  for (int j = 1; j <= m; ++j)
    dim *= factorial(n + lambda[j] - j) / (factorial(m + lambda[j] - j) * factorial(n - j));
  return dim;
}

Rational exp_coeff(const Partition& lambda) {
  const int l = lambda.length();
  Rational c(1);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) c *= lambda[i] - i - lambda[j] + j;
  for (int j = 1; j <= l; ++j) c /= factorial(l + lambda[j] - j);
  return c;
}

}  // namespace cftv
