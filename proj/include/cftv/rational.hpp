#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace cftv {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

Rational factorial(int n);

/// Text form "num/den"; integers print without a denominator.
std::string to_string(const Rational& r);

/// Accepts "num/den", a plain integer, or a terminating decimal such as "2.5".
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace cftv
