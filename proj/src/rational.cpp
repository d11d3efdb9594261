#include "cftv/rational.hpp"

#include <stdexcept>
#include <vector>

namespace cftv {

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  static thread_local std::vector<Rational> cache{Rational(1)};
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<long>(cache.size()));
  return cache[static_cast<std::size_t>(n)];
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  try {
    auto slash = text.find('/');
    auto dot = text.find('.');
    if (dot != std::string_view::npos && slash == std::string_view::npos) {
      // Terminating decimal, read exactly.
      std::string digits(text.substr(0, dot));
      const std::string fraction(text.substr(dot + 1));
      if (fraction.empty() || fraction.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      if (digits.empty() || digits == "-" || digits == "+") digits += "0";
      const bool negative = digits[0] == '-';
      const BigInt whole(digits);
      BigInt scale(1);
      for (std::size_t i = 0; i < fraction.size(); ++i) scale *= 10;
      const BigInt frac(fraction);
      return Rational(negative ? whole * scale - frac : whole * scale + frac, scale);
    }
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace cftv
