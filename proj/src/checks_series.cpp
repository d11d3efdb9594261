#include "check_support.hpp"

#include "cftv/ensembles.hpp"
#include "cftv/presets.hpp"
#include "cftv/symmetric.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace cftv {

namespace {

using detail::require;

constexpr int kExactDegree = 8;
constexpr int kCoefficientWeight = 6;

std::vector<double> as_doubles(const std::vector<Rational>& x) {
  std::vector<double> out;
  for (const auto& v : x) out.push_back(to_double(v));
  return out;
}

// Taylor coefficients of (1 - z)^{-a}: (a)_r / r!.
template <class S>
std::vector<S> rising_coefficients(const S& a, int r_max) {
  std::vector<S> c{S(1)};
  for (int r = 1; r <= r_max; ++r) c.push_back(c.back() * (a + S(r - 1)) / S(r));
  return c;
}

// Taylor coefficients of (1 + z)^a: a(a-1)...(a-r+1) / r!.
template <class S>
std::vector<S> binomial_coefficients(const S& a, int r_max) {
  std::vector<S> c{S(1)};
  for (int r = 1; r <= r_max; ++r) c.push_back(c.back() * (a - S(r - 1)) / S(r));
  return c;
}

std::vector<Rational> inverse_factorials(int r_max) {
  std::vector<Rational> c;
  for (int r = 0; r <= r_max; ++r) c.push_back(Rational(1) / factorial(r));
  return c;
}

// Degree-k parts of prod_j g(x_j) with g(z) = sum alpha_r z^r, k = 0..k_max,
// by multiplying the one-variable series term by term.
std::vector<Rational> product_by_degree(const std::vector<Rational>& alpha, const std::vector<Rational>& x, int k_max) {
  std::vector<Rational> acc(static_cast<std::size_t>(k_max) + 1, Rational(0));
  acc[0] = 1;
  for (const auto& xj : x) {
    std::vector<Rational> next(acc.size(), Rational(0));
    Rational power(1);
    for (int r = 0; r <= k_max; ++r) {
      for (int k = 0; k + r <= k_max; ++k)
        next[static_cast<std::size_t>(k + r)] += acc[static_cast<std::size_t>(k)] * alpha[static_cast<std::size_t>(r)] * power;
      power *= xj;
    }
    acc = std::move(next);
  }
  return acc;
}

// Sum over |lambda| <= K, length <= m of coeff(lambda) s_lambda(x).
template <class S>
S schur_series(const std::function<S(const Partition&)>& coeff, const std::vector<S>& x, int K) {
  const int m = static_cast<int>(x.size());
  const auto h = complete_from_spectrum(x, K + m);
  S total(0);
  for (const auto& lambda : enumerate_partitions(K, m)) total += coeff(lambda) * schur_from_complete<S>(lambda, h);
  return total;
}

// Degree-k part of the same sum, exactly.
Rational schur_degree(const std::function<Rational(const Partition&)>& coeff, const std::vector<Rational>& x, int k) {
  Rational total(0);
  for (const auto& lambda : partitions_of(k, static_cast<int>(x.size()))) total += coeff(lambda) * schur_eval(lambda, x);
  return total;
}

// sum_{k > K} C(k+M-1, M-1) r^k.
double geometric_tail(int K, int M, double r) {
  double term = 1.0;
  double tail = 0.0;
  for (int k = 1; k < 100000; ++k) {
    term *= r * (k + M - 1.0) / k;
    if (k > K) {
      tail += term;
      if (term < 1e-18 * tail) break;
    }
  }
  return tail;
}

std::string short_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

class Collector {
 public:
  explicit Collector(std::vector<CheckResult>& parts) : parts_(parts) {}

  // Counts exact mismatches of one family of identities; reports the first.
  void exact_family(const std::string& name, const std::function<void(const std::function<void(const std::string&, const Rational&, const Rational&)>&)>& body) {
    int mismatches = 0;
    std::string first;
    Rational lhs(0), rhs(0);
    int compared = 0;
    body([&](const std::string& where, const Rational& a, const Rational& b) {
      ++compared;
      if (a != b && mismatches++ == 0) {
        first = where;
        lhs = a;
        rhs = b;
      }
    });
    auto r = detail::exactly_equal(name, lhs, rhs);
    r.comparison = compare_exact(mismatches == 0);
    r.notes = std::to_string(compared) + " identities compared";
    if (mismatches) r.notes += ", " + std::to_string(mismatches) + " mismatches, first at " + first;
    parts_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& parts_;
};

}  // namespace

CheckResult check_series_expansions(const CheckConfig& config) {
  const int K = config.series_cutoff;
  require(K >= 1 && K <= 60, "check_series_expansions: series cutoff must lie in [1, 60]");
  auto result = detail::make_result("check_series_expansions", "spectral radius <= 0.5",
                                    detail::echo(config, "check_series_expansions", config.N, config.n, config.m));
  const double tol = 1e-8;

  // Spectrum x may be overridden through scalars x1..x4.
  std::vector<Rational> x{Rational(3, 10), Rational(1, 5)};
  if (config.scalars.count("x1")) {
    x.clear();
    for (int j = 1; j <= 4; ++j) {
      auto it = config.scalars.find("x" + std::to_string(j));
      if (it == config.scalars.end()) break;
      require(std::fabs(it->second) <= 0.5, "check_series_expansions: |x" + std::to_string(j) + "| exceeds 0.5");
      x.push_back(Rational(static_cast<long>(std::llround(it->second * 1e6)), 1000000));
    }
  }
  const std::vector<Rational> t{Rational(1, 2), Rational(3, 10)};
  const std::vector<Rational> cx{Rational(2, 5), Rational(1, 5)};
  const std::vector<Rational> hua_exponents{Rational(1, 2), Rational(1), Rational(5, 2), Rational(4)};

  std::vector<CheckResult> parts;
  std::string notes;
  const auto xd = as_doubles(x);
  double x_sum = 0.0, x_max = 0.0;
  for (double v : xd) {
    x_sum += std::fabs(v);
    x_max = std::max(x_max, std::fabs(v));
  }

  // exp(sum x) = sum c_lambda s_lambda(x).
  {
    const double series = schur_series<double>([](const Partition& l) { return to_double(exp_coeff(l)); }, xd, K);
    parts.push_back(detail::within_tolerance("exp: partial sum vs exp(sum x)", series, std::exp(x_sum), tol));
    double tail = 0.0, term = 1.0;
    for (int k = 1; k <= K + 60; ++k) {
      term *= x_sum / k;
      if (k > K) tail += term;
    }
    notes += "exp tail bound " + short_double(tail) + "; ";
  }
  // exp(Tr M) for a 3 x 3 matrix with spectral radius <= 0.5.
  {
    const CMatrix mat = detail::input_matrix(config, "M", 3, 3, 0.5);
    result.config["matrices"]["M"] = detail::matrix_json(mat);
    Eigen::ComplexEigenSolver<CMatrix> eig(mat, false);
    const std::vector<cplx> spectrum(eig.eigenvalues().data(), eig.eigenvalues().data() + 3);
    const cplx series = schur_series<cplx>([](const Partition& l) { return cplx(to_double(exp_coeff(l))); }, spectrum, K);
    parts.push_back(detail::within_tolerance("exp: matrix partial sum vs exp(Tr M)", series, std::exp(mat.trace()), tol));
  }
  // Cauchy: prod (1 - t_i x_j)^{-1} = sum s_lambda(t) s_lambda(x).
  {
    const auto td = as_doubles(t);
    const auto xcd = as_doubles(cx);
    double product = 1.0, r = 0.0;
    for (double a : td)
      for (double b : xcd) {
        product /= 1.0 - a * b;
        r = std::max(r, std::fabs(a * b));
      }
    const double series = schur_series<double>([&](const Partition& l) { return schur_eval(l, td); }, xcd, K);
    parts.push_back(detail::within_tolerance("Cauchy: partial sum vs product", series, product, tol));
    notes += "Cauchy tail bound " + short_double(geometric_tail(K, static_cast<int>(td.size() * xcd.size()), r)) + "; ";
  }
  // Hua: prod (1 - x_j)^{-a} = sum beta s_lambda(1_m) s_lambda(x), and the companion
  // prod (1 + x_j)^a, for m = 2 and m = 3.
  std::vector<std::vector<Rational>> hua_spectra{x};
  if (x.size() < 3) {
    auto wider = x;
    wider.push_back(Rational(1, 10));
    hua_spectra.push_back(wider);
  }
  for (const auto& spectrum : hua_spectra) {
    const int m = static_cast<int>(spectrum.size());
    const auto sd = as_doubles(spectrum);
    double r = 0.0;
    for (double v : sd) r = std::max(r, std::fabs(v));
    for (const auto& a : hua_exponents) {
      const double ad = to_double(a);
      double down = 1.0, up = 1.0;
      for (double v : sd) {
        down *= std::pow(1.0 - v, -ad);
        up *= std::pow(1.0 + v, ad);
      }
      const std::string where = " a=" + to_string(a) + " m=" + std::to_string(m);
      const double s4 = schur_series<double>(
          [&](const Partition& l) { return hua_coeff_bosonic(l, ad, m) * to_double(weyl_dimension(l, m)); }, sd, K);
      parts.push_back(detail::within_tolerance("Hua (1-x)^-a: partial sum vs product" + where, s4, down, tol));
      const double s4a = schur_series<double>(
          [&](const Partition& l) { return hua_coeff_fermionic(l, ad, m) * to_double(weyl_dimension(l, m)); }, sd, K);
      parts.push_back(detail::within_tolerance("Hua (1+x)^a: partial sum vs product" + where, s4a, up, tol));
      // |degree-k part| <= (a)_k-type coefficients of (1 - r)^{-a m}.
      double tail = 0.0, term = 1.0;
      for (int k = 1; k <= K + 400; ++k) {
        term *= r * (ad * m + k - 1.0) / k;
        if (k > K) tail += term;
      }
      notes += "Hua" + where + " tail bound " + short_double(tail) + "; ";
    }
  }

  Collector exact(parts);
  // Degree-wise exact forms of the infinite expansions.
  exact.exact_family("exp: degree-k parts equal (sum x)^k / k!", [&](const auto& cmp) {
    const auto target = product_by_degree(inverse_factorials(kExactDegree), x, kExactDegree);
    for (int k = 0; k <= kExactDegree; ++k)
      cmp("k=" + std::to_string(k), schur_degree([](const Partition& l) { return exp_coeff(l); }, x, k),
          target[static_cast<std::size_t>(k)]);
  });
  exact.exact_family("Cauchy: degree-k parts equal h_k(t_i x_j)", [&](const auto& cmp) {
    std::vector<Rational> pairs;
    for (const auto& a : t)
      for (const auto& b : cx) pairs.push_back(a * b);
    const auto target = product_by_degree(std::vector<Rational>(kExactDegree + 1, Rational(1)), pairs, kExactDegree);
    for (int k = 0; k <= kExactDegree; ++k)
      cmp("k=" + std::to_string(k), schur_degree([&](const Partition& l) { return schur_eval(l, t); }, cx, k),
          target[static_cast<std::size_t>(k)]);
  });
  exact.exact_family("Hua (1-x)^-a: degree-k parts equal the product expansion", [&](const auto& cmp) {
    for (const auto& spectrum : hua_spectra) {
      const int m = static_cast<int>(spectrum.size());
      for (const auto& a : hua_exponents) {
        const auto target = product_by_degree(rising_coefficients(a, kExactDegree), spectrum, kExactDegree);
        for (int k = 0; k <= kExactDegree; ++k)
          cmp("a=" + to_string(a) + " m=" + std::to_string(m) + " k=" + std::to_string(k),
              schur_degree([&](const Partition& l) { return hua_coeff_bosonic(l, a, m) * weyl_dimension(l, m); }, spectrum, k),
              target[static_cast<std::size_t>(k)]);
      }
    }
  });
  // Finite identities.
  exact.exact_family("dual Cauchy: finite sum equals prod (1 + t_i x_j)", [&](const auto& cmp) {
    Rational product(1);
    for (const auto& a : t)
      for (const auto& b : cx) product *= 1 + a * b;
    Rational sum(0);
    const int box = static_cast<int>(t.size() * cx.size());
    for (const auto& l : enumerate_partitions(box, static_cast<int>(t.size())))
      sum += schur_eval(l, t) * schur_eval(conjugate(l), cx);
    cmp("m=n=2", sum, product);
  });
  exact.exact_family("Hua (1+x)^N: finite sum equals the product", [&](const auto& cmp) {
    for (const auto& spectrum : hua_spectra) {
      const int m = static_cast<int>(spectrum.size());
      for (int a : {1, 2, 4}) {
        Rational product(1);
        for (const auto& v : spectrum) {
          Rational f(1);
          for (int i = 0; i < a; ++i) f *= 1 + v;
          product *= f;
        }
        Rational sum(0);
        for (const auto& l : enumerate_partitions(a * m, m))
          sum += hua_coeff_fermionic(l, Rational(a), m) * weyl_dimension(l, m) * schur_eval(l, spectrum);
        cmp("a=" + std::to_string(a) + " m=" + std::to_string(m), sum, product);
      }
    }
  });

  // Coefficients det(alpha_{lambda_k - k + j}) of multiplicative functionals.
  const int r_max = kCoefficientWeight + 4;
  auto over_partitions = [&](const auto& cmp, const auto& expected, const auto& alpha_of) {
    for (int m = 1; m <= 3; ++m)
      for (const auto& l : enumerate_partitions(kCoefficientWeight, m))
        cmp("lambda=(" + l.to_string() + ") m=" + std::to_string(m), multiplicative_expansion_coeff(alpha_of(), l, m),
            expected(l, m));
  };
  exact.exact_family("example exp: det(1/r!) equals c_lambda", [&](const auto& cmp) {
    over_partitions(cmp, [](const Partition& l, int) { return exp_coeff(l); }, [&] { return inverse_factorials(r_max); });
  });
  exact.exact_family("example Cauchy: det(h_r(t)) equals s_lambda(t) by tableaux", [&](const auto& cmp) {
    const auto h = complete_from_spectrum(t, r_max);
    over_partitions(cmp, [&](const Partition& l, int) { return schur_ssyt_oracle(l, t); }, [&] { return h; });
  });
  exact.exact_family("example dual Cauchy: det(e_r(t)) equals s_lambda'(t) by tableaux", [&](const auto& cmp) {
    const auto e = elementary_from_spectrum(t, r_max);
    over_partitions(cmp, [&](const Partition& l, int) { return schur_ssyt_oracle(conjugate(l), t); }, [&] { return e; });
  });
  exact.exact_family("example (1-z)^-a: det(gamma_r(a)) equals beta s_lambda(1_m)", [&](const auto& cmp) {
    for (const auto& a : hua_exponents) {
      auto tagged = [&](const std::string& where, const Rational& p, const Rational& q) { cmp("a=" + to_string(a) + " " + where, p, q); };
      over_partitions(tagged, [&](const Partition& l, int m) { return hua_coeff_bosonic(l, a, m) * weyl_dimension(l, m); },
                      [&] { return rising_coefficients(a, r_max); });
    }
  });
  exact.exact_family("example (1+z)^a: det(gamma_r(a)) equals beta s_lambda(1_m)", [&](const auto& cmp) {
    for (const auto& a : hua_exponents) {
      auto tagged = [&](const std::string& where, const Rational& p, const Rational& q) { cmp("a=" + to_string(a) + " " + where, p, q); };
      over_partitions(tagged, [&](const Partition& l, int m) { return hua_coeff_fermionic(l, a, m) * weyl_dimension(l, m); },
                      [&] { return binomial_coefficients(a, r_max); });
    }
    for (int N = 1; N <= 4; ++N) {
      auto tagged = [&](const std::string& where, const Rational& p, const Rational& q) { cmp("N=" + std::to_string(N) + " " + where, p, q); };
      over_partitions(tagged, [&](const Partition& l, int) { return weyl_dimension(conjugate(l), N); },
                      [&] { return binomial_coefficients(Rational(N), r_max); });
    }
  });

  // Generalised bCFT with g built from h(z) = (1 - tz)^{-a}, N = 3, m = 1.
  {
    const double tt = config.scalars.count("t") ? config.scalars.at("t") : 0.4;
    const double aa = config.scalars.count("a") ? config.scalars.at("a") : 1.5;
    const int N = 3;
    const CMatrix xv = detail::input_matrix(config, "X", N, 1, 1.0);
    const CMatrix yv = detail::input_matrix(config, "Y", N, 1, 1.0);
    require(std::fabs(tt) * xv.squaredNorm() < 1.0 && std::fabs(tt) * yv.squaredNorm() < 1.0 &&
                std::fabs(tt) * xv.norm() * yv.norm() < 1.0,
            "check_series_expansions: generalised bCFT needs |t| |x| |y| < 1");
    result.config["matrices"]["X"] = detail::matrix_json(xv);
    result.config["matrices"]["Y"] = detail::matrix_json(yv);
    auto h = [&](cplx z) { return std::pow(1.0 - tt * z, -aa); };
    const double xx = xv.squaredNorm();
    const double yy = yv.squaredNorm();
    const Estimate lhs = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                           const CMatrix u = sample_haar_unitary(N, rng);
                           out[0] = std::norm(h((yv.adjoint() * u * xv)(0, 0)));
                         })[0];
    const Estimate rhs = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                           const cplx q = sample_stiefel(N, 1, rng)(0, 0);
                           out[0] = h(xx * q) * std::conj(h(yy * q));
                         })[0];
    parts.push_back(detail::versus_estimate("generalised bCFT: |g(XY*U)|^2 vs truncation integral", lhs, rhs,
                                            config.z_threshold));
  }

  absorb(result, std::move(parts));
  result.notes = notes;
  return result;
}

}  // namespace cftv
