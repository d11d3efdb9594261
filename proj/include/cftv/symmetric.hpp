#pragma once

#include "cftv/linalg.hpp"
#include "cftv/partition.hpp"
#include "cftv/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace cftv {

/// Eigenvalues of a matrix argument; every consumer is symmetric in them.
template <class Scalar>
using Spectrum = std::vector<Scalar>;

enum class SymBasis { complete, elementary };

/// p_k = Tr(A^k) for k = 1..k_max; element 0 holds p_1.
template <class Scalar>
std::vector<Scalar> power_sums(const Matrix<Scalar>& a, int k_max) {
  if (a.rows() != a.cols()) throw std::invalid_argument("power_sums: matrix is not square");
  if (k_max < 1) throw std::invalid_argument("power_sums: k_max must be positive");
  std::vector<Scalar> p;
  p.reserve(static_cast<std::size_t>(k_max));
  Matrix<Scalar> power = a;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) power = (power * a).eval();
    p.push_back(power.trace());
  }
  return p;
}

/// h_0..h_{r_max} (or e_0..e_{r_max}) from p_1..p_{r_max} by Newton's identities.
/// p[0] holds p_1.
template <class Scalar>
std::vector<Scalar> bases_from_power_sums(const std::vector<Scalar>& p, int r_max, SymBasis basis) {
  if (r_max < 0) throw std::invalid_argument("bases_from_power_sums: negative r_max");
  if (static_cast<int>(p.size()) < r_max)
    throw std::invalid_argument("bases_from_power_sums: need " + std::to_string(r_max) +
                                " power sums, got " + std::to_string(p.size()));
  std::vector<Scalar> out(static_cast<std::size_t>(r_max) + 1, Scalar(0));
  out[0] = Scalar(1);
  for (int r = 1; r <= r_max; ++r) {
    Scalar acc(0);
    for (int i = 1; i <= r; ++i) {
      Scalar term = p[static_cast<std::size_t>(i - 1)] * out[static_cast<std::size_t>(r - i)];
      if (basis == SymBasis::elementary && i % 2 == 0) term = -term;
      acc += term;
    }
    out[static_cast<std::size_t>(r)] = acc / Scalar(r);
  }
  return out;
}

/// h_0..h_{r_max} of a spectrum via h_r(x_1..x_k) = h_r(x_1..x_{k-1}) + x_k h_{r-1}(x_1..x_k).
template <class Scalar>
std::vector<Scalar> complete_from_spectrum(const Spectrum<Scalar>& x, int r_max) {
  std::vector<Scalar> h(static_cast<std::size_t>(std::max(r_max, 0)) + 1, Scalar(0));
  h[0] = Scalar(1);
  for (const Scalar& xi : x)
    for (int r = 1; r <= r_max; ++r)
      h[static_cast<std::size_t>(r)] += xi * h[static_cast<std::size_t>(r - 1)];
  return h;
}

/// e_0..e_{r_max} of a spectrum.
template <class Scalar>
std::vector<Scalar> elementary_from_spectrum(const Spectrum<Scalar>& x, int r_max) {
  std::vector<Scalar> e(static_cast<std::size_t>(std::max(r_max, 0)) + 1, Scalar(0));
  e[0] = Scalar(1);
  for (const Scalar& xi : x)
    for (int r = r_max; r >= 1; --r)
      e[static_cast<std::size_t>(r)] += xi * e[static_cast<std::size_t>(r - 1)];
  return e;
}

/// Highest h index the Jacobi-Trudi determinant of lambda touches.
inline int jacobi_trudi_degree(const Partition& lambda) {
  return lambda.empty() ? 0 : lambda[1] + lambda.length() - 1;
}

/// det(h_{lambda_i - i + j}) with h_r = 0 for r < 0.  `h` must cover
/// jacobi_trudi_degree(lambda).
template <class Scalar, class Seq>
Scalar schur_from_complete(const Partition& lambda, const Seq& h) {
  const int l = lambda.length();
  return small_determinant<Scalar>(l, [&](int i, int j) -> Scalar {
    const int r = lambda[i + 1] - i + j;
    return r < 0 ? Scalar(0) : Scalar(h[static_cast<std::size_t>(r)]);
  });
}

/// s_lambda(x) by Jacobi-Trudi; zero when length(lambda) exceeds the number of
/// variables.
template <class Scalar>
Scalar schur_eval(const Partition& lambda, const Spectrum<Scalar>& x) {
  if (lambda.length() > static_cast<int>(x.size())) return Scalar(0);
  auto h = complete_from_spectrum(x, jacobi_trudi_degree(lambda));
  return schur_from_complete<Scalar>(lambda, h);
}

/// s_lambda of the eigenvalues of a square matrix, without diagonalising it.
template <class Scalar>
Scalar schur_of_matrix(const Partition& lambda, const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("schur_of_matrix: matrix is not square");
  if (lambda.empty()) return Scalar(1);
  if (lambda.length() > a.rows()) return Scalar(0);
  const int degree = jacobi_trudi_degree(lambda);
  auto h = bases_from_power_sums(power_sums(a, degree), degree, SymBasis::complete);
  return schur_from_complete<Scalar>(lambda, h);
}

/// det(x_i^{lambda_j + m - j}) / det(x_i^{m - j}); requires distinct entries.
template <class Scalar>
Scalar schur_bialternant(const Partition& lambda, const Spectrum<Scalar>& x) {
  const int m = static_cast<int>(x.size());
  if (lambda.length() > m) return Scalar(0);
  auto power = [](const Scalar& b, int e) {
    Scalar r(1);
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  };
  Scalar num = small_determinant<Scalar>(m, [&](int i, int j) {
    return power(x[static_cast<std::size_t>(i)], lambda[j + 1] + m - j - 1);
  });
  Scalar den = small_determinant<Scalar>(m, [&](int i, int j) {
    return power(x[static_cast<std::size_t>(i)], m - j - 1);
  });
  if (den == Scalar(0)) throw std::domain_error("schur_bialternant: repeated spectrum entries");
  return num / den;
}

namespace detail {

template <class Scalar>
void ssyt_fill(const Partition& lambda, const Spectrum<Scalar>& x, std::vector<int>& tab,
               std::size_t cell, const std::vector<std::pair<int, int>>& cells, Scalar monomial,
               Scalar& total) {
  if (cell == cells.size()) {
    total += monomial;
    return;
  }
  auto [row, col] = cells[cell];
  const int width = lambda[1];
  int lo = 1;
  if (col > 0) lo = std::max(lo, tab[static_cast<std::size_t>(row * width + col - 1)]);
  if (row > 0) lo = std::max(lo, tab[static_cast<std::size_t>((row - 1) * width + col)] + 1);
  for (int v = lo; v <= static_cast<int>(x.size()); ++v) {
    tab[static_cast<std::size_t>(row * width + col)] = v;
    ssyt_fill(lambda, x, tab, cell + 1, cells, Scalar(monomial * x[static_cast<std::size_t>(v - 1)]),
              total);
  }
}

}  // namespace detail

/// Brute-force sum over semistandard tableaux of shape lambda with entries
/// bounded by the number of variables.  Limited to |lambda| <= 8, |x| <= 6.
template <class Scalar>
Scalar schur_ssyt_oracle(const Partition& lambda, const Spectrum<Scalar>& x) {
  if (lambda.weight() > 8 || x.size() > 6)
    throw std::invalid_argument("schur_ssyt_oracle: enumeration bound exceeded");
  if (lambda.empty()) return Scalar(1);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r + 1]; ++c) cells.emplace_back(r, c);
  std::vector<int> tab(static_cast<std::size_t>(lambda.length() * lambda[1]), 0);
  Scalar total(0);
  detail::ssyt_fill(lambda, x, tab, 0, cells, Scalar(1), total);
  return total;
}

/// s_lambda(1_n) by Weyl's dimension formula; zero when length(lambda) > n.
Rational weyl_dimension(const Partition& lambda, int n);

/// Coefficient c_lambda of s_lambda in exp(Tr A) = sum c_lambda s_lambda(A).
Rational exp_coeff(const Partition& lambda);

/// det(alpha_{lambda_k - k + j})_{j,k=1..m}, the coefficient of s_lambda in the
/// expansion of prod g(a_i) with g(z) = sum alpha_r z^r.
template <class Scalar>
Scalar multiplicative_expansion_coeff(const std::vector<Scalar>& alpha, const Partition& lambda, int m) {
  if (lambda.length() > m)
    throw std::invalid_argument("multiplicative_expansion_coeff: length(lambda) exceeds m");
  if (static_cast<int>(alpha.size()) < lambda[1] + m)
    throw std::invalid_argument("multiplicative_expansion_coeff: need alpha up to index " +
                                std::to_string(lambda[1] + m - 1));
  return small_determinant<Scalar>(m, [&](int j, int k) -> Scalar {
    const int r = lambda[k + 1] - (k + 1) + (j + 1);
    return r < 0 ? Scalar(0) : alpha[static_cast<std::size_t>(r)];
  });
}

namespace detail {

template <class Scalar>
Scalar from_int(long v) {
  return Scalar(v);
}

template <class Scalar>
void require_non_negative(const Scalar& a, const char* who) {
  if (a < Scalar(0)) throw std::domain_error(std::string(who) + ": a must be non-negative");
}

}  // namespace detail

/// Coefficient beta_lambda in prod_j (1 - z_j)^{-a} = sum beta_lambda s_lambda(1_m) s_lambda(z),
/// beta_lambda = prod_j (a - j + 1)_{lambda_j} (m - j)! / (m + lambda_j - j)!.
/// Exact when Scalar is Rational.
template <class Scalar>
Scalar hua_coeff_bosonic(const Partition& lambda, const Scalar& a, int m) {
  detail::require_non_negative(a, "hua_coeff_bosonic");
  if (lambda.length() > m) throw std::invalid_argument("hua_coeff_bosonic: length(lambda) exceeds m");
  Scalar beta(1);
  for (int j = 1; j <= m; ++j) {
    const Scalar base = a - Scalar(j - 1);
    for (int k = 0; k < lambda[j]; ++k) beta *= base + Scalar(k);
    for (int k = 1; k <= lambda[j]; ++k) beta /= Scalar(m - j + k);
  }
  return beta;
}

/// Coefficient beta_lambda in prod_j (1 + z_j)^{a} = sum beta_lambda s_lambda(1_m) s_lambda(z),
/// beta_lambda = prod_j Gamma(a+m-j+1)/Gamma(a-lambda_j+j) (m-j)!/(m+lambda_j-j)!.
template <class Scalar>
Scalar hua_coeff_fermionic(const Partition& lambda, const Scalar& a, int m) {
  detail::require_non_negative(a, "hua_coeff_fermionic");
  if (lambda.length() > m) throw std::invalid_argument("hua_coeff_fermionic: length(lambda) exceeds m");
  Scalar beta(1);
  for (int j = 1; j <= m; ++j) {
    // Gamma(x + k) / Gamma(x) with x = a - lambda_j + j.
    const Scalar x = a - Scalar(lambda[j] - j);
    const int k = m - 2 * j + 1 + lambda[j];
    if (k >= 0) {
      for (int i = 0; i < k; ++i) beta *= x + Scalar(i);
    } else {
      for (int i = k; i < 0; ++i) beta /= x + Scalar(i);
    }
    for (int i = 1; i <= lambda[j]; ++i) beta /= Scalar(m - j + i);
  }
  return beta;
}

}  // namespace cftv
