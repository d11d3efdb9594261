#pragma once

#include "cftv/partition.hpp"
#include "cftv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cftv {

enum class Derivation { product_form, gram_determinant, reduced_gram, quadrature };

std::string to_string(Derivation d);

/// Reference value with the route that produced it.  `exact` is set whenever
/// every input was an integer.
struct ClosedFormValue {
  std::optional<Rational> exact;
  double value = 0.0;
  Derivation derivation = Derivation::product_form;
};

/// c^N_{n,m} = prod_{j<m} (1+j)!(n-m+j)!(N-n-m+j)!/(N-m+j)!, the mass of
/// prod x^{n-m}(1-x)^{N-n-m} |Vandermonde|^2 on [0,1]^m.  Needs N >= n+m, n >= m.
Rational selberg_constant_bosonic(int N, int n, int m);

/// k^N_{n,m} = prod_{j<m} (1+j)!(n-m+j)!(N+j)!/(N+n+j)!, the mass of
/// prod x^{n-m}(1+x)^{-N-n-m} |Vandermonde|^2 on [0,inf)^m.
Rational selberg_constant_fermionic(int N, int n, int m);

/// S^B_lambda(p,q;m) = int_{[0,1]^m} s_lambda(x) prod x^{p-1}(1-x)^{q-1} |Vandermonde|^2 dx.
///
/// product_form: m! prod_j Gamma(q+j-1)Gamma(p+f_j)/Gamma(m+p+q+f_j-1) prod_{i<j}(f_i-f_j);
/// gram_determinant: m! det B(m+p+f_j-i, q);
/// reduced_gram: m! det B(m+p+f_j-i, q+i-1);
/// with f_j = m + lambda_j - j.
ClosedFormValue schur_selberg_bosonic(const Partition& lambda, double p, double q, int m,
                                      Derivation route = Derivation::product_form);

/// S^F_lambda(p,q;m) = int_{[0,inf)^m} s_lambda(x) prod x^{p-1}(1+x)^{-(p+q+2m-2)} |Vandermonde|^2 dx.
///
/// product_form: m! prod_j Gamma(p+f_j)Gamma(q+m-f_j-1)/Gamma(p+q+2m-j-1) prod_{i<j}(f_i-f_j);
/// gram_determinant: m! det B(m+p+f_j-i, q+m-f_j-2+i);
/// reduced_gram: m! det B(m+p+f_j-i, q+m-f_j-1).
/// Requires q + m - f_j - 1 > 0 for every j.
ClosedFormValue schur_selberg_fermionic(const Partition& lambda, double p, double q, int m,
                                        Derivation route = Derivation::product_form);

/// Mass ratio of the Jacobi laws (n-m, N-tilt, m) and (n-m, N, m); multiplies the
/// weights of sample_fermionic_radial_tilted / sample_fermionic_matrix_tilted.
Rational fermionic_tilt_normaliser(int N, int n, int m, int tilt);

/// s_lambda(1_m) s_lambda(1_n) / s_lambda(1_N): the mean of s_lambda(Q*Q) over
/// n x m truncations of Haar U(N).
Rational rhs_schur_moment_bosonic(const Partition& lambda, int N, int n, int m);

/// s_lambda(1_n) s_lambda(1_m) / s_lambda'(1_N): the mean of s_lambda(Q*Q)
/// under the fermionic measure.  Rejects lambda_1 > N.
Rational rhs_schur_moment_fermionic(const Partition& lambda, int N, int n, int m);

/// The Haar average of exp(-i Tr(Y*UX + X*U*Y)) over U(N) for N x m matrices
/// X, Y, as a function of the singular values d of XY*:
/// det(int_0^1 J0(2 q d_k) q^{2(m-j)+1} (1-q^2)^{N-2m} dq) / prod_{j<k}(d_j^2 - d_k^2),
/// normalised to 1 at d = 0.  Requires 2m <= N and distinct d.
double bessel_determinant_formula(int N, int m, const std::vector<double>& d);

}  // namespace cftv
