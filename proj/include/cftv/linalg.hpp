#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace cftv {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <class Scalar>
bool is_zero(const Scalar& v) {
  return v == Scalar(0);
}

template <class Scalar>
double magnitude(const Scalar& v) {
  if constexpr (std::is_arithmetic_v<Scalar>)
    return v < 0 ? -double(v) : double(v);
  else if constexpr (std::is_same_v<Scalar, cplx>)
    return std::abs(v);
  else
    return is_zero(v) ? 0.0 : 1.0;
}

// Gaussian elimination in place on a row-major n*n buffer.  Floating types
// pivot on the largest magnitude; exact types take the first non-zero entry.
template <class Scalar>
Scalar eliminate(Scalar* a, int n) {
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    double best = 0.0;
    for (int r = c; r < n; ++r) {
      const Scalar& v = a[r * n + c];
      if (is_zero(v)) continue;
      double mag = magnitude(v);
      if (pivot < 0 || mag > best) {
        pivot = r;
        best = mag;
        if constexpr (!std::is_arithmetic_v<Scalar> && !std::is_same_v<Scalar, cplx>) break;
      }
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[pivot * n + k]);
      det = -det;
    }
    const Scalar p = a[c * n + c];
    det *= p;
    for (int r = c + 1; r < n; ++r) {
      if (is_zero(a[r * n + c])) continue;
      const Scalar f = a[r * n + c] / p;
      for (int k = c + 1; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace detail

/// Determinant of a small dense matrix given entry-wise by `entry(i, j)`,
/// 0-based.  Avoids heap traffic for n <= 8.
template <class Scalar, class Entry>
Scalar small_determinant(int n, Entry&& entry) {
  if (n == 0) return Scalar(1);
  if (n == 1) return Scalar(entry(0, 0));
  if (n == 2) return Scalar(entry(0, 0)) * Scalar(entry(1, 1)) - Scalar(entry(0, 1)) * Scalar(entry(1, 0));
  if constexpr (std::is_arithmetic_v<Scalar> || std::is_same_v<Scalar, cplx>) {
    if (n <= 8) {
      std::array<Scalar, 64> buf;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(i * n + j)] = entry(i, j);
      return detail::eliminate(buf.data(), n);
    }
  }
  std::vector<Scalar> buf(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(i * n + j)] = entry(i, j);
  return detail::eliminate(buf.data(), n);
}

/// Determinant of an Eigen matrix over any field type, exact for rationals.
template <class Scalar>
Scalar determinant(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return small_determinant<Scalar>(static_cast<int>(a.rows()),
                                   [&](int i, int j) { return a(i, j); });
}

}  // namespace cftv
