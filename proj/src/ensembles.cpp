#include "cftv/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cftv {

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

// Thin Q factor of a Ginibre matrix with the phases of diag(R) absorbed so that
// the law is Haar.
CMatrix haar_columns(int rows, int cols, SeededRng& rng) {
  CMatrix g = sample_ginibre(rows, cols, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const auto& packed = qr.matrixQR();
  for (int j = 0; j < cols; ++j) {
    const cplx r = packed(j, j);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(j) *= r / mag;
  }
  return q;
}

}  // namespace

CMatrix sample_ginibre(int rows, int cols, SeededRng& rng) {
  require_positive(rows, "rows");
  require_positive(cols, "cols");
  CMatrix g(rows, cols);
  for (Eigen::Index k = 0; k < g.size(); ++k) g.data()[k] = rng.complex_normal();
  return g;
}

CMatrix sample_haar_unitary(int N, SeededRng& rng) {
  require_positive(N, "N");
  return haar_columns(N, N, rng);
}

CMatrix sample_stiefel(int N, int m, SeededRng& rng) {
  require_positive(N, "N");
  require_positive(m, "m");
  if (m > N) throw std::invalid_argument("sample_stiefel: m exceeds N");
  return haar_columns(N, m, rng);
}

CMatrix sample_special_unitary(int N, SeededRng& rng) {
  CMatrix u = sample_haar_unitary(N, rng);
  if (N == 1) return CMatrix::Identity(1, 1);
  const double phase = std::arg(u.determinant());
  return u * std::polar(1.0, -phase / N);
}

CMatrix truncate_block(const CMatrix& u, int n, int m) {
  require_positive(n, "n");
  require_positive(m, "m");
  if (n > u.rows() || m > u.cols())
    throw std::invalid_argument("truncate_block: block exceeds matrix dimensions");
  return u.topLeftCorner(n, m);
}

RadialSample sample_truncation_radial(int N, int n, int m, SeededRng& rng) {
  require_positive(m, "m");
  if (m > n || n > N) throw std::invalid_argument("sample_truncation_radial: need m <= n <= N");
  if (n == N) {
    // Q consists of whole columns of a unitary, so Q*Q = I. Consume the same
    // draws as the general path to keep streams aligned.
    sample_stiefel(N, m, rng);
    return RadialSample::Ones(m);
  }
  CMatrix q = sample_stiefel(N, m, rng).topRows(n);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(q.adjoint() * q, Eigen::EigenvaluesOnly);
  RadialSample x = eig.eigenvalues();
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], 0.0, 1.0);
  return x;
}

RadialSample sample_jacobi_radial(int a, int b, int m, SeededRng& rng) {
  if (a < 0 || b < 0) throw std::invalid_argument("sample_jacobi_radial: a, b must be >= 0");
  require_positive(m, "m");
  return sample_truncation_radial(a + b + 2 * m, a + m, m, rng);
}

TiltedRadial sample_fermionic_radial_tilted(int N, int n, int m, int tilt, SeededRng& rng) {
  require_positive(N, "N");
  if (m > n) throw std::invalid_argument("sample_fermionic_radial: need m <= n");
  if (tilt < 0 || tilt > N) throw std::invalid_argument("sample_fermionic_radial: need 0 <= tilt <= N");
  TiltedRadial out;
  out.x = sample_jacobi_radial(n - m, N - tilt, m, rng);
  for (Eigen::Index i = 0; i < out.x.size(); ++i) {
    const double y = out.x[i];
    if (tilt > 0) out.weight *= std::pow(1.0 - y, tilt);
    out.x[i] = y / (1.0 - y);
  }
  return out;
}

RadialSample sample_fermionic_radial(int N, int n, int m, SeededRng& rng) {
  return sample_fermionic_radial_tilted(N, n, m, 0, rng).x;
}

TiltedMatrix sample_fermionic_matrix_tilted(int N, int n, int m, int tilt, SeededRng& rng) {
  TiltedRadial r = sample_fermionic_radial_tilted(N, n, m, tilt, rng);
  CMatrix h = sample_stiefel(n, m, rng);
  CMatrix v = sample_haar_unitary(m, rng);
  return {h * r.x.cwiseSqrt().cast<cplx>().asDiagonal() * v.adjoint(), r.weight};
}

CMatrix sample_fermionic_matrix(int N, int n, int m, SeededRng& rng) {
  return sample_fermionic_matrix_tilted(N, n, m, 0, rng).q;
}

CMatrix sample_boundary_truncation(int N, int m, SeededRng& rng) {
  if (!(N < 2 * m && m < N))
    throw std::invalid_argument("sample_boundary_truncation: need N < 2m < 2N");
  const int k = N - m;
  CMatrix u = sample_haar_unitary(m, rng);
  CMatrix v = sample_haar_unitary(m, rng);
  CMatrix z = sample_stiefel(N, k, rng).topRows(k);
  CMatrix d = CMatrix::Identity(m, m);
  d.topLeftCorner(k, k) = z;
  return u * d * v.adjoint();
}

}  // namespace cftv
