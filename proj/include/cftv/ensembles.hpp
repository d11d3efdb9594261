#pragma once

#include "cftv/linalg.hpp"
#include "cftv/rng.hpp"

namespace cftv {

/// Eigenvalues of Q*Q for a sampled matrix Q, ascending.
using RadialSample = Eigen::VectorXd;

/// i.i.d. standard complex Gaussian entries, drawn in column-major order.
CMatrix sample_ginibre(int rows, int cols, SeededRng& rng);

/// Haar-distributed N x N unitary (Ginibre QR with the R-diagonal phases removed).
CMatrix sample_haar_unitary(int N, SeededRng& rng);

/// First m columns of a Haar unitary of size N, i.e. a Haar point of the
/// Stiefel manifold of N x m isometries.
CMatrix sample_stiefel(int N, int m, SeededRng& rng);

/// Haar SU(N): a Haar U(N) sample divided by the principal N-th root of its determinant.
CMatrix sample_special_unitary(int N, SeededRng& rng);

/// Principal n x m sub-block.
CMatrix truncate_block(const CMatrix& u, int n, int m);

/// Eigenvalues of Q*Q where Q is the top-left n x m block of Haar U(N), m <= n <= N.
/// When N < n + m exactly n + m - N of them equal 1.
RadialSample sample_truncation_radial(int N, int n, int m, SeededRng& rng);

/// Jacobi ensemble with weight prod x^a (1-x)^b and squared Vandermonde on [0,1]^m.
RadialSample sample_jacobi_radial(int a, int b, int m, SeededRng& rng);

/// Eigenvalues of Q*Q under det(I + Q*Q)^{-N-m-n} on complex n x m matrices.
RadialSample sample_fermionic_radial(int N, int n, int m, SeededRng& rng);

/// Complex n x m matrix with law proportional to det(I + Q*Q)^{-N-m-n}.
CMatrix sample_fermionic_matrix(int N, int n, int m, SeededRng& rng);

/// Importance draws for fermionic averages of integrands growing like x^k per
/// eigenvalue, whose variance is infinite once 2k > N.  The radial part comes
/// from y ~ Jacobi(n-m, N-tilt, m) instead of Jacobi(n-m, N, m), x = y/(1-y), and
/// `weight` = prod_j (1-y_j)^tilt is the density ratio up to the constant
/// fermionic_tilt_normaliser(N, n, m, tilt).  tilt = 0 reproduces the plain
/// samplers draw for draw with weight 1.
struct TiltedRadial {
  RadialSample x;
  double weight = 1.0;
};
struct TiltedMatrix {
  CMatrix q;
  double weight = 1.0;
};
TiltedRadial sample_fermionic_radial_tilted(int N, int n, int m, int tilt, SeededRng& rng);
TiltedMatrix sample_fermionic_matrix_tilted(int N, int n, int m, int tilt, SeededRng& rng);

/// U diag(Z, I_{2m-N}) V* with U, V Haar on U(m) and Z the (N-m) x (N-m)
/// truncation of Haar U(N).  Requires N < 2m < 2N.
CMatrix sample_boundary_truncation(int N, int m, SeededRng& rng);

}  // namespace cftv
