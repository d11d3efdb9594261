#include "cftv/ensembles.hpp"
#include "cftv/montecarlo.hpp"

#include <doctest.h>

#include <cmath>

using namespace cftv;

namespace {

constexpr std::int64_t kSamples = 60000;

McOptions options(std::uint64_t seed) {
  McOptions opt;
  opt.samples = kSamples;
  opt.seed = seed;
  return opt;
}

void check_mean(const Estimate& e, double expected) {
  CAPTURE(e.mean);
  CAPTURE(e.se_re);
  CHECK(std::fabs(e.mean.real() - expected) <= 5.0 * std::max(e.se_re, 1e-12));
}

}  // namespace

TEST_CASE("Haar samples are unitary") {
  SeededRng rng(3, 0);
  for (int N : {1, 2, 3, 5, 8}) {
    const CMatrix u = sample_haar_unitary(N, rng);
    CHECK((u.adjoint() * u - CMatrix::Identity(N, N)).norm() <= 1e-12);
  }
  const CMatrix v = sample_stiefel(6, 2, rng);
  CHECK(v.rows() == 6);
  CHECK(v.cols() == 2);
  CHECK((v.adjoint() * v - CMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK_THROWS(sample_haar_unitary(0, rng));
  CHECK_THROWS(sample_stiefel(2, 3, rng));
}

TEST_CASE("Haar moments of one entry") {
  for (int N : {2, 3, 4}) {
    const auto est = estimate_mean([N](SeededRng& r) { return sample_haar_unitary(N, r); },
                                   [](const CMatrix& u) { return std::norm(u(0, 0)); }, options(11));
    check_mean(est, 1.0 / N);
  }
  const auto fourth = estimate_mean([](SeededRng& r) { return sample_haar_unitary(3, r); },
                                    [](const CMatrix& u) { return std::pow(std::norm(u(1, 2)), 2); }, options(12));
  check_mean(fourth, 2.0 / (3.0 * 4.0));
  // E[U_11] = 0: the phases are uniform.
  const auto first = estimate_mean([](SeededRng& r) { return sample_haar_unitary(2, r); },
                                   [](const CMatrix& u) { return u(0, 0); }, options(13));
  CHECK(std::abs(first.mean.real()) <= 5.0 * first.se_re);
  CHECK(std::abs(first.mean.imag()) <= 5.0 * first.se_im);
}

TEST_CASE("special unitary samples") {
  SeededRng rng(5, 1);
  for (int N : {1, 2, 3, 4}) {
    const CMatrix u = sample_special_unitary(N, rng);
    CHECK(std::abs(u.determinant() - cplx(1.0)) <= 1e-12);
    CHECK((u.adjoint() * u - CMatrix::Identity(N, N)).norm() <= 1e-12);
  }
  CHECK(std::abs(sample_special_unitary(1, rng)(0, 0) - cplx(1.0)) <= 1e-15);
}

TEST_CASE("truncation radial values") {
  SeededRng rng(7, 0);
  for (int k = 0; k < 50; ++k) {
    // N < n + m pins n + m - N values at 1.
    const RadialSample x = sample_truncation_radial(4, 3, 3, rng);
    REQUIRE(x.size() == 3);
    int ones = 0;
    for (int i = 0; i < x.size(); ++i) {
      CHECK(x[i] >= -1e-12);
      CHECK(x[i] <= 1.0 + 1e-12);
      if (std::fabs(x[i] - 1.0) <= 1e-10) ++ones;
      if (i > 0) CHECK(x[i - 1] <= x[i]);
    }
    CHECK(ones == 2);
  }
  CHECK_THROWS(sample_truncation_radial(3, 1, 2, rng));
  // E Tr Q*Q = nm/N.
  const auto est = estimate_mean([](SeededRng& r) { return sample_truncation_radial(5, 3, 2, r); },
                                 [](const RadialSample& x) { return x.sum(); }, options(21));
  check_mean(est, 6.0 / 5.0);
}

TEST_CASE("truncated blocks match the radial sampler in law") {
  const auto block = estimate_mean(
      [](SeededRng& r) { return truncate_block(sample_haar_unitary(5, r), 2, 2); },
      [](const CMatrix& q) { return std::norm((q.adjoint() * q).trace()); }, options(31));
  McOptions opt = options(32);
  const auto radial = estimate_mean([](SeededRng& r) { return sample_truncation_radial(5, 2, 2, r); },
                                    [](const RadialSample& x) { return x.sum() * x.sum(); }, opt);
  CHECK(compare(block, radial).pass);
}

TEST_CASE("Jacobi radial law") {
  // Single-variable Beta(a+1, b+1) means.
  const auto e1 = estimate_mean([](SeededRng& r) { return sample_jacobi_radial(0, 1, 1, r); },
                                [](const RadialSample& x) { return x[0]; }, options(41));
  check_mean(e1, 1.0 / 3.0);
  const auto e2 = estimate_mean([](SeededRng& r) { return sample_jacobi_radial(1, 0, 1, r); },
                                [](const RadialSample& x) { return x[0]; }, options(42));
  check_mean(e2, 2.0 / 3.0);
  // Jacobi(a, b, m) is the truncation law with N = a + b + 2m, n = a + m.
  const auto jac = estimate_mean([](SeededRng& r) { return sample_jacobi_radial(1, 1, 2, r); },
                                 [](const RadialSample& x) { return x.sum(); }, options(43));
  check_mean(jac, 3.0 * 2.0 / 6.0);
}

TEST_CASE("fermionic radial law") {
  // n = m = 1: density (N+1)(1+x)^{-N-2}, mean 1/N.
  for (int N : {3, 4}) {
    const auto est = estimate_mean([N](SeededRng& r) { return sample_fermionic_radial(N, 1, 1, r); },
                                   [](const RadialSample& x) { return x[0]; }, options(51));
    check_mean(est, 1.0 / N);
  }
  SeededRng rng(9, 0);
  const RadialSample x = sample_fermionic_radial(3, 2, 2, rng);
  CHECK(x.size() == 2);
  CHECK(x.minCoeff() >= 0.0);
}

TEST_CASE("fermionic matrix sampler matches its radial law") {
  const auto mat = estimate_mean([](SeededRng& r) { return sample_fermionic_matrix(5, 2, 1, r); },
                                 [](const CMatrix& q) { return (q.adjoint() * q).trace().real(); }, options(61));
  const auto rad = estimate_mean([](SeededRng& r) { return sample_fermionic_radial(5, 2, 1, r); },
                                 [](const RadialSample& x) { return x.sum(); }, options(62));
  CHECK(compare(mat, rad).pass);
  SeededRng rng(1, 1);
  const CMatrix q = sample_fermionic_matrix(4, 3, 2, rng);
  CHECK(q.rows() == 3);
  CHECK(q.cols() == 2);
}

TEST_CASE("boundary truncation") {
  SeededRng rng(13, 0);
  const CMatrix q = sample_boundary_truncation(3, 2, rng);
  CHECK(q.rows() == 2);
  CHECK(q.cols() == 2);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(q.adjoint() * q);
  const auto s = eig.eigenvalues();
  CHECK(std::fabs(s.maxCoeff() - 1.0) <= 1e-10);
  CHECK(s.minCoeff() <= 1.0 + 1e-12);
  CHECK_THROWS(sample_boundary_truncation(4, 2, rng));
  CHECK_THROWS(sample_boundary_truncation(3, 3, rng));
}

TEST_CASE("Ginibre entries") {
  const auto est = estimate_mean([](SeededRng& r) { return sample_ginibre(2, 2, r); },
                                 [](const CMatrix& g) { return std::norm(g(1, 0)); }, options(71));
  check_mean(est, 1.0);
  const auto sq = estimate_mean([](SeededRng& r) { return sample_ginibre(1, 1, r); },
                                [](const CMatrix& g) { return g(0, 0) * g(0, 0); }, options(72));
  CHECK(std::abs(sq.mean) <= 5.0 * sq.std_error() * std::sqrt(2.0));
}

TEST_CASE("samplers are reproducible") {
  SeededRng a(99, 4), b(99, 4), c(99, 5);
  const CMatrix ua = sample_haar_unitary(4, a);
  const CMatrix ub = sample_haar_unitary(4, b);
  const CMatrix uc = sample_haar_unitary(4, c);
  CHECK(ua == ub);
  CHECK(ua != uc);
  SeededRng d(99, 4), e(99, 4);
  CHECK(sample_fermionic_radial(3, 2, 1, d) == sample_fermionic_radial(3, 2, 1, e));
}

TEST_CASE("tilted fermionic draws") {
  SeededRng a(17, 3), b(17, 3);
  const TiltedRadial t = sample_fermionic_radial_tilted(4, 2, 2, 0, a);
  CHECK(t.weight == 1.0);
  CHECK(t.x == sample_fermionic_radial(4, 2, 2, b));
  SeededRng c(17, 4), d(17, 4);
  const TiltedMatrix tm = sample_fermionic_matrix_tilted(3, 2, 1, 0, c);
  CHECK(tm.q == sample_fermionic_matrix(3, 2, 1, d));
  CHECK_THROWS(sample_fermionic_radial_tilted(2, 1, 1, 3, a));
  CHECK_THROWS(sample_fermionic_radial_tilted(2, 1, 1, -1, a));
  const auto w = estimate_mean([](SeededRng& r) { return sample_fermionic_radial_tilted(3, 1, 1, 2, r); },
                               [](const TiltedRadial& s) { return s.weight; }, options(81));
  // y ~ Beta(1, 2): E (1-y)^2 = 2 * B(1, 4) = 1/2.
  check_mean(w, 0.5);
}
