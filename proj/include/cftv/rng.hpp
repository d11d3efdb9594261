#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace cftv {

/// Reproducible random stream identified by (seed, stream).
///
/// Backed by std::mt19937_64 seeded through std::seed_seq, both of which are
/// fully specified by the standard, so draws agree across platforms. The
/// uniform and normal transforms are done here rather than through
/// std::*_distribution, whose algorithms are implementation-defined.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal (Box-Muller, cached second deviate).
  double normal();

  /// Standard complex Gaussian: real and imaginary parts each of variance 1/2.
  std::complex<double> complex_normal() {
    constexpr double s = 0.70710678118654752440;
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t stream_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace cftv
