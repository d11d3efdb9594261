#pragma once

#include "cftv/linalg.hpp"
#include "cftv/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cftv {

/// Monte Carlo mean of a complex integrand with componentwise standard errors.
struct Estimate {
  cplx mean{0.0, 0.0};
  double se_re = 0.0;
  double se_im = 0.0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;

  double std_error() const { return std::max(se_re, se_im); }
};

enum class ComparisonKind { statistical, tolerance, exact };

struct Comparison {
  ComparisonKind kind = ComparisonKind::statistical;
  double z = 0.0;
  double threshold = 4.0;
  bool pass = true;
};

inline constexpr double kDefaultZ = 4.0;
inline constexpr double kDefaultStderrFloor = 1e-12;

/// z = max over real/imag parts of |mean - reference| / max(stderr, floor).
Comparison compare(const Estimate& est, cplx reference, double z_threshold = kDefaultZ,
                   double stderr_floor = kDefaultStderrFloor);

/// Two independent estimates of the same quantity; standard errors add in quadrature.
Comparison compare(const Estimate& a, const Estimate& b, double z_threshold = kDefaultZ,
                   double stderr_floor = kDefaultStderrFloor);

/// Deterministic comparison, pass iff |value - reference| <= tol; z is the
/// residual in units of tol.
Comparison compare_tolerance(cplx value, cplx reference, double tol);

Comparison compare_exact(bool equal);

/// Keeps the worse of two comparisons (failing beats passing, then larger z / threshold).
Comparison worst(const Comparison& a, const Comparison& b);

/// Welford accumulator over real and imaginary parts.
struct MeanAccumulator {
  std::int64_t n = 0;
  double mean_re = 0.0, m2_re = 0.0;
  double mean_im = 0.0, m2_im = 0.0;

  void add(cplx v) {
    ++n;
    const double dr = v.real() - mean_re;
    mean_re += dr / static_cast<double>(n);
    m2_re += dr * (v.real() - mean_re);
    const double di = v.imag() - mean_im;
    mean_im += di / static_cast<double>(n);
    m2_im += di * (v.imag() - mean_im);
  }

  void merge(const MeanAccumulator& o);
  Estimate finish(std::uint64_t seed) const;
};

struct McOptions {
  std::int64_t samples = 200000;
  std::uint64_t seed = 0;
  int shards = 1;
  /// Added to every block's stream index; lets two estimates share a seed
  /// without sharing draws.
  std::uint64_t stream_offset = 0;
};

/// Samples are processed in fixed blocks; block b draws from
/// SeededRng(seed, stream_offset + b).  Results therefore do not depend on the
/// number of shards.
inline constexpr std::int64_t kBlockSize = 4096;

/// Estimates k means at once.  `draw(rng, out)` takes one sample from `rng`
/// and writes k integrand values to out[0..k).  `draw` is called concurrently
/// from different shards and must not share mutable state.
template <class Draw>
std::vector<Estimate> estimate_means(std::size_t k, const McOptions& opt, Draw&& draw) {
  if (opt.samples < 100) throw std::invalid_argument("estimate_means: need at least 100 samples");
  if (opt.shards < 1) throw std::invalid_argument("estimate_means: shards must be positive");
  const std::int64_t blocks = (opt.samples + kBlockSize - 1) / kBlockSize;
  std::vector<MeanAccumulator> acc(static_cast<std::size_t>(blocks) * k);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(opt.shards));

  auto run_shard = [&](int shard) {
    try {
      std::vector<cplx> out(k);
      for (std::int64_t b = shard; b < blocks; b += opt.shards) {
        SeededRng rng(opt.seed, opt.stream_offset + static_cast<std::uint64_t>(b));
        const std::int64_t first = b * kBlockSize;
        const std::int64_t last = std::min(opt.samples, first + kBlockSize);
        MeanAccumulator* slot = &acc[static_cast<std::size_t>(b) * k];
        for (std::int64_t s = first; s < last; ++s) {
          draw(rng, out.data());
          for (std::size_t i = 0; i < k; ++i) {
            if (!std::isfinite(out[i].real()) || !std::isfinite(out[i].imag()))
              throw std::runtime_error("non-finite integrand value at sample " + std::to_string(s) +
                                       " (component " + std::to_string(i) + ")");
            slot[i].add(out[i]);
          }
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(shard)] = std::current_exception();
    }
  };

  if (opt.shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.shards; ++t) pool.emplace_back(run_shard, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Estimate> result(k);
  for (std::size_t i = 0; i < k; ++i) {
    MeanAccumulator total;
    for (std::int64_t b = 0; b < blocks; ++b) total.merge(acc[static_cast<std::size_t>(b) * k + i]);
    result[i] = total.finish(opt.seed);
  }
  return result;
}

/// Single-integrand form: `sampler(rng)` produces a sample, `integrand(sample)`
/// maps it to a complex value.
template <class Sampler, class Integrand>
Estimate estimate_mean(Sampler&& sampler, Integrand&& integrand, const McOptions& opt) {
  return estimate_means(1, opt, [&](SeededRng& rng, cplx* out) { out[0] = cplx(integrand(sampler(rng))); })[0];
}

}  // namespace cftv
