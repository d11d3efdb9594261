#include "cftv/presets.hpp"

#include "cftv/ensembles.hpp"

#include <stdexcept>

namespace cftv {

namespace {

constexpr std::uint64_t kPresetSeed = 0x70726573657473ull;

}  // namespace

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

CMatrix preset_matrix(std::string_view preset, std::string_view symbol, int rows, int cols, double norm) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("preset_matrix: dimensions must be positive");
  if (preset == "zero") return CMatrix::Zero(rows, cols);
  if (preset == "identity") return CMatrix::Identity(rows, cols) * norm;
  if (preset != "default") throw std::invalid_argument("unknown matrix preset '" + std::string(preset) + "'");
  const std::string key = std::string(symbol) + ":" + std::to_string(rows) + "x" + std::to_string(cols);
  SeededRng rng(kPresetSeed, fnv1a(key));
  CMatrix g = sample_ginibre(rows, cols, rng);
  return g * (norm / operator_norm(g));
}

CMatrix diagonal(const std::vector<cplx>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  CMatrix d = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = entries[static_cast<std::size_t>(i)];
  return d;
}

}  // namespace cftv
