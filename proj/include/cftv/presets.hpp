#pragma once

#include "cftv/linalg.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cftv {

/// Deterministic matrix inputs for identity checks.
///
/// "default" draws a Ginibre matrix from a stream keyed by the symbol name and
/// rescales it to the requested operator norm; "zero" gives the zero matrix;
/// "identity" gives the rectangular identity times `norm`.
CMatrix preset_matrix(std::string_view preset, std::string_view symbol, int rows, int cols, double norm);

/// Diagonal matrix with the given entries.
CMatrix diagonal(const std::vector<cplx>& entries);

/// Largest singular value.
double operator_norm(const CMatrix& a);

/// 64-bit FNV-1a; used to key preset streams by symbol name.
std::uint64_t fnv1a(std::string_view text);

}  // namespace cftv
