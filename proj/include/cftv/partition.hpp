#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cftv {

/// Integer partition: a non-increasing sequence of positive parts.
///
/// Zero parts are stripped on construction, so (2,1,0) == (2,1). Parts must
/// already be non-increasing; anything else is rejected with
/// std::invalid_argument.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Parses the text form "2,1". The empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_j with 1-based j; zero past the length.
  int operator[](int j) const noexcept {
    return (j >= 1 && j <= length()) ? parts_[static_cast<std::size_t>(j - 1)] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Every partition with weight <= max_weight and length <= max_length, ordered
/// by weight and then lexicographically descending within a weight.
std::vector<Partition> enumerate_partitions(int max_weight, int max_length);

/// Partitions of exactly `weight` with length <= max_length, same order.
std::vector<Partition> partitions_of(int weight, int max_length);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// f_j = m + lambda_j - j for j = 1..m. Requires length(lambda) <= m.
std::vector<int> shifted_parts(const Partition& lambda, int m);

}  // namespace cftv
