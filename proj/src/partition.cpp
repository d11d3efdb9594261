#include "cftv/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cftv {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition text '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

namespace {

// Emits partitions of `remaining` with parts <= max_part in lex-descending order.
void emit(int remaining, int max_part, int slots, std::vector<int>& prefix,
          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_length) {
  if (weight < 0 || max_length < 0)
    throw std::invalid_argument("partition bounds must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit(weight, weight, max_length, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_weight, int max_length) {
  if (max_weight < 0 || max_length < 0)
    throw std::invalid_argument("partition bounds must be non-negative");
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = partitions_of(w, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  if (lambda.empty()) return Partition{};
  parts.reserve(static_cast<std::size_t>(lambda[1]));
  for (int col = 1; col <= lambda[1]; ++col) {
    int height = 0;
    while (height < lambda.length() && lambda[height + 1] >= col) ++height;
    parts.push_back(height);
  }
  return Partition(std::move(parts));
}

std::vector<int> shifted_parts(const Partition& lambda, int m) {
  if (lambda.length() > m)
    throw std::invalid_argument("shifted_parts: length(lambda) exceeds m");
  std::vector<int> f(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) f[static_cast<std::size_t>(j - 1)] = m + lambda[j] - j;
  return f;
}

}  // namespace cftv
