#include "cftv/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using cftv::Partition;

namespace {

// All partitions of w with at most l parts, by filtering every composition.
std::set<std::vector<int>> brute_partitions(int w, int l) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      auto sorted = cur;
      std::sort(sorted.rbegin(), sorted.rend());
      if (static_cast<int>(sorted.size()) <= l) out.insert(sorted);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(w);
  return out;
}

}  // namespace

TEST_CASE("construction strips zeros and validates") {
  CHECK(Partition{2, 1, 0} == Partition{2, 1});
  CHECK(Partition{0, 0}.empty());
  CHECK(Partition{3, 2, 2}.weight() == 7);
  CHECK(Partition{3, 2, 2}.length() == 3);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition{4, 1}[1] == 4);
  CHECK(Partition{4, 1}[3] == 0);
}

TEST_CASE("text form round-trips") {
  CHECK(Partition::parse("2,1") == Partition{2, 1});
  CHECK(Partition::parse(" 3 , 1 ,1") == Partition{3, 1, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("2,1,0") == Partition{2, 1});
  for (const auto& p : cftv::enumerate_partitions(6, 6)) CHECK(Partition::parse(p.to_string()) == p);
  CHECK_THROWS(Partition::parse("2,,1"));
  CHECK_THROWS(Partition::parse("a"));
  CHECK_THROWS(Partition::parse("1,2"));
}

TEST_CASE("enumeration matches brute force and is ordered") {
  for (int w = 0; w <= 8; ++w)
    for (int l = 0; l <= 5; ++l) {
      auto got = cftv::partitions_of(w, l);
      auto expected = brute_partitions(w, l);
      if (w == 0) expected = {std::vector<int>{}};
      if (w > 0 && l == 0) expected.clear();
      CHECK(got.size() == expected.size());
      for (const auto& p : got) CHECK(expected.count(p.parts()) == 1);
      for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].parts() > got[i].parts());
    }
  // Partition numbers p(0..4) = 1,1,2,3,5.
  CHECK(cftv::enumerate_partitions(4, 4).size() == 12);
  auto all = cftv::enumerate_partitions(5, 2);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].weight() <= all[i].weight());
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(cftv::conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(cftv::conjugate(Partition{}) == Partition{});
  for (const auto& p : cftv::enumerate_partitions(7, 7)) {
    const auto c = cftv::conjugate(p);
    CHECK(cftv::conjugate(c) == p);
    CHECK(c.weight() == p.weight());
    // Cell (i, j) is in p iff (j, i) is in c.
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) CHECK((p[i] >= j) == (c[j] >= i));
  }
}

TEST_CASE("shifted parts") {
  CHECK(cftv::shifted_parts(Partition{2, 1}, 3) == std::vector<int>{4, 2, 0});
  CHECK(cftv::shifted_parts(Partition{}, 2) == std::vector<int>{1, 0});
  CHECK_THROWS(cftv::shifted_parts(Partition{1, 1, 1}, 2));
}
