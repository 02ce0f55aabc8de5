#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

#include "eulerian/permutation.hpp"

using namespace eulerian;

TEST_CASE("construction validates the word", "[perm_core]") {
  CHECK(Permutation({2, 1}).to_string() == "21");
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidPermutation);
  CHECK_NOTHROW(Permutation({5, 1, 2, 8, 3, 6, 4, 7}));
}

TEST_CASE("parsing accepts digit strings and comma lists", "[perm_core]") {
  CHECK(parse_permutation("6214573") == Permutation({6, 2, 1, 4, 5, 7, 3}));
  CHECK(parse_permutation("10,2,1,4,5,7,3,6,8,9").size() == 10);
  CHECK(parse_permutation("10,2,1,4,5,7,3,6,8,9").to_string() == "10,2,1,4,5,7,3,6,8,9");
  CHECK_THROWS_AS(parse_permutation("12a"), Error);
  CHECK_THROWS_AS(parse_permutation("112"), InvalidPermutation);
}

TEST_CASE("inverse", "[perm_core]") {
  CHECK(inverse(Permutation({6, 2, 1, 4, 5, 7, 3})) == Permutation({3, 2, 7, 4, 5, 1, 6}));
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(inverse(Permutation({2, 3, 1})) == Permutation({3, 1, 2}));
}

TEST_CASE("statistic counts", "[perm_core]") {
  CHECK(count_stat(Permutation({2, 4, 5, 7, 6, 1, 3}), StatKind::descent(1)) == 2);
  for (int r = 1; r <= 4; ++r) CHECK(count_stat(Permutation::identity(6), StatKind::descent(r)) == 0);
  const Permutation p({6, 2, 1, 4, 5, 7, 3});
  CHECK(count_stat(p, StatKind::excedance(1)) == 2);
  CHECK(positions_stat(p, StatKind::excedance(1)) == std::vector<int>{1, 6});
  CHECK(count_stat(Permutation({3, 1, 2}), StatKind::descent(2)) == 1);
  CHECK_THROWS_AS(StatKind::descent(0), PreconditionViolation);
}

TEST_CASE("rotate_to_end", "[perm_core]") {
  CHECK(rotate_to_end(Permutation({2, 3, 1}), 3) == Permutation({1, 2, 3}));
  CHECK(rotate_to_end(Permutation({3, 1, 2}), 1) == Permutation({2, 3, 1}));
  CHECK(rotate_to_end(Permutation({3, 1, 2}), 2) == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(rotate_to_end(Permutation({3, 1, 2}), 4), PreconditionViolation);
}

TEST_CASE("enumeration order and size", "[perm_core]") {
  CHECK(enumerate_permutations(1) == std::vector<Permutation>{Permutation({1})});
  const auto s3 = enumerate_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Permutation({1, 2, 3}));
  CHECK(s3.back() == Permutation({3, 2, 1}));
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK(enumerate_permutations(4).size() == 24);
  CHECK_THROWS_AS(enumerate_permutations(12), BoundExceeded);
  CHECK_THROWS_AS(enumerate_permutations(5, 4), BoundExceeded);
}

TEST_CASE("enumeration yields n! distinct permutations", "[perm_core][property]") {
  long long fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    std::set<Permutation> seen;
    for_each_permutation(n, [&](const Permutation& p) { seen.insert(p); });
    CHECK(static_cast<long long>(seen.size()) == fact);
  }
}

TEST_CASE("descents, ascents and small gaps partition the adjacent pairs", "[perm_core][property]") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      for (int r = 1; r <= 4; ++r) {
        int close = 0;
        for (int i = 1; i < n; ++i) close += std::abs(p(i) - p(i + 1)) < r;
        REQUIRE(count_stat(p, StatKind::descent(r)) + count_stat(p, StatKind::ascent(r)) + close == n - 1);
      }
    });
  }
}

TEST_CASE("inverse is an involution", "[perm_core][property]") {
  for (int n = 1; n <= 8; ++n) {
    for_each_permutation(n, [&](const Permutation& p) { REQUIRE(inverse(inverse(p)) == p); });
  }
}

TEST_CASE("excedance positions of p are anti-excedance positions of its inverse", "[perm_core][property]") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto q = inverse(p);
      for (int r = 1; r <= 3; ++r) {
        const auto anti = positions_stat(q, StatKind::anti_excedance(r));
        for (int i = 1; i <= n; ++i) {
          const bool exc = p(i) >= i + r;
          const bool in_anti = std::binary_search(anti.begin(), anti.end(), p(i));
          REQUIRE(exc == in_anti);
        }
      }
    });
  }
}

TEST_CASE("counts are monotone in r for every family", "[perm_core][property]") {
  const std::array families{StatFamily::descent, StatFamily::ascent, StatFamily::excedance,
                            StatFamily::anti_excedance};
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      for (auto f : families) {
        for (int r = 1; r < 5; ++r) {
          REQUIRE(count_stat(p, StatKind(f, r + 1)) <= count_stat(p, StatKind(f, r)));
        }
      }
    });
  }
}

TEST_CASE("rotating to the current last entry is the identity", "[perm_core][property]") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) { REQUIRE(rotate_to_end(p, p(n)) == p); });
  }
}

TEST_CASE("parallel folds do not depend on the worker count", "[perm_core][property]") {
  struct Sum {
    long long weighted = 0;
    Sum& operator+=(const Sum& o) {
      weighted += o.weighted;
      return *this;
    }
  };
  auto visit = [](Sum& acc, const Permutation& p) {
    acc.weighted += count_stat(p, StatKind::descent(1)) * p.last() + p.first();
  };
  const auto one = fold_permutations(8, 1, Sum{}, visit).weighted;
  CHECK(fold_permutations(8, 3, Sum{}, visit).weighted == one);
  CHECK(fold_permutations(8, 8, Sum{}, visit).weighted == one);
}
