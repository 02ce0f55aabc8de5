#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "eulerian/foata.hpp"

using namespace eulerian;

TEST_CASE("record blocks", "[foata]") {
  CHECK(record_blocks(Permutation({5, 1, 2, 8, 3, 6, 4, 7})).blocks ==
        std::vector<std::vector<int>>{{5, 1, 2}, {8, 3, 6, 4, 7}});
  CHECK(record_blocks(Permutation::identity(4)).blocks ==
        std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  CHECK(record_blocks(Permutation({3, 2, 7, 4, 5, 1, 6})).blocks ==
        std::vector<std::vector<int>>{{3, 2}, {7, 4, 5, 1, 6}});
}

TEST_CASE("foata transform", "[foata]") {
  CHECK(foata_transform(Permutation({5, 1, 2, 8, 3, 6, 4, 7})) == Permutation({2, 5, 6, 7, 1, 4, 8, 3}));
  CHECK(foata_transform(Permutation::identity(6)) == Permutation::identity(6));
  const auto phi = foata_transform(Permutation({3, 2, 7, 4, 5, 1, 6}));
  CHECK(phi(3) == 2);
  CHECK(phi(2) == 3);
  CHECK(phi(7) == 4);
  CHECK(phi(4) == 5);
  CHECK(phi(5) == 1);
  CHECK(phi(1) == 6);
  CHECK(phi(6) == 7);
}

TEST_CASE("inverse transform", "[foata]") {
  CHECK(foata_inverse(Permutation({3, 2, 7, 4, 5, 1, 6})) == Permutation({2, 4, 5, 7, 6, 1, 3}));
  CHECK(max_first_cycles(Permutation({3, 2, 7, 4, 5, 1, 6})) ==
        std::vector<std::vector<int>>{{2}, {4}, {5}, {7, 6, 1, 3}});
  CHECK(foata_inverse(Permutation::identity(5)) == Permutation::identity(5));
  for_each_permutation(6, [](const Permutation& p) { REQUIRE(foata_inverse(foata_transform(p)) == p); });
}

TEST_CASE("the transform is a bijection with a two-sided inverse", "[foata][property]") {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> images;
    for_each_permutation(n, [&](const Permutation& p) {
      const auto phi = foata_transform(p);
      images.insert(phi);
      REQUIRE(foata_inverse(phi) == p);
      REQUIRE(foata_transform(foata_inverse(p)) == p);
    });
    CHECK(images.size() == enumerate_permutations(n).size());
  }
}

TEST_CASE("r-descents of p become r-anti-excedances of the transform", "[foata][property]") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto phi = foata_transform(p);
      for (int r = 1; r <= 3; ++r) {
        REQUIRE(count_stat(p, StatKind::descent(r)) == count_stat(phi, StatKind::anti_excedance(r)));
      }
    });
  }
}

TEST_CASE("block concatenation reproduces the word", "[foata][property]") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const auto b = record_blocks(p);
      REQUIRE(b.concatenated() == std::vector<int>(p.word().begin(), p.word().end()));
      int prev_max = 0;
      for (const auto& block : b.blocks) {
        REQUIRE(block.front() > prev_max);
        prev_max = *std::max_element(block.begin(), block.end());
      }
    });
  }
}
