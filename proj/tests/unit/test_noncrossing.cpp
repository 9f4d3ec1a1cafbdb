#include <doctest.h>

#include <algorithm>
#include <set>

#include "graphfp/noncrossing.hpp"
#include "helpers.hpp"

using namespace graphfp;
using namespace graphfp::nc;
using graphfp::testing::all_set_partitions;
using graphfp::testing::crosses_bruteforce;
using graphfp::testing::r;

TEST_SUITE("noncrossing") {

TEST_CASE("enumeration agrees with the brute-force filter up to n = 5") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::vector<std::vector<int>>> expected;
    for (const auto& blocks : all_set_partitions(n)) {
      if (!crosses_bruteforce(blocks, n)) expected.insert(blocks);
    }
    const auto got = enumerate_nc(n);
    std::set<std::vector<std::vector<int>>> got_set;
    for (const auto& p : got) got_set.insert(p.blocks());
    CHECK(got.size() == got_set.size());
    CHECK(got_set == expected);
  }
}

TEST_CASE("NC(3) has 5 partitions, all of them") {
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(all_set_partitions(3).size() == 5);  // none cross at n = 3
}

TEST_CASE("NC(4) misses exactly the crossing {13}{24}") {
  const auto all = all_set_partitions(4);
  CHECK(all.size() == 15);
  int crossing = 0;
  for (const auto& blocks : all) {
    if (crosses_bruteforce(blocks, 4)) ++crossing;
  }
  CHECK(crossing == 1);
  CHECK(enumerate_nc(4).size() == 14);
  CHECK_THROWS_AS(NCPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("NC(1) is the singleton partition") {
  const auto got = enumerate_nc(1);
  REQUIRE(got.size() == 1);
  CHECK(got[0].blocks() == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("counts match Catalan numbers up to n = 8") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(Integer(enumerate_nc(n).size()) == catalan(n));
  }
  for (int n = 0; n <= 8; ++n) {
    CHECK(Integer(enumerate_nc2(2 * n).size()) == catalan(n));
  }
  CHECK(catalan(8) == 1430);
}

TEST_CASE("NC2 small cases") {
  const auto m4 = enumerate_nc2(4);
  REQUIRE(m4.size() == 2);
  CHECK(m4[0].pairs() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(m4[1].pairs() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});

  const auto m2 = enumerate_nc2(2);
  REQUIRE(m2.size() == 1);
  CHECK(m2[0].pairs() == std::vector<std::pair<int, int>>{{1, 2}});

  CHECK_THROWS_AS(enumerate_nc2(3), std::invalid_argument);

  // the worked NC2(12) partition is produced by the enumeration
  NCPairPartition fig(12, {{1, 8}, {2, 5}, {3, 4}, {6, 7}, {9, 12}, {10, 11}});
  const auto m12 = enumerate_nc2(12);
  CHECK(std::find(m12.begin(), m12.end(), fig) != m12.end());
}

TEST_CASE("narayana matches the enumeration statistic up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Integer> counted(n + 1, 0);
    for (const auto& p : enumerate_nc(n)) counted[p.block_count()] += 1;
    for (int k = 1; k <= n; ++k) {
      CHECK(narayana(n, k) == counted[k]);
    }
  }
}

TEST_CASE("narayana frozen values and edge rows") {
  CHECK(narayana(3, 2) == 3);
  CHECK(narayana(4, 2) == 6);
  for (int n = 1; n <= 10; ++n) {
    CHECK(narayana(n, 1) == 1);
    CHECK(narayana(n, n) == 1);
  }
  CHECK_THROWS_AS(narayana(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(narayana(3, 4), std::invalid_argument);
}

TEST_CASE("narayana symmetry N(n,k) = N(n,n+1-k) up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(narayana(n, k) == narayana(n, n + 1 - k));
    }
  }
}

TEST_CASE("narayana polynomial evaluations") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(narayana_poly(n, r(1)) == Rational(catalan(n)));
  }
  CHECK(narayana_poly(1, r(7, 3)) == r(7, 3));
  // N_2(T) = T + T^2
  Rational lambda = r(5, 2);
  CHECK(narayana_poly(2, lambda) == lambda + lambda * lambda);
}

TEST_CASE("tl bijection reproduces the worked NC2(12) example") {
  NCPairPartition pi(12, {{1, 8}, {2, 5}, {3, 4}, {6, 7}, {9, 12}, {10, 11}});
  NCPartition image = tl_bijection(pi);
  CHECK(image.blocks() == std::vector<std::vector<int>>{{1, 3, 4}, {2}, {5, 6}});
  CHECK(odd_block_count(pi) == 3);  // arcs (1,8), (3,4), (9,12)
  CHECK(tl_inverse(image) == pi);
}

TEST_CASE("tl bijection nested-free and one-arch cases") {
  // adjacent pairs map to singletons
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> adj;
    for (int i = 1; i <= n; ++i) adj.emplace_back(2 * i - 1, 2 * i);
    NCPartition image = tl_bijection(NCPairPartition(2 * n, adj));
    CHECK(image.block_count() == n);
    for (const auto& b : image.blocks()) CHECK(b.size() == 1);
  }
  // one outer arch over a run of adjacent pairs maps to the full block
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::pair<int, int>> arch{{1, 2 * n}};
    for (int i = 1; i < n; ++i) arch.emplace_back(2 * i, 2 * i + 1);
    NCPartition image = tl_bijection(NCPairPartition(2 * n, arch));
    CHECK(image.block_count() == 1);
    CHECK(image.blocks()[0].size() == static_cast<size_t>(n));
  }
}

TEST_CASE("tl bijection is a bijection up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    std::set<NCPartition> images;
    for (const auto& pi : enumerate_nc2(2 * n)) {
      NCPartition image = tl_bijection(pi);
      images.insert(image);
      CHECK(tl_inverse(image) == pi);  // inverse after forward
    }
    CHECK(Integer(images.size()) == catalan(n));  // forward is onto NC(n)
    for (const auto& p : enumerate_nc(n)) {
      CHECK(tl_bijection(tl_inverse(p)) == p);  // forward after inverse
    }
  }
}

TEST_CASE("odd-min arc count equals the image block count up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : enumerate_nc2(2 * n)) {
      CHECK(odd_block_count(pi) == tl_bijection(pi).block_count());
    }
  }
}

TEST_CASE("odd_block_count small cases") {
  CHECK(odd_block_count(NCPairPartition(4, {{1, 2}, {3, 4}})) == 2);
  CHECK(odd_block_count(NCPairPartition(4, {{1, 4}, {2, 3}})) == 1);
}

TEST_CASE("partition validation rejects malformed input") {
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}}), std::invalid_argument);          // misses 3
  CHECK_THROWS_AS(NCPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // repeats 2
  CHECK_THROWS_AS(NCPartition(2, {{1, 2, 3}}), std::invalid_argument);       // out of range
  CHECK_THROWS_AS(NCPairPartition(4, {{1, 2}, {3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(NCPairPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);  // crossing
}

}  // TEST_SUITE
