#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lrc/constructions.hpp"

using namespace lrc;

TEST_CASE("construction 1 at m = 4, r = 2 is the [15,10] base code") {
  auto res = construction_1(4, 2);
  CHECK(res.code.n() == 15);
  CHECK(res.code.k() == 10);
  CHECK(res.claimed_dimension == 10);
  CHECK(res.code.h() == BinaryPolynomial::from_support({0, 5, 10}));
  CHECK(res.claimed_distance == 2);
  CHECK(res.distance_is_exact);
  CHECK(res.locality_r == 2);
  CHECK(res.availability_t == 1);
}

TEST_CASE("construction 1 dimensions follow rn/(r+1)") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{
           {4, 2}, {4, 4}, {6, 2}, {6, 6}, {8, 2}, {8, 4}}) {
    auto res = construction_1(m, r);
    int n = (1 << m) - 1;
    CHECK(res.code.n() == n);
    CHECK(res.code.k() == r * n / (r + 1));
    CHECK(res.claimed_dimension == res.code.k());
    CHECK(two_closed({n, res.code.zeros()}));
  }
}

TEST_CASE("construction 1 duals carry the replicated weight-(r+1) words") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {8, 4}}) {
    auto res = construction_1(m, r);
    int n = res.code.n(), s = n / (r + 1);
    for (int i = 0; i < s; ++i) {
      std::vector<int> sup;
      for (int j = 0; j <= r; ++j) sup.push_back(i + j * s);
      CHECK(res.code.dual_contains(BitVector::from_support(n, sup)));
    }
  }
}

TEST_CASE("construction 1 preconditions") {
  CHECK_THROWS_WITH_AS(construction_1(4, 3),
                       "construction_1: r must be even and >= 2",
                       std::invalid_argument);
  CHECK_THROWS_AS(construction_1(4, 6), std::invalid_argument);  // 7 | 15 fails
}

TEST_CASE("construction 2") {
  auto m4 = construction_2(4);
  CHECK(m4.code.n() == 15);
  CHECK(m4.code.k() == 6);
  CHECK(m4.claimed_distance == 6);
  CHECK(m4.distance_is_exact);  // d = 6 is exact at m = 4

  auto m6 = construction_2(6);
  CHECK(m6.code.n() == 63);
  CHECK(m6.code.k() == 36);
  CHECK(m6.claimed_distance == 6);
  CHECK_FALSE(m6.distance_is_exact);

  auto m8 = construction_2(8);
  CHECK(m8.code.k() == 2 * 255 / 3 - 8);

  CHECK_THROWS_WITH_AS(construction_2(5), "construction_2: m must be even and > 2",
                       std::invalid_argument);
  CHECK_THROWS_AS(construction_2(2), std::invalid_argument);
}

TEST_CASE("distance-10 construction") {
  auto m4 = construction_d10(4);
  CHECK(m4.code.n() == 15);
  CHECK(m4.code.k() == 2);
  CHECK(m4.claimed_distance == 10);

  auto m6 = construction_d10(6);
  CHECK(m6.code.n() == 63);
  CHECK(m6.code.k() == 30);

  auto m8 = construction_d10(8);
  CHECK(m8.code.k() == 2 * 255 / 3 - 16);

  CHECK_THROWS_AS(construction_d10(5), std::invalid_argument);
}

TEST_CASE("availability construction") {
  auto m6 = construction_available(6);
  CHECK(m6.code.n() == 63);
  CHECK(m6.code.k() == 27);
  CHECK(m6.code.h() == BinaryPolynomial::from_support({0, 9, 27}));
  CHECK(m6.claimed_distance == 4);
  CHECK(m6.distance_is_exact);
  CHECK(m6.locality_r == 2);
  CHECK(m6.availability_t == 3);

  auto m3 = construction_available(3);
  CHECK(m3.code.n() == 7);
  CHECK(m3.code.k() == 3);
  CHECK(m3.code.h() == BinaryPolynomial::from_support({0, 1, 3}));

  auto m9 = construction_available(9);
  CHECK(m9.code.n() == 511);
  CHECK(m9.code.k() == 3 * 511 / 7);
  CHECK(m9.code.h() == BinaryPolynomial::from_support({0, 73, 219}));

  CHECK_THROWS_AS(construction_available(4), std::invalid_argument);
}

TEST_CASE("defining sets of all families are unions of cosets") {
  for (const ConstructionResult& res :
       {construction_1(6, 2), construction_2(6), construction_d10(6),
        construction_available(6)}) {
    CHECK(two_closed({res.code.n(), res.code.zeros()}));
    CHECK(res.claimed_dimension == res.code.k());
    CHECK(res.code.g() * res.code.h() == xn_minus_one(res.code.n()));
  }
}
