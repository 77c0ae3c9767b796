#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lrc/bounds.hpp"

using namespace lrc;

TEST_CASE("locality-aware Singleton bound") {
  CHECK(lrc_singleton_bound(15, 10, 2) == 2);
  CHECK(lrc_singleton_bound(15, 6, 2) == 8);
  // r = k reduces to the classical bound n - k + 1
  for (int n : {15, 63})
    for (int k = 1; k < n; ++k)
      CHECK(lrc_singleton_bound(n, k, k) == n - k + 1);
  CHECK_THROWS_AS(lrc_singleton_bound(15, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(lrc_singleton_bound(15, 16, 2), std::invalid_argument);
}

TEST_CASE("distance-6 dimension bound") {
  CHECK(thm1_dimension_bound(4) == 6);
  CHECK(thm1_dimension_bound(6) == 36);
  CHECK(thm1_dimension_bound(8) == 162);
  CHECK_THROWS_AS(thm1_dimension_bound(5), std::invalid_argument);
  CHECK_THROWS_AS(thm1_dimension_bound(2), std::invalid_argument);
}

TEST_CASE("distance-10 dimension bound") {
  CHECK(thm2_dimension_bound(4, KParity::even) == 2);
  CHECK(thm2_dimension_bound(4, KParity::any) == 3);
  CHECK(thm2_dimension_bound(6, KParity::even) == 30);
  for (int m : {4, 6, 8, 10, 12})
    CHECK(thm2_dimension_bound(m, KParity::any) ==
          thm2_dimension_bound(m, KParity::even) + 1);
}

TEST_CASE("GF(4) sphere-packing size bound") {
  CHECK(f4_hamming_size_bound(5, 5) == 3);   // floor(log2(4^5 / 106))
  CHECK(f4_hamming_size_bound(5, 3) == 6);   // 2k' with k' = 3
  CHECK(f4_hamming_size_bound(1, 3) == 0);
  CHECK_THROWS_AS(f4_hamming_size_bound(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(f4_hamming_size_bound(0, 3), std::invalid_argument);
}

TEST_CASE("radius-2 packing bound collapses to the closed form") {
  // at n' = (2^m - 1)/3 the bound equals 2n/3 + 1 - 2m for every even m > 2
  for (int m : {4, 6, 8, 10, 12}) {
    long long n = (1ll << m) - 1;
    CHECK(f4_hamming_size_bound(n / 3, 5) == 2 * n / 3 + 1 - 2 * m);
  }
}

TEST_CASE("verdict names are stable") {
  CHECK(to_string(BoundVerdict::met_with_equality) == "met_with_equality");
  CHECK(to_string(BoundVerdict::slack) == "slack");
  CHECK(to_string(BoundVerdict::violated) == "violated");
  CHECK(to_string(BoundVerdict::consistent_not_confirmed) ==
        "consistent_not_confirmed");
  CHECK(to_string(BoundVerdict::not_applicable) == "not_applicable");
}
