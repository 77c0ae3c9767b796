#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lrc/constructions.hpp"
#include "lrc/repair.hpp"

using namespace lrc;

namespace {

std::mt19937_64 rng(99);

BitVector random_codeword(const CyclicCode& code) {
  BitVector msg(code.k());
  for (int i = 0; i < code.k(); ++i) msg.set(i, rng() & 1);
  return code.encode(msg);
}

}  // namespace

TEST_CASE("local repair reads r coordinates and restores the bit") {
  auto code = construction_1(4, 2).code;
  auto cert = verify_locality(code, 2);
  REQUIRE(cert.certified);

  ParityCheck first = cert.checks[cert.coordinate_check[0]];
  CHECK(first.support == std::vector<int>{0, 5, 10});

  for (int iter = 0; iter < 50; ++iter) {
    BitVector cw = random_codeword(code);
    auto trace = local_repair(cw, {{0}}, 0, first);
    CHECK(trace.reads == std::vector<int>{5, 10});
    CHECK(trace.value == cw.get(0));
  }

  auto zero = local_repair(BitVector(15), {{3}}, 3,
                           cert.checks[cert.coordinate_check[3]]);
  CHECK_FALSE(zero.value);
}

TEST_CASE("local repair preconditions") {
  auto code = construction_1(4, 2).code;
  auto checks = find_low_weight_duals(code, 3);
  BitVector cw = random_codeword(code);
  CHECK_THROWS_AS(local_repair(cw, {{1}}, 1, checks[0]),
                  std::invalid_argument);  // check {0,5,10} misses 1
  CHECK_THROWS_AS(local_repair(cw, {{0, 5}}, 0, checks[0]),
                  std::invalid_argument);  // helper erased too
}

TEST_CASE("repair sets of the availability code are interchangeable") {
  auto code = construction_available(6).code;
  auto avail = verify_availability(code, 2, 3);
  REQUIRE(avail.certified);

  auto first = choose_repair_set(avail.certificate, 0, {});
  REQUIRE(first.has_value());
  CHECK(first->support == std::vector<int>{0, 9, 45});

  // a busy coordinate in the first set pushes the repair to the second;
  // the two read sets share nothing beyond the repaired coordinate
  auto second = choose_repair_set(avail.certificate, 0, {9});
  REQUIRE(second.has_value());
  CHECK(second->support == std::vector<int>{0, 18, 27});
  BitVector cw = random_codeword(code);
  auto t1 = local_repair(cw, {{0}}, 0, *first);
  auto t2 = local_repair(cw, {{0}}, 0, *second);
  CHECK(t1.value == cw.get(0));
  CHECK(t2.value == cw.get(0));
  CHECK(t1.reads != t2.reads);

  // blocking one coordinate of each of the three sets exhausts them
  CHECK_FALSE(choose_repair_set(avail.certificate, 0, {9, 18, 36})
                  .has_value());
}

TEST_CASE("simultaneous repairs in distinct groups read disjoint sets") {
  auto code = construction_available(6).code;
  auto avail = verify_availability(code, 2, 3);
  REQUIRE(avail.certified);

  std::vector<int> busy;
  std::vector<std::vector<int>> all_reads;
  for (int i : {0, 1, 2}) {  // distinct residue classes mod 9
    auto check = choose_repair_set(avail.certificate, i, busy);
    REQUIRE(check.has_value());
    auto trace = local_repair(random_codeword(code), {{i}}, i, *check);
    for (int rd : trace.reads) busy.push_back(rd);
    all_reads.push_back(trace.reads);
  }
  for (std::size_t a = 0; a < all_reads.size(); ++a)
    for (std::size_t b = a + 1; b < all_reads.size(); ++b)
      for (int x : all_reads[a])
        CHECK(std::find(all_reads[b].begin(), all_reads[b].end(), x) ==
              all_reads[b].end());
}

TEST_CASE("sampled repair sweep on the length-63 availability code") {
  auto code = construction_available(6).code;
  auto avail = verify_availability(code, 2, 3);
  REQUIRE(avail.certified);
  std::uniform_int_distribution<int> coord(0, 62);
  for (int iter = 0; iter < 10000; ++iter) {
    BitVector cw = random_codeword(code);
    int i = coord(rng);
    for (const auto& check : avail.certificate.per_coordinate[i]) {
      auto trace = local_repair(cw, {{i}}, i, check);
      REQUIRE(trace.value == cw.get(i));
      REQUIRE(trace.reads.size() == 2);
    }
  }
}

TEST_CASE("the [15,2,10] code survives every 9-erasure pattern") {
  auto code = construction_d10(4).code;
  int patterns = 0;
  std::vector<int> pat(9);
  // C(15,9) = 5005; decodability of each implies it for all sub-patterns
  for (int a = 0; a < 15; ++a)
   for (int b = a+1; b < 15; ++b)
    for (int c = b+1; c < 15; ++c)
     for (int d = c+1; d < 15; ++d)
      for (int e = d+1; e < 15; ++e)
       for (int f = e+1; f < 15; ++f)
        for (int g = f+1; g < 15; ++g)
         for (int h = g+1; h < 15; ++h)
          for (int i = h+1; i < 15; ++i) {
            pat = {a, b, c, d, e, f, g, h, i};
            BitVector cw = random_codeword(code);
            BitVector damaged = cw;
            for (int x : pat) damaged.set(x, false);
            auto res = erasure_decode(code, damaged, {pat});
            REQUIRE(res.success);
            REQUIRE(res.codeword == cw);
            ++patterns;
          }
  CHECK(patterns == 5005);
}

TEST_CASE("erasure decoding") {
  auto code = construction_2(4).code;  // [15,6,6]

  SUBCASE("empty pattern returns the input unchanged") {
    BitVector w(15);
    w.set(3, true);  // not even a codeword
    auto res = erasure_decode(code, w, {});
    CHECK(res.success);
    CHECK(res.codeword == w);
  }

  SUBCASE("any d-1 erasures are recoverable") {
    std::uniform_int_distribution<int> coord(0, 14);
    for (int iter = 0; iter < 300; ++iter) {
      BitVector cw = random_codeword(code);
      std::vector<int> erased;
      while (erased.size() < 5) {
        int c = coord(rng);
        if (std::find(erased.begin(), erased.end(), c) == erased.end())
          erased.push_back(c);
      }
      std::sort(erased.begin(), erased.end());
      BitVector damaged = cw;
      for (int e : erased) damaged.set(e, rng() & 1);  // garbage in the holes
      auto res = erasure_decode(code, damaged, {erased});
      REQUIRE(res.success);
      CHECK(res.codeword == cw);
    }
  }

  SUBCASE("erasures covering a codeword support are ambiguous") {
    auto c1 = construction_1(4, 2).code;
    BitVector cw = random_codeword(c1);
    auto res = erasure_decode(c1, cw, {{0, 5}});
    CHECK_FALSE(res.success);
    CHECK(res.dependency_witness == std::vector<int>{0, 5});
    // the witness really is a codeword support
    CHECK(c1.contains(BitVector::from_support(15, res.dependency_witness)));
  }

  SUBCASE("coordinates out of range are rejected") {
    CHECK_THROWS_AS(erasure_decode(code, BitVector(15), {{15}}),
                    std::invalid_argument);
  }
}
