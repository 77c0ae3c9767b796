#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lrc/gf2m.hpp"

using namespace lrc;

namespace {

// shift-and-reduce product, independent of the log/antilog tables
FieldElement slow_mul(int m, std::uint32_t poly_mask, FieldElement a,
                      FieldElement b) {
  std::uint32_t acc = 0, aa = a;
  for (std::uint32_t bb = b; bb; bb >>= 1) {
    if (bb & 1) acc ^= aa;
    aa <<= 1;
    if (aa >> m) aa ^= poly_mask;
  }
  return static_cast<FieldElement>(acc);
}

std::uint32_t mask_of(const BinaryPolynomial& p) {
  std::uint32_t m = 0;
  for (int e : p.support()) m |= std::uint32_t{1} << e;
  return m;
}

}  // namespace

TEST_CASE("exp table matches the shift-and-reduce oracle (m = 4)") {
  auto f = make_field(4);
  CHECK(f->n() == 15);
  std::uint32_t pm = mask_of(f->primitive_poly());
  CHECK(f->alpha_pow(0) == 1);
  for (int i = 0; i < 15; ++i)
    CHECK(f->alpha_pow(i + 1) == slow_mul(4, pm, f->alpha_pow(i), 2));
  CHECK(f->alpha_pow(15) == 1);            // period exactly n
  CHECK(f->alpha_pow(4) == 0b0011);        // alpha^4 = alpha + 1
  for (int j = 1; j < 15; ++j) CHECK(f->alpha_pow(j) != 1);
}

TEST_CASE("GF(4) is the exhaustive two-bit field") {
  auto f = make_field(2);
  CHECK(f->n() == 3);
  CHECK(f->alpha_pow(0) == 1);
  CHECK(f->alpha_pow(1) == 2);
  CHECK(f->alpha_pow(2) == 3);  // alpha + 1
  // full multiplication table against the oracle
  std::uint32_t pm = mask_of(f->primitive_poly());
  for (FieldElement a = 0; a < 4; ++a)
    for (FieldElement b = 0; b < 4; ++b)
      CHECK(f->mul(a, b) == slow_mul(2, pm, a, b));
}

TEST_CASE("non-primitive polynomial is rejected") {
  // x^4+x^3+x^2+x+1 is irreducible but alpha has order 5
  auto p = BinaryPolynomial::from_support({0, 1, 2, 3, 4});
  std::uint32_t pm = mask_of(p);
  FieldElement x5 = 1;
  for (int i = 0; i < 5; ++i) x5 = slow_mul(4, pm, x5, 2);
  CHECK(x5 == 1);  // order-5 confirmed by the oracle
  CHECK_THROWS_AS(GaloisField(4, p), std::invalid_argument);
  // reducible polynomial
  CHECK_THROWS_AS(GaloisField(4, BinaryPolynomial::from_support({0, 4})),
                  std::invalid_argument);
}

TEST_CASE("field construction preconditions") {
  CHECK_THROWS_AS(make_field(1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(17), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(4, BinaryPolynomial::from_support({0, 1, 3})),
                  std::invalid_argument);  // degree != m
}

TEST_CASE("every default polynomial is primitive (m = 2..16)") {
  for (int m = 2; m <= 16; ++m) {
    auto f = make_field(m);
    CHECK(f->n() == (1 << m) - 1);
    CHECK(f->alpha_pow(f->n()) == 1);
  }
  // fixed defaults for the even degrees
  CHECK(mask_of(make_field(2)->primitive_poly()) == 0x7u);
  CHECK(mask_of(make_field(4)->primitive_poly()) == 0x13u);
  CHECK(mask_of(make_field(6)->primitive_poly()) == 0x43u);
  CHECK(mask_of(make_field(8)->primitive_poly()) == 0x11du);
  CHECK(mask_of(make_field(10)->primitive_poly()) == 0x409u);
  CHECK(mask_of(make_field(12)->primitive_poly()) == 0x1053u);
}

TEST_CASE("multiplication") {
  auto f = make_field(4);
  std::uint32_t pm = mask_of(f->primitive_poly());
  CHECK(f->mul(1, 2) == 2);                  // 1 * x = x
  CHECK(f->mul(0, f->alpha_pow(5)) == 0);
  FieldElement a2 = f->alpha_pow(2);
  CHECK(f->mul(a2, a2) == 0b0011);           // alpha^4 = alpha + 1
  for (FieldElement a = 0; a < 16; ++a)
    for (FieldElement b = 0; b < 16; ++b)
      CHECK(f->mul(a, b) == slow_mul(4, pm, a, b));
}

TEST_CASE("inverses and powers") {
  for (int m : {4, 6}) {
    auto f = make_field(m);
    for (FieldElement a = 1; a <= f->n(); ++a)
      CHECK(f->mul(a, f->inv(a)) == 1);
  }
  auto f = make_field(4);
  CHECK_THROWS_AS(f->inv(0), std::invalid_argument);
  CHECK(f->pow(f->alpha_pow(1), 15) == 1);
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->pow(0, 3) == 0);
}

TEST_CASE("cyclotomic cosets") {
  auto cs = cyclotomic_cosets(15);
  REQUIRE(cs.size() == 5);
  CHECK(cs[0].members == std::vector<int>{0});
  CHECK(cs[1].members == std::vector<int>{1, 2, 4, 8});
  CHECK(cs[2].members == std::vector<int>{3, 6, 9, 12});
  CHECK(cs[3].members == std::vector<int>{5, 10});
  CHECK(cs[4].members == std::vector<int>{7, 11, 13, 14});

  auto c3 = cyclotomic_cosets(3);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].members == std::vector<int>{0});
  CHECK(c3[1].members == std::vector<int>{1, 2});

  auto c1 = cyclotomic_cosets(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].members == std::vector<int>{0});

  CHECK_THROWS_AS(cyclotomic_cosets(14), std::invalid_argument);
}

TEST_CASE("cosets partition the residues and sizes divide m") {
  for (int m : {4, 6, 8}) {
    int n = (1 << m) - 1;
    auto cs = cyclotomic_cosets(n);
    std::set<int> all;
    for (const auto& c : cs) {
      CHECK(c.representative == c.members.front());
      CHECK(m % static_cast<int>(c.members.size()) == 0);
      for (int j : c.members) {
        CHECK(all.insert(j).second);  // disjoint
        CHECK(std::binary_search(c.members.begin(), c.members.end(),
                                 (2 * j) % n));
      }
    }
    CHECK(static_cast<int>(all.size()) == n);
  }
}

TEST_CASE("minimal polynomials over GF(16)") {
  auto f = make_field(4);
  CHECK(minimal_polynomial(*f, 0) == BinaryPolynomial::from_support({0, 1}));
  // expand (x - alpha^5)(x - alpha^10): alpha^5*alpha^10 = 1 and
  // alpha^5 + alpha^10 = 1, so x^2 + x + 1
  CHECK(minimal_polynomial(*f, 5) ==
        BinaryPolynomial::from_support({0, 1, 2}));
  CHECK(minimal_polynomial(*f, 1) == f->primitive_poly());
}

TEST_CASE("minimal polynomials multiply to x^n - 1 and respect Frobenius") {
  for (int m : {4, 6}) {
    auto f = make_field(m);
    int n = f->n();
    auto prod = BinaryPolynomial::one();
    for (const auto& c : cyclotomic_cosets(n)) {
      auto mp = minimal_polynomial(*f, c.representative);
      CHECK(mp.degree() == static_cast<int>(c.members.size()));
      prod = prod * mp;
      for (int j = 0; j < n; ++j) {
        bool vanishes = poly_eval(mp, *f, f->alpha_pow(j)) == 0;
        bool in_coset = std::binary_search(c.members.begin(), c.members.end(), j);
        CHECK(vanishes == in_coset);  // zero set closed under squaring
      }
    }
    CHECK(prod == xn_minus_one(n));
  }
}
