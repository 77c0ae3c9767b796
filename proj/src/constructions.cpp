#include "lrc/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lrc {

ConstructionResult construction_1(int m, int r) {
  return construction_1(make_field(m), r);
}

ConstructionResult construction_1(std::shared_ptr<const GaloisField> field,
                                  int r) {
  const int n = field->n();
  if (r < 2 || r % 2 != 0)
    throw std::invalid_argument("construction_1: r must be even and >= 2");
  if (n % (r + 1) != 0)
    throw std::invalid_argument("construction_1: r+1 must divide 2^m - 1");

  std::vector<int> zeros;
  for (int j = 0; j < n; j += r + 1) zeros.push_back(j);

  ConstructionResult res{build_code(std::move(field), {n, zeros}),
                         r,
                         1,
                         2,
                         true,
                         0};
  res.claimed_dimension = r * n / (r + 1);
  return res;
}

namespace {

std::vector<int> multiples_of_3(int n) {
  std::vector<int> zs;
  for (int j = 0; j < n; j += 3) zs.push_back(j);
  return zs;
}

void append_coset(std::vector<int>& zs, int n, int j) {
  int x = j % n;
  do {
    zs.push_back(x);
    x = (2 * x) % n;
  } while (x != j % n);
}

void require_even_m(const GaloisField& f, const char* who) {
  if (f.m() % 2 != 0 || f.m() <= 2)
    throw std::invalid_argument(std::string(who) +
                                ": m must be even and > 2");
}

}  // namespace

ConstructionResult construction_2(int m) {
  return construction_2(make_field(m));
}

ConstructionResult construction_2(std::shared_ptr<const GaloisField> field) {
  require_even_m(*field, "construction_2");
  const int m = field->m();
  const int n = field->n();
  std::vector<int> zeros = multiples_of_3(n);
  append_coset(zeros, n, 1);

  ConstructionResult res{build_code(std::move(field), {n, zeros}),
                         2,
                         1,
                         6,
                         m == 4,  // d = 6 is established exactly at m = 4, a lower bound beyond
                         2 * n / 3 - m};
  return res;
}

ConstructionResult construction_d10(int m) {
  return construction_d10(make_field(m));
}

ConstructionResult construction_d10(std::shared_ptr<const GaloisField> field) {
  require_even_m(*field, "construction_d10");
  const int m = field->m();
  const int n = field->n();
  std::vector<int> zeros = multiples_of_3(n);
  append_coset(zeros, n, 1);
  append_coset(zeros, n, n - 1);

  ConstructionResult res{build_code(std::move(field), {n, zeros}),
                         2,
                         1,
                         10,
                         false,
                         2 * n / 3 - 2 * m};
  return res;
}

ConstructionResult construction_available(int m) {
  return construction_available(make_field(m));
}

ConstructionResult construction_available(
    std::shared_ptr<const GaloisField> field) {
  const int m = field->m();
  const int n = field->n();
  if (m % 3 != 0)
    throw std::invalid_argument(
        "construction_available: m must be a multiple of 3");

  // beta = alpha^{n/7} has order 7; its Frobenius coset decides which
  // residues mod 7 carry the roots of h = 1 + y + y^3 in y = x^{n/7}
  FieldElement beta = field->alpha_pow(n / 7);
  FieldElement hb = static_cast<FieldElement>(
      field->mul(field->mul(beta, beta), beta) ^ beta ^ 1);
  const std::vector<int> zero_residues =
      hb == 0 ? std::vector<int>{0, 3, 5, 6} : std::vector<int>{0, 1, 2, 4};

  std::vector<int> zeros;
  for (int j = 0; j < n; ++j)
    if (std::find(zero_residues.begin(), zero_residues.end(), j % 7) !=
        zero_residues.end())
      zeros.push_back(j);

  ConstructionResult res{build_code(std::move(field), {n, zeros}),
                         2,
                         3,
                         4,
                         true,
                         3 * n / 7};

  BinaryPolynomial expected_h =
      BinaryPolynomial::from_support({0, n / 7, 3 * n / 7});
  if (res.code.h() != expected_h)
    throw std::logic_error(
        "construction_available: check polynomial mismatch");
  return res;
}

}  // namespace lrc
