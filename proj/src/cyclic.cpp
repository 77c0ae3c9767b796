#include "lrc/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace lrc {

bool two_closed(const DefiningSet& s) {
  std::vector<bool> in(s.n, false);
  for (int j : s.zeros) {
    if (j < 0 || j >= s.n) return false;
    in[j] = true;
  }
  for (int j : s.zeros)
    if (!in[(2 * j) % s.n]) return false;
  return true;
}

CyclicCode build_code(std::shared_ptr<const GaloisField> field,
                      const DefiningSet& zeros) {
  const int n = field->n();
  if (zeros.n != n)
    throw std::invalid_argument("build_code: defining-set length mismatch");

  std::vector<int> zs = zeros.zeros;
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  for (int j : zs)
    if (j < 0 || j >= n)
      throw std::invalid_argument("build_code: zero exponent out of range");
  if (zs.empty() || static_cast<int>(zs.size()) >= n)
    throw std::invalid_argument(
        "build_code: defining set must be nonempty and proper");
  if (!two_closed({n, zs}))
    throw std::invalid_argument(
        "build_code: defining set is not closed under doubling mod n");

  std::vector<bool> in(n, false);
  for (int j : zs) in[j] = true;

  BinaryPolynomial g = BinaryPolynomial::one();
  std::vector<bool> done(n, false);
  for (int j : zs) {
    if (done[j]) continue;
    int x = j;
    do {
      done[x] = true;
      x = (2 * x) % n;
    } while (x != j);
    g = g * minimal_polynomial(*field, j);
  }

  auto dr = BinaryPolynomial::divrem(xn_minus_one(n), g);
  if (!dr.remainder.is_zero())
    throw std::logic_error("build_code: g does not divide x^n - 1");

  CyclicCode code;
  code.field_ = std::move(field);
  code.zeros_ = std::move(zs);
  code.g_ = std::move(g);
  code.h_ = std::move(dr.quotient);
  code.k_ = n - code.g_.degree();

  // g must vanish exactly on the defining set (skipped for large fields
  // where the n * deg g evaluation sweep gets expensive)
  if (n <= 4095) {
    for (int j = 0; j < n; ++j) {
      bool zero = poly_eval(code.g_, code.field(), code.field().alpha_pow(j)) == 0;
      if (zero != in[j])
        throw std::logic_error("build_code: zero set mismatch");
    }
  }
  return code;
}

BinaryMatrix CyclicCode::generator_matrix() const {
  BinaryMatrix mat(k_, n());
  BitVector base = g_.to_bits(n());
  for (int i = 0; i < k_; ++i) mat.row(i) = base.cyclic_shift(i);
  return mat;
}

BinaryMatrix CyclicCode::parity_check_matrix() const {
  int n_ = n();
  BinaryMatrix mat(n_ - k_, n_);
  BitVector base = h_.reciprocal().to_bits(n_);
  for (int i = 0; i < n_ - k_; ++i) mat.row(i) = base.cyclic_shift(i);
  return mat;
}

BitVector CyclicCode::encode(const BitVector& message) const {
  if (message.size() != k_)
    throw std::invalid_argument("encode: message length must equal k");
  return (BinaryPolynomial::from_bits(message) * g_).to_bits(n());
}

bool CyclicCode::contains(const BitVector& word) const {
  if (word.size() != n()) return false;
  return (BinaryPolynomial::from_bits(word) % g_).is_zero();
}

bool CyclicCode::dual_contains(const BitVector& word) const {
  if (word.size() != n()) return false;
  return (BinaryPolynomial::from_bits(word) % h_.reciprocal()).is_zero();
}

int bch_bound(const CyclicCode& code) {
  int n = code.n();
  std::vector<bool> in(n, false);
  for (int j : code.zeros()) in[j] = true;
  int best = 0, run = 0;
  for (int i = 0; i < 2 * n; ++i) {
    if (in[i % n]) {
      run = std::min(run + 1, n);
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return best + 1;
}

namespace {

// best (weight, lexicographically smallest support) tracker
struct BestWord {
  int weight = -1;
  BitVector word;

  void offer(const BitVector& w, int wt) {
    if (wt == 0) return;
    if (weight < 0 || wt < weight ||
        (wt == weight && BitVector::support_less(w, word))) {
      weight = wt;
      word = w;
    }
  }
};

// exhaustive Gray-code walk over all 2^k messages, one row XOR per step
void enumerate_all(const std::vector<BitVector>& rows, BestWord& best) {
  int k = static_cast<int>(rows.size());
  BitVector cur(rows[0].size());
  std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t t = 1; t < total; ++t) {
    cur ^= rows[std::countr_zero(t)];
    best.offer(cur, cur.weight());
  }
}

void sweep_combinations(const std::vector<BitVector>& rows, int max_size,
                        BestWord& best) {
  int k = static_cast<int>(rows.size());
  // size 1
  for (int a = 0; a < k; ++a) best.offer(rows[a], rows[a].weight());
  if (max_size >= 2) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        BitVector w = rows[a] ^ rows[b];
        best.offer(w, w.weight());
      }
  }
  if (max_size >= 3) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        BitVector ab = rows[a] ^ rows[b];
        for (int c = b + 1; c < k; ++c) {
          BitVector w = ab ^ rows[c];
          best.offer(w, w.weight());
        }
      }
  }
  if (max_size >= 4) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        BitVector ab = rows[a] ^ rows[b];
        for (int c = b + 1; c < k; ++c) {
          BitVector abc = ab ^ rows[c];
          for (int d = c + 1; d < k; ++d) {
            BitVector w = abc ^ rows[d];
            best.offer(w, w.weight());
          }
        }
      }
  }
}

// number of XORs a combination sweep of the given size would cost
double sweep_cost(int k, int size) {
  double c = 0, binom = 1;
  for (int s = 1; s <= size; ++s) {
    binom = binom * (k - s + 1) / s;
    c += binom;
  }
  return c;
}

void random_information_sets(const std::vector<BitVector>& rows0,
                             const MinDistanceOptions& opts, BestWord& best) {
  int k = static_cast<int>(rows0.size());
  int n = rows0[0].size();
  std::mt19937_64 rng(opts.seed);

  int depth = 3;
  while (depth > 1 &&
         sweep_cost(k, depth) * opts.restarts > 4.0 * 1e8)
    --depth;

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int it = 0; it < opts.restarts; ++it) {
    // portable Fisher-Yates so that results do not depend on the standard
    // library's shuffle implementation
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(perm[i], perm[j]);
    }
    std::vector<BitVector> rows = rows0;
    int r = 0;
    for (int ci = 0; ci < n && r < k; ++ci) {
      int c = perm[ci];
      int piv = -1;
      for (int i = r; i < k; ++i)
        if (rows[i].get(c)) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[r], rows[piv]);
      for (int i = 0; i < k; ++i)
        if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
      ++r;
    }
    sweep_combinations(rows, depth, best);
  }
}

}  // namespace

DistanceEstimate min_distance(const CyclicCode& code,
                              const MinDistanceOptions& opts) {
  int k = code.k();
  std::vector<BitVector> rows;
  rows.reserve(k);
  BitVector base = code.g().to_bits(code.n());
  for (int i = 0; i < k; ++i) rows.push_back(base.cyclic_shift(i));

  DistanceEstimate est;
  BestWord best;
  if (k < 63 && (std::uint64_t{1} << k) <= opts.budget) {
    enumerate_all(rows, best);
    est.lower = est.upper = best.weight;
    est.exact = true;
    est.witness = best.word;
    return est;
  }

  est.lower = bch_bound(code);
  int sweep = 4;
  while (sweep > 1 && sweep_cost(k, sweep) > 1e8) --sweep;
  sweep_combinations(rows, sweep, best);
  random_information_sets(rows, opts, best);
  est.upper = best.weight;
  est.witness = best.word;
  est.exact = (est.lower == est.upper);
  return est;
}

CyclicCode dual_code(const CyclicCode& code) {
  int n = code.n();
  std::vector<bool> in(n, false);
  for (int j : code.zeros()) in[j] = true;
  std::vector<int> dz;
  for (int j = 0; j < n; ++j)
    if (!in[j]) dz.push_back((n - j) % n);
  std::sort(dz.begin(), dz.end());
  return build_code(code.field_ptr(), {n, dz});
}

}  // namespace lrc
