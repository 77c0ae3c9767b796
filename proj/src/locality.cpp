#include "lrc/locality.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace lrc {

namespace {

ParityCheck make_check(int n, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  ParityCheck pc;
  pc.vec = BitVector::from_support(n, support);
  pc.support = std::move(support);
  return pc;
}

void sort_checks(std::vector<ParityCheck>& checks) {
  std::sort(checks.begin(), checks.end(),
            [](const ParityCheck& a, const ParityCheck& b) {
              return a.support < b.support;
            });
}

// all w-subsets of columns whose XOR vanishes, via a hash of the first
// floor(w/2) columns matched against the remaining ceil(w/2); the split at
// the sorted support's midpoint generates each subset exactly once
std::vector<ParityCheck> duals_meet_in_middle(const CyclicCode& code, int w) {
  const int n = code.n();
  BinaryMatrix gen = code.generator_matrix();
  std::vector<BitVector> col(n);
  for (int i = 0; i < n; ++i) col[i] = gen.column(i);

  std::vector<ParityCheck> out;
  auto emit = [&](std::vector<int> sup) { out.push_back(make_check(n, std::move(sup))); };

  if (w == 1) {
    for (int i = 0; i < n; ++i)
      if (col[i].is_zero()) emit({i});
    return out;
  }
  if (w == 2) {
    std::unordered_multimap<std::uint64_t, int> singles;
    for (int i = 0; i < n; ++i) singles.emplace(col[i].fnv_hash(), i);
    for (int j = 0; j < n; ++j) {
      auto range = singles.equal_range(col[j].fnv_hash());
      for (auto it = range.first; it != range.second; ++it)
        if (it->second < j && col[it->second] == col[j])
          emit({it->second, j});
    }
    return out;
  }

  const int a = w / 2;  // 1 for w=3, 2 for w=4,5
  std::unordered_multimap<std::uint64_t, std::pair<int, int>> left;
  if (a == 1) {
    for (int i = 0; i < n; ++i) left.emplace(col[i].fnv_hash(), std::make_pair(i, -1));
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        left.emplace((col[i] ^ col[j]).fnv_hash(), std::make_pair(i, j));
  }

  const int b = w - a;  // 2 or 3
  auto match = [&](const BitVector& sum, int min_right,
                   std::vector<int> right) {
    auto range = left.equal_range(sum.fnv_hash());
    for (auto it = range.first; it != range.second; ++it) {
      auto [i, j] = it->second;
      int hi = (j >= 0) ? j : i;
      if (hi >= min_right) continue;
      BitVector s = col[i];
      if (j >= 0) s ^= col[j];
      if (!(s == sum)) continue;
      std::vector<int> sup = right;
      sup.push_back(i);
      if (j >= 0) sup.push_back(j);
      emit(std::move(sup));
    }
  };

  if (b == 2) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        match(col[p] ^ col[q], p, {p, q});
  } else {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        BitVector pq = col[p] ^ col[q];
        for (int s = q + 1; s < n; ++s)
          match(pq ^ col[s], p, {p, q, s});
      }
  }
  return out;
}

std::vector<ParityCheck> duals_from_row_space(const CyclicCode& code, int w) {
  const int n = code.n();
  const int dual_dim = n - code.k();
  BinaryMatrix par = code.parity_check_matrix();
  std::vector<ParityCheck> out;
  BitVector cur(n);
  std::uint64_t total = std::uint64_t{1} << dual_dim;
  for (std::uint64_t t = 1; t < total; ++t) {
    cur ^= par.row(std::countr_zero(t));
    if (cur.weight() == w) out.push_back(make_check(n, cur.support()));
  }
  return out;
}

}  // namespace

std::vector<ParityCheck> find_low_weight_duals(const CyclicCode& code, int w) {
  if (w < 1) throw std::invalid_argument("find_low_weight_duals: w must be >= 1");
  std::vector<ParityCheck> out;
  if (w <= 5 && code.n() <= 1023) {
    out = duals_meet_in_middle(code, w);
  } else if (code.n() - code.k() <= 28) {
    out = duals_from_row_space(code, w);
  } else {
    throw std::invalid_argument(
        "find_low_weight_duals: out of the exact-enumeration regime "
        "(need w <= 5 and n <= 1023, or n-k <= 28)");
  }
  sort_checks(out);
  return out;
}

LocalityCertificate verify_locality(const CyclicCode& code, int r) {
  LocalityCertificate cert;
  cert.checks = find_low_weight_duals(code, r + 1);
  cert.coordinate_check.assign(code.n(), -1);
  for (int ci = 0; ci < static_cast<int>(cert.checks.size()); ++ci)
    for (int coord : cert.checks[ci].support)
      if (cert.coordinate_check[coord] < 0) cert.coordinate_check[coord] = ci;
  cert.certified = std::none_of(cert.coordinate_check.begin(),
                                cert.coordinate_check.end(),
                                [](int c) { return c < 0; });
  return cert;
}

std::vector<ParityCheck> extract_independent_cover(
    int n, const std::vector<ParityCheck>& checks) {
  std::vector<int> cover_count(n, 0);
  for (const auto& c : checks)
    for (int i : c.support) ++cover_count[i];
  for (int i = 0; i < n; ++i)
    if (cover_count[i] == 0)
      throw std::invalid_argument(
          "extract_independent_cover: input does not cover all coordinates");

  std::vector<ParityCheck> sorted = checks;
  sort_checks(sorted);

  Gf2Basis basis;
  std::vector<ParityCheck> selected;
  for (auto& c : sorted)
    if (basis.insert(c.vec)) selected.push_back(std::move(c));

  // drop, from the back, any check whose coordinates stay covered without it
  std::fill(cover_count.begin(), cover_count.end(), 0);
  for (const auto& c : selected)
    for (int i : c.support) ++cover_count[i];
  std::vector<bool> keep(selected.size(), true);
  for (int ci = static_cast<int>(selected.size()) - 1; ci >= 0; --ci) {
    bool removable = std::all_of(selected[ci].support.begin(),
                                 selected[ci].support.end(),
                                 [&](int i) { return cover_count[i] >= 2; });
    if (removable) {
      keep[ci] = false;
      for (int i : selected[ci].support) --cover_count[i];
    }
  }
  std::vector<ParityCheck> out;
  for (std::size_t ci = 0; ci < selected.size(); ++ci)
    if (keep[ci]) out.push_back(std::move(selected[ci]));
  return out;
}

namespace {

bool exact_cover(const std::vector<ParityCheck>& checks,
                 const std::vector<std::vector<int>>& by_coord,
                 std::vector<bool>& covered, int n,
                 std::vector<int>& chosen) {
  int c = 0;
  while (c < n && covered[c]) ++c;
  if (c == n) return true;
  for (int ci : by_coord[c]) {
    const auto& sup = checks[ci].support;
    if (std::any_of(sup.begin(), sup.end(),
                    [&](int i) { return covered[i]; }))
      continue;
    for (int i : sup) covered[i] = true;
    chosen.push_back(ci);
    if (exact_cover(checks, by_coord, covered, n, chosen)) return true;
    chosen.pop_back();
    for (int i : sup) covered[i] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<RepairGroup>> find_disjoint_groups(
    const CyclicCode& code, int r) {
  const int n = code.n();
  if (n % (r + 1) != 0)
    throw std::invalid_argument("find_disjoint_groups: r+1 must divide n");
  const int s = n / (r + 1);

  // all four construction families carry the arithmetic pattern; try it first
  std::vector<RepairGroup> pattern;
  bool ok = true;
  for (int i = 0; i < s && ok; ++i) {
    std::vector<int> coords;
    for (int j = 0; j <= r; ++j) coords.push_back(i + j * s);
    if (!code.dual_contains(BitVector::from_support(n, coords))) ok = false;
    pattern.push_back({std::move(coords)});
  }
  if (ok) return pattern;

  std::vector<ParityCheck> checks = find_low_weight_duals(code, r + 1);
  std::vector<std::vector<int>> by_coord(n);
  for (int ci = 0; ci < static_cast<int>(checks.size()); ++ci)
    for (int i : checks[ci].support) by_coord[i].push_back(ci);

  std::vector<bool> covered(n, false);
  std::vector<int> chosen;
  if (!exact_cover(checks, by_coord, covered, n, chosen)) return std::nullopt;

  std::vector<RepairGroup> groups;
  for (int ci : chosen) groups.push_back({checks[ci].support});
  std::sort(groups.begin(), groups.end(),
            [](const RepairGroup& a, const RepairGroup& b) {
              return a.coordinates < b.coordinates;
            });
  return groups;
}

namespace {

// supports intersect exactly in {i}
bool meet_only_at(const ParityCheck& a, const ParityCheck& b, int i) {
  std::size_t ai = 0, bi = 0;
  while (ai < a.support.size() && bi < b.support.size()) {
    if (a.support[ai] == b.support[bi]) {
      if (a.support[ai] != i) return false;
      ++ai;
      ++bi;
    } else if (a.support[ai] < b.support[bi]) {
      ++ai;
    } else {
      ++bi;
    }
  }
  return true;
}

}  // namespace

AvailabilityResult verify_availability(const CyclicCode& code, int r, int t) {
  if (t < 1) throw std::invalid_argument("verify_availability: t must be >= 1");
  const int n = code.n();
  std::vector<ParityCheck> checks = find_low_weight_duals(code, r + 1);
  std::vector<std::vector<int>> by_coord(n);
  for (int ci = 0; ci < static_cast<int>(checks.size()); ++ci)
    for (int i : checks[ci].support) by_coord[i].push_back(ci);

  AvailabilityResult res;
  res.certificate.t = t;
  res.certificate.per_coordinate.resize(n);

  for (int i = 0; i < n; ++i) {
    const auto& cand = by_coord[i];
    std::vector<int> found;

    if (t <= 3) {
      // exhaustive over t-subsets of the candidates
      int c = static_cast<int>(cand.size());
      if (t == 1 && c >= 1) found = {cand[0]};
      if (t == 2) {
        for (int a = 0; a < c && found.empty(); ++a)
          for (int b = a + 1; b < c && found.empty(); ++b)
            if (meet_only_at(checks[cand[a]], checks[cand[b]], i))
              found = {cand[a], cand[b]};
      }
      if (t == 3) {
        for (int a = 0; a < c && found.empty(); ++a)
          for (int b = a + 1; b < c && found.empty(); ++b) {
            if (!meet_only_at(checks[cand[a]], checks[cand[b]], i)) continue;
            for (int d = b + 1; d < c; ++d)
              if (meet_only_at(checks[cand[a]], checks[cand[d]], i) &&
                  meet_only_at(checks[cand[b]], checks[cand[d]], i)) {
                found = {cand[a], cand[b], cand[d]};
                break;
              }
          }
      }
    } else {
      res.certificate.greedy_used = true;
      for (int ci : cand) {
        bool compatible = std::all_of(found.begin(), found.end(), [&](int f) {
          return meet_only_at(checks[f], checks[ci], i);
        });
        if (compatible) found.push_back(ci);
      }
      if (static_cast<int>(found.size()) < t) found.clear();
    }

    if (static_cast<int>(found.size()) < t) {
      res.certified = false;
      res.failed_coordinate = i;
      return res;
    }
    for (int ci : found) res.certificate.per_coordinate[i].push_back(checks[ci]);
  }
  res.certified = true;
  return res;
}

std::vector<F4> contract_word(const BitVector& word,
                              const std::vector<RepairGroup>& groups) {
  static const F4 table[4] = {F4::zero, F4::omega, F4::omega_bar, F4::one};
  std::vector<F4> out;
  out.reserve(groups.size());
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi].coordinates;
    int b0 = word.get(g[0]), b1 = word.get(g[1]), b2 = word.get(g[2]);
    if ((b0 ^ b1 ^ b2) != 0)
      throw std::domain_error(
          "contract_word: odd-parity projection in group " +
          std::to_string(gi));
    // 000->0, 011->1, 101->omega, 110->omega-bar
    out.push_back(table[(b1 << 1) | b2]);
  }
  return out;
}

F4Contraction contract_to_f4(const CyclicCode& code,
                             const std::vector<RepairGroup>& groups,
                             const MinDistanceOptions& opts) {
  const int n = code.n();
  if (n % 3 != 0)
    throw std::invalid_argument("contract_to_f4: n must be divisible by 3");
  const int s = n / 3;
  if (static_cast<int>(groups.size()) != s)
    throw std::invalid_argument("contract_to_f4: need n/3 groups");
  for (int i = 0; i < s; ++i) {
    const auto& g = groups[i].coordinates;
    if (g != std::vector<int>{i, i + s, i + 2 * s})
      throw std::invalid_argument(
          "contract_to_f4: groups must follow the {i, i+n/3, i+2n/3} pattern");
    if (!code.dual_contains(BitVector::from_support(n, g)))
      throw std::domain_error(
          "contract_to_f4: group " + std::to_string(i) +
          " does not carry a parity check");
  }

  F4Contraction out;
  out.length = s;
  out.log2_size = code.k();

  const int k = code.k();
  if (k < 63 && (std::uint64_t{1} << k) <= opts.budget) {
    // walk the binary code and measure image weights directly
    std::vector<BitVector> rows;
    BitVector base = code.g().to_bits(n);
    for (int i = 0; i < k; ++i) rows.push_back(base.cyclic_shift(i));
    BitVector cur(n);
    int best = n;
    BitVector best_word;
    std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t t = 1; t < total; ++t) {
      cur ^= rows[std::countr_zero(t)];
      std::vector<F4> img = contract_word(cur, groups);
      int w = 0;
      for (F4 sym : img)
        if (sym != F4::zero) ++w;
      if (w < best) {
        best = w;
        best_word = cur;
      }
    }
    out.distance = {best, best, true, best_word};
    out.enumerated = true;
  } else {
    // every nonzero projection has binary weight exactly 2, so the image
    // distance is half the binary distance
    DistanceEstimate bin = min_distance(code, opts);
    out.distance.lower = (bin.lower + 1) / 2;
    out.distance.upper = bin.upper / 2;
    out.distance.exact = bin.exact;
    out.distance.witness = bin.witness;
    out.enumerated = false;
  }
  return out;
}

}  // namespace lrc
