#include "lrc/analyze.hpp"

#include <algorithm>

namespace lrc {

namespace {

BoundVerdict verdict_for_upper_bound(long long measured, long long bound,
                                     bool measured_exact) {
  if (measured > bound) return BoundVerdict::violated;
  if (!measured_exact) return BoundVerdict::consistent_not_confirmed;
  return measured == bound ? BoundVerdict::met_with_equality
                           : BoundVerdict::slack;
}

bool groups_follow_pattern(const std::vector<RepairGroup>& groups, int n,
                           int r) {
  const int s = n / (r + 1);
  if (static_cast<int>(groups.size()) != s) return false;
  for (int i = 0; i < s; ++i) {
    std::vector<int> expect;
    for (int j = 0; j <= r; ++j) expect.push_back(i + j * s);
    if (groups[i].coordinates != expect) return false;
  }
  return true;
}

}  // namespace

AnalysisReport analyze_code(const CyclicCode& code, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.n = code.n();
  rep.k = code.k();
  rep.seed = opts.seed;
  rep.budget = opts.budget;
  rep.restarts = opts.restarts;

  MinDistanceOptions dopts{opts.budget, opts.seed, opts.restarts};
  rep.bch = bch_bound(code);
  rep.distance = min_distance(code, dopts);

  if (opts.locality_r) {
    LocalityCertificate cert = verify_locality(code, *opts.locality_r);
    rep.locality_certified = cert.certified;
    rep.locality_r = *opts.locality_r;
  } else {
    for (int r = 1; r <= 4; ++r) {
      LocalityCertificate cert = verify_locality(code, r);
      if (cert.certified) {
        rep.locality_certified = true;
        rep.locality_r = r;
        break;
      }
    }
  }

  if (rep.locality_certified && rep.n % (rep.locality_r + 1) == 0)
    rep.disjoint_groups = find_disjoint_groups(code, rep.locality_r);

  if (rep.locality_certified) {
    int t_target = opts.availability_t.value_or(3);
    for (int t = t_target; t >= 1; --t) {
      AvailabilityResult avail = verify_availability(code, rep.locality_r, t);
      if (avail.certified) {
        rep.availability_certified = true;
        rep.availability_t = t;
        break;
      }
      if (opts.availability_t) break;  // explicit t: no fallback
    }
  }

  if (rep.locality_certified && rep.locality_r == 2 && rep.n % 3 == 0 &&
      rep.disjoint_groups &&
      groups_follow_pattern(*rep.disjoint_groups, rep.n, 2))
    rep.f4 = contract_to_f4(code, *rep.disjoint_groups, dopts);

  // bounds
  const int m = code.field().m();
  BoundReport& b = rep.bounds;
  if (rep.locality_certified) {
    b.singleton_d_max = lrc_singleton_bound(rep.n, rep.k, rep.locality_r);
    if (rep.distance.lower > b.singleton_d_max)
      b.singleton = BoundVerdict::violated;
    else if (!rep.distance.exact)
      b.singleton = BoundVerdict::consistent_not_confirmed;
    else
      b.singleton = rep.distance.lower == b.singleton_d_max
                        ? BoundVerdict::met_with_equality
                        : BoundVerdict::slack;
  }

  bool contraction_premise = rep.locality_certified && rep.locality_r == 2 &&
                             rep.disjoint_groups.has_value() && m > 2 &&
                             m % 2 == 0;
  if (contraction_premise && rep.distance.lower >= 6) {
    b.thm1_k_max = thm1_dimension_bound(m);
    b.thm1 = verdict_for_upper_bound(rep.k, *b.thm1_k_max, rep.distance.exact);
  }
  if (contraction_premise && rep.distance.lower >= 10) {
    b.thm2_k_max = thm2_dimension_bound(
        m, rep.k % 2 == 0 ? KParity::even : KParity::any);
    b.thm2 = verdict_for_upper_bound(rep.k, *b.thm2_k_max, rep.distance.exact);
  }
  if (rep.f4) {
    // a confirmed lower bound on the image distance is enough for the
    // packing bound; exactness only upgrades the verdict
    int d4 = rep.f4->distance.lower;
    if (d4 == 3 || d4 == 5) {
      b.f4_hamming_k_max = f4_hamming_size_bound(rep.f4->length, d4);
      b.f4_hamming = verdict_for_upper_bound(rep.k, *b.f4_hamming_k_max,
                                             rep.f4->distance.exact);
    }
  }
  return rep;
}

nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["distance"] = {{"lower", rep.distance.lower},
                   {"upper", rep.distance.upper},
                   {"exact", rep.distance.exact}};
  j["bch_bound"] = rep.bch;
  j["locality"] = {
      {"r", rep.locality_certified ? nlohmann::ordered_json(rep.locality_r)
                                   : nlohmann::ordered_json(nullptr)},
      {"certified", rep.locality_certified}};
  if (rep.disjoint_groups) {
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& g : *rep.disjoint_groups) groups.push_back(g.coordinates);
    j["disjoint_groups"] = groups;
  } else {
    j["disjoint_groups"] = nullptr;
  }
  j["availability"] = {{"t", rep.availability_t},
                       {"certified", rep.availability_certified}};
  if (rep.f4) {
    j["f4_image"] = {{"length", rep.f4->length},
                     {"log2_size", rep.f4->log2_size},
                     {"distance", rep.f4->distance.upper},
                     {"exact", rep.f4->distance.exact}};
  } else {
    j["f4_image"] = nullptr;
  }
  j["seeds"] = {{"seed", rep.seed},
                {"budget", rep.budget},
                {"restarts", rep.restarts}};

  nlohmann::ordered_json bounds;
  auto opt = [](const std::optional<long long>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  bounds["singleton_d_max"] = rep.bounds.singleton_d_max;
  bounds["thm1_k_max"] = opt(rep.bounds.thm1_k_max);
  bounds["thm2_k_max"] = opt(rep.bounds.thm2_k_max);
  bounds["f4_hamming_k_max"] = opt(rep.bounds.f4_hamming_k_max);
  bounds["verdicts"] = {{"singleton", to_string(rep.bounds.singleton)},
                        {"thm1", to_string(rep.bounds.thm1)},
                        {"thm2", to_string(rep.bounds.thm2)},
                        {"f4_hamming", to_string(rep.bounds.f4_hamming)}};
  j["bounds"] = bounds;
  return j;
}

}  // namespace lrc
