#include "lrc/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

SearchOutput search_defining_sets(int m, const SearchOptions& opts) {
  auto field = make_field(m);
  const int n = field->n();
  std::vector<CyclotomicCoset> cosets = cyclotomic_cosets(n);
  const int nc = static_cast<int>(cosets.size());
  if (nc > 62)
    throw std::invalid_argument("search_defining_sets: too many cosets");

  // keep the per-code distance work bounded during a sweep
  MinDistanceOptions dopts;
  dopts.budget = std::min<std::uint64_t>(opts.budget, std::uint64_t{1} << 20);
  dopts.seed = opts.seed;
  dopts.restarts = 64;

  SearchOutput out;
  std::uint64_t mask_end = std::uint64_t{1} << nc;
  std::uint64_t examined = 0;
  for (std::uint64_t mask = 1; mask + 1 < mask_end; ++mask) {
    if (examined >= opts.budget) {
      out.truncated = true;
      break;
    }
    ++examined;

    std::vector<int> zeros;
    for (int c = 0; c < nc; ++c)
      if ((mask >> c) & 1)
        zeros.insert(zeros.end(), cosets[c].members.begin(),
                     cosets[c].members.end());
    std::sort(zeros.begin(), zeros.end());

    CyclicCode code = build_code(field, {n, zeros});
    LocalityCertificate loc = verify_locality(code, opts.r);
    if (opts.require_locality && !loc.certified) continue;

    SearchResult res;
    res.zeros = code.zeros();
    res.n = n;
    res.k = code.k();
    res.distance = min_distance(code, dopts);
    res.locality_certified = loc.certified;
    if (loc.certified) {
      for (int t = 3; t >= 1; --t)
        if (verify_availability(code, opts.r, t).certified) {
          res.availability_t = t;
          break;
        }
      res.bounds.singleton_d_max = lrc_singleton_bound(n, res.k, opts.r);
      if (res.distance.lower > res.bounds.singleton_d_max)
        res.bounds.singleton = BoundVerdict::violated;
      else if (!res.distance.exact)
        res.bounds.singleton = BoundVerdict::consistent_not_confirmed;
      else
        res.bounds.singleton =
            res.distance.lower == res.bounds.singleton_d_max
                ? BoundVerdict::met_with_equality
                : BoundVerdict::slack;
    }
    out.results.push_back(std::move(res));
  }

  std::sort(out.results.begin(), out.results.end(),
            [](const SearchResult& a, const SearchResult& b) {
              if (a.distance.lower != b.distance.lower)
                return a.distance.lower > b.distance.lower;
              if (a.k != b.k) return a.k > b.k;
              return a.zeros < b.zeros;
            });
  return out;
}

nlohmann::ordered_json search_result_to_json(const SearchResult& r) {
  nlohmann::ordered_json j;
  j["zeros"] = r.zeros;
  j["n"] = r.n;
  j["k"] = r.k;
  j["distance"] = {{"lower", r.distance.lower},
                   {"upper", r.distance.upper},
                   {"exact", r.distance.exact}};
  j["locality_certified"] = r.locality_certified;
  j["availability_t"] = r.availability_t;
  j["bounds"] = {{"singleton_d_max", r.bounds.singleton_d_max},
                 {"singleton", to_string(r.bounds.singleton)}};
  return j;
}

}  // namespace lrc
