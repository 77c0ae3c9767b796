#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrc/analyze.hpp"
#include "lrc/constructions.hpp"
#include "lrc/io.hpp"
#include "lrc/repair.hpp"
#include "lrc/search.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::shared_ptr<const lrc::GaloisField> field_for(int m,
                                                  const std::string& poly_hex) {
  if (poly_hex.empty()) return lrc::make_field(m);
  return lrc::make_field(m, lrc::BinaryPolynomial::from_hex(poly_hex));
}

int cmd_construct(const std::string& family, int m, int r,
                  const std::string& poly_hex, const std::string& out_path) {
  lrc::ConstructionResult res = [&] {
    auto field = field_for(m, poly_hex);
    if (family == "c1") return lrc::construction_1(field, r);
    if (family == "c2") return lrc::construction_2(field);
    if (family == "d10") return lrc::construction_d10(field);
    if (family == "avail") return lrc::construction_available(field);
    throw std::invalid_argument("family must be one of c1|c2|d10|avail");
  }();

  json j = lrc::code_to_json(res.code);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << j.dump(2) << "\n";
  }
  std::cerr << "[" << res.code.n() << ", " << res.code.k() << "] claimed d "
            << (res.distance_is_exact ? "= " : ">= ") << res.claimed_distance
            << ", r = " << res.locality_r << ", t = " << res.availability_t
            << "\n";
  return kExitOk;
}

void print_report_table(const lrc::AnalysisReport& rep, std::ostream& os) {
  os << "n " << rep.n << "  k " << rep.k << "  d ";
  if (rep.distance.exact)
    os << rep.distance.lower;
  else
    os << "[" << rep.distance.lower << ", " << rep.distance.upper << "]";
  os << "  bch " << rep.bch << "\n";
  os << "locality: "
     << (rep.locality_certified ? "r = " + std::to_string(rep.locality_r)
                                : std::string("uncertified"))
     << "  availability: t = " << rep.availability_t << "\n";
  os << "disjoint groups: "
     << (rep.disjoint_groups ? std::to_string(rep.disjoint_groups->size())
                             : std::string("none"))
     << "\n";
  if (rep.f4)
    os << "gf4 image: length " << rep.f4->length << ", log2 size "
       << rep.f4->log2_size << ", distance " << rep.f4->distance.upper
       << "\n";
  os << "bounds: singleton " << lrc::to_string(rep.bounds.singleton)
     << " (d <= " << rep.bounds.singleton_d_max << ")";
  if (rep.bounds.thm1_k_max)
    os << ", thm1 " << lrc::to_string(rep.bounds.thm1) << " (k <= "
       << *rep.bounds.thm1_k_max << ")";
  if (rep.bounds.thm2_k_max)
    os << ", thm2 " << lrc::to_string(rep.bounds.thm2) << " (k <= "
       << *rep.bounds.thm2_k_max << ")";
  if (rep.bounds.f4_hamming_k_max)
    os << ", gf4 packing " << lrc::to_string(rep.bounds.f4_hamming)
       << " (k <= " << *rep.bounds.f4_hamming_k_max << ")";
  os << "\n";
}

int cmd_analyze(const std::string& path, const lrc::AnalyzeOptions& opts,
                const std::string& format) {
  lrc::CyclicCode code = lrc::read_code_file(path);
  lrc::AnalysisReport rep = lrc::analyze_code(code, opts);
  if (format == "table")
    print_report_table(rep, std::cout);
  else
    std::cout << lrc::report_to_json(rep).dump(2) << "\n";
  print_report_table(rep, std::cerr);
  return rep.bounds.any_violation() ? kExitViolation : kExitOk;
}

json trace_to_json(const lrc::RepairTrace& t, const char* method) {
  json j;
  j["coordinate"] = t.coordinate;
  j["reads"] = t.reads;
  j["value"] = static_cast<int>(t.value);
  j["method"] = method;
  return j;
}

int cmd_repair(const std::string& path, int coordinate,
               const std::vector<int>& busy, const std::vector<int>& erase,
               const std::string& message_hex, std::uint64_t seed) {
  lrc::CyclicCode code = lrc::read_code_file(path);

  lrc::BitVector msg(code.k());
  if (message_hex.empty()) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < code.k(); ++i) msg.set(i, rng() & 1);
  } else {
    msg = lrc::BinaryPolynomial::from_hex(message_hex).to_bits(code.k());
  }
  lrc::BitVector codeword = code.encode(msg);

  lrc::LocalityCertificate loc;
  int r = 1;
  for (; r <= 4; ++r) {
    loc = lrc::verify_locality(code, r);
    if (loc.certified) break;
  }
  if (!loc.certified) {
    std::cerr << "code has no certified locality r <= 4\n";
    return kExitViolation;
  }

  if (coordinate >= 0) {
    lrc::AvailabilityResult avail;
    for (int t = 3; t >= 1; --t) {
      avail = lrc::verify_availability(code, r, t);
      if (avail.certified) break;
    }
    if (!avail.certified) {
      std::cerr << "availability certification failed\n";
      return kExitViolation;
    }
    auto check = lrc::choose_repair_set(avail.certificate, coordinate, busy);
    if (!check) {
      std::cerr << "all repair sets for coordinate " << coordinate
                << " are busy\n";
      return kExitViolation;
    }
    auto trace =
        lrc::local_repair(codeword, {{coordinate}}, coordinate, *check);
    std::cout << trace_to_json(trace, "local").dump() << "\n";
    std::cerr << "repaired coordinate " << coordinate << " from "
              << trace.reads.size() << " reads\n";
    return trace.value == codeword.get(coordinate) ? kExitOk : kExitViolation;
  }

  // erasure scenario: chain local repairs while some check has all of its
  // helpers alive, then solve the remainder linearly
  std::vector<int> erased = erase;
  std::sort(erased.begin(), erased.end());
  erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
  lrc::BitVector damaged = codeword;
  for (int e : erased) damaged.set(e, false);

  bool progress = true;
  while (progress && !erased.empty()) {
    progress = false;
    for (std::size_t idx = 0; idx < erased.size() && !progress; ++idx) {
      int i = erased[idx];
      for (const auto& check : loc.checks) {
        if (!std::binary_search(check.support.begin(), check.support.end(),
                                i))
          continue;
        bool helpers_alive = true;
        for (int j : check.support)
          if (j != i &&
              std::binary_search(erased.begin(), erased.end(), j))
            helpers_alive = false;
        if (!helpers_alive) continue;
        auto trace = lrc::local_repair(damaged, {erased}, i, check);
        damaged.set(i, trace.value);
        erased.erase(erased.begin() + idx);
        std::cout << trace_to_json(trace, "local").dump() << "\n";
        progress = true;
        break;
      }
    }
  }

  if (!erased.empty()) {
    auto res = lrc::erasure_decode(code, damaged, {erased});
    if (!res.success) {
      std::cerr << "erasure decode failed; dependent erased columns:";
      for (int c : res.dependency_witness) std::cerr << " " << c;
      std::cerr << "\n";
      return kExitViolation;
    }
    for (int i : erased) {
      lrc::RepairTrace t;
      t.coordinate = i;
      t.value = res.codeword.get(i);
      std::cout << trace_to_json(t, "linear").dump() << "\n";
    }
    damaged = res.codeword;
  }

  bool restored = damaged == codeword;
  std::cerr << (restored ? "codeword fully restored\n"
                         : "restored word mismatches\n");
  return restored ? kExitOk : kExitViolation;
}

int cmd_search(int m, const lrc::SearchOptions& opts,
               const std::string& format) {
  lrc::SearchOutput out = lrc::search_defining_sets(m, opts);
  for (const auto& res : out.results) {
    if (format == "table") {
      std::cout << "[" << res.n << ", " << res.k << ", ";
      if (res.distance.exact)
        std::cout << res.distance.lower;
      else
        std::cout << res.distance.lower << ".." << res.distance.upper;
      std::cout << "] local " << (res.locality_certified ? "yes" : "no")
                << " t " << res.availability_t << "\n";
    } else {
      json j = lrc::search_result_to_json(res);
      j["truncated"] = out.truncated;
      std::cout << j.dump() << "\n";
    }
  }
  std::cerr << out.results.size() << " codes"
            << (out.truncated ? " (budget exhausted, partial)" : "") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary cyclic locally repairable codes"};
  app.require_subcommand(1);

  std::string family, poly_hex, out_path, format = "json", message_hex;
  std::string code_path;
  int m = 4, r = 2, coordinate = -1, t_flag = 0, restarts = 256;
  std::uint64_t budget = std::uint64_t{1} << 28, seed = 1;
  bool require_locality = false;
  std::vector<int> busy, erase;

  auto* construct = app.add_subcommand("construct", "build a code family");
  construct->add_option("family", family, "c1|c2|d10|avail")->required();
  construct->add_option("--m", m, "extension degree")->required();
  construct->add_option("--r", r, "locality (c1 only)");
  construct->add_option("--primitive-poly", poly_hex,
                        "primitive polynomial, hex mask, LSB = constant term");
  construct->add_option("--out", out_path, "code file path (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "certify a code file");
  analyze->add_option("file", code_path, "code file")->required();
  auto* analyze_r = analyze->add_option("--r", r, "locality to certify");
  auto* analyze_t = analyze->add_option("--t", t_flag, "availability target");
  analyze->add_option("--budget", budget, "codeword enumeration budget");
  analyze->add_option("--seed", seed, "search seed");
  analyze->add_option("--restarts", restarts, "information-set restarts");
  analyze->add_option("--format", format, "json|table");

  auto* repair = app.add_subcommand("repair", "erasure repair simulation");
  repair->add_option("file", code_path, "code file")->required();
  repair->add_option("--coordinate", coordinate, "coordinate to repair");
  repair->add_option("--busy", busy, "busy coordinates")->delimiter(',');
  repair->add_option("--erase", erase, "erased coordinates")->delimiter(',');
  repair->add_option("--message", message_hex, "message hex (default seeded)");
  repair->add_option("--seed", seed, "codeword seed");

  auto* search = app.add_subcommand("search", "sweep 2-closed defining sets");
  search->add_option("--m", m, "extension degree")->required();
  search->add_option("--r", r, "locality filter");
  search->add_flag("--require-locality", require_locality,
                   "drop codes without certified locality");
  search->add_option("--budget", budget, "max defining sets examined");
  search->add_option("--seed", seed, "distance search seed");
  search->add_option("--format", format, "json|table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed())
      return cmd_construct(family, m, r, poly_hex, out_path);
    if (analyze->parsed()) {
      lrc::AnalyzeOptions opts;
      opts.budget = budget;
      opts.seed = seed;
      opts.restarts = restarts;
      if (analyze_r->count()) opts.locality_r = r;
      if (analyze_t->count()) opts.availability_t = t_flag;
      return cmd_analyze(code_path, opts, format);
    }
    if (repair->parsed()) {
      if (coordinate < 0 && erase.empty()) {
        std::cerr << "repair: need --coordinate or --erase\n";
        return kExitUsage;
      }
      return cmd_repair(code_path, coordinate, busy, erase, message_hex,
                        seed);
    }
    if (search->parsed()) {
      lrc::SearchOptions opts;
      opts.r = r;
      opts.require_locality = require_locality;
      opts.budget = budget;
      opts.seed = seed;
      return cmd_search(m, opts, format);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
