#include "lrc/io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace lrc {

nlohmann::ordered_json code_to_json(const CyclicCode& code) {
  nlohmann::ordered_json j;
  j["m"] = code.field().m();
  j["n"] = code.n();
  j["primitive_poly_hex"] = code.field().primitive_poly().to_hex();
  j["zeros"] = code.zeros();
  j["g_hex"] = code.g().to_hex();
  j["h_hex"] = code.h().to_hex();
  j["k"] = code.k();
  return j;
}

void write_code_file(std::ostream& os, const CyclicCode& code) {
  os << code_to_json(code).dump(2) << "\n";
}

CyclicCode code_from_json(const nlohmann::json& j) {
  int m = j.at("m").get<int>();
  auto poly = BinaryPolynomial::from_hex(j.at("primitive_poly_hex").get<std::string>());
  auto field = make_field(m, poly);
  DefiningSet ds{field->n(), j.at("zeros").get<std::vector<int>>()};
  CyclicCode code = build_code(field, ds);

  if (j.at("n").get<int>() != code.n() || j.at("k").get<int>() != code.k() ||
      j.at("g_hex").get<std::string>() != code.g().to_hex() ||
      j.at("h_hex").get<std::string>() != code.h().to_hex())
    throw std::runtime_error(
        "code file mismatch: stored polynomials disagree with the "
        "recomputation from the zeros");
  return code;
}

CyclicCode read_code_file(std::istream& is) {
  nlohmann::json j;
  is >> j;
  return code_from_json(j);
}

CyclicCode read_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open code file: " + path);
  return read_code_file(f);
}

}  // namespace lrc
