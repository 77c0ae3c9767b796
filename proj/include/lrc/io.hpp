#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "lrc/cyclic.hpp"

namespace lrc {

// Code file schema: {m, n, primitive_poly_hex, zeros, g_hex, h_hex, k}.
nlohmann::ordered_json code_to_json(const CyclicCode& code);
void write_code_file(std::ostream& os, const CyclicCode& code);

// Rebuilds the code from (m, primitive_poly_hex, zeros) and verifies the
// stored g_hex/h_hex/k/n against the recomputation.
CyclicCode code_from_json(const nlohmann::json& j);
CyclicCode read_code_file(std::istream& is);
CyclicCode read_code_file(const std::string& path);

}  // namespace lrc
