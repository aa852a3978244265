#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "specvar/bounds.hpp"
#include "specvar/linalg.hpp"

namespace specvar {

/// {"n": int, "entries": [[re, im], ...]} in row-major order. Doubles are
/// written in shortest round-trip form, so write/read is bit-exact.
nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Parses matrix JSON text; ParseError messages carry the byte offset.
ComplexMatrix parse_matrix(const std::string& text);
std::string dump_matrix(const ComplexMatrix& m);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

nlohmann::json to_json(const BoundInputs& in);
nlohmann::json to_json(const BoundReport& r, const ConstantChoice& constant);
nlohmann::json to_json(const LocalizationDisk& d);

}  // namespace specvar
