#pragma once

#include <string>

#include <json.hpp>

#include "slw/iwasawa.hpp"
#include "slw/matrix.hpp"

namespace slw {
namespace jsonio {

using json = nlohmann::ordered_json;

// Matrices travel as row-major nested arrays of "p/q" strings.
json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

// Real matrices accept both numbers and "p/q" strings per entry.
DMatrix dmatrix_from_json(const json& j);

// Deterministic serialization: objects keep insertion order, doubles are
// printed with 17 significant digits.
std::string dump(const json& j, int indent = -1);

json load_file(const std::string& path);

} // namespace jsonio
} // namespace slw
