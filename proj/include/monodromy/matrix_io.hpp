#ifndef MONODROMY_MATRIX_IO_HPP
#define MONODROMY_MATRIX_IO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monodromy/int_matrix.hpp"
#include "monodromy/mod_matrix.hpp"

namespace monodromy {

using AnyMatrix = std::variant<IntMatrix, ModMatrix>;

// Text format, one block per matrix:
//   dim m|int
//   <dim rows of whitespace-separated integers>
// Modular entries are canonicalized into [0, m) on load.
std::string to_text(const IntMatrix& a);
std::string to_text(const ModMatrix& a);
std::vector<AnyMatrix> parse_matrices_text(std::string_view text);

// JSON format: {"dim": d, "modulus": m|null, "entries": [[...], ...]}.
// Entries are emitted as numbers when they fit in 64 bits and as decimal
// strings otherwise; both are accepted on input. A file may hold a single
// object or an array of objects.
nlohmann::ordered_json to_json(const IntMatrix& a);
nlohmann::ordered_json to_json(const ModMatrix& a);
std::vector<AnyMatrix> parse_matrices_json(const nlohmann::json& j);

// Sniffs JSON ('{' or '[') vs text by the first non-space character.
std::vector<AnyMatrix> parse_matrices(std::string_view content);
std::vector<AnyMatrix> load_matrices_file(const std::string& path);

}  // namespace monodromy

#endif
