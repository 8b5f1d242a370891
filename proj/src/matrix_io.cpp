#include "monodromy/matrix_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace monodromy {

namespace {

bool looks_like_integer(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) return false;
  for (std::size_t i = start; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

mpz_class parse_bigint(const std::string& tok) {
  if (!looks_like_integer(tok)) {
    throw ParseError("expected an integer, got '" + tok + "'");
  }
  return mpz_class(tok, 10);
}

nlohmann::ordered_json entry_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) {
    return static_cast<std::int64_t>(v.get_si());
  }
  return v.get_str();
}

mpz_class entry_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      std::uint64_t u = j.get<std::uint64_t>();
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
      return z;
    }
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw ParseError("matrix entry must be an integer or a decimal string");
}

AnyMatrix make_matrix(std::size_t dim, bool modular, std::uint64_t modulus,
                      const std::vector<mpz_class>& entries) {
  if (modular) {
    IntMatrix tmp(dim, entries);
    return reduce_mod(tmp, modulus);
  }
  return IntMatrix(dim, entries);
}

}  // namespace

std::string to_text(const IntMatrix& a) {
  std::ostringstream out;
  out << a.dim() << " int\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j > 0) out << ' ';
      out << a.at(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const ModMatrix& a) {
  std::ostringstream out;
  out << a.dim() << ' ' << a.modulus() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j > 0) out << ' ';
      out << a.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<AnyMatrix> parse_matrices_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<AnyMatrix> result;
  std::string tok;
  while (in >> tok) {
    std::size_t dim = 0;
    try {
      dim = std::stoul(tok);
    } catch (const std::exception&) {
      throw ParseError("bad matrix header: expected dim, got '" + tok + "'");
    }
    if (dim == 0) throw ParseError("matrix dim must be positive");

    std::string modtok;
    if (!(in >> modtok)) throw ParseError("truncated matrix header");
    bool modular = false;
    std::uint64_t modulus = 0;
    if (modtok != "int") {
      modular = true;
      if (!looks_like_integer(modtok) || modtok[0] == '-') {
        throw ParseError("bad modulus '" + modtok + "' (expected 'int' or m >= 2)");
      }
      try {
        modulus = std::stoull(modtok);
      } catch (const std::exception&) {
        throw ParseError("modulus '" + modtok + "' out of range");
      }
      if (modulus < 2) throw ParseError("modulus must be >= 2");
    }

    std::vector<mpz_class> entries;
    entries.reserve(dim * dim);
    for (std::size_t k = 0; k < dim * dim; ++k) {
      if (!(in >> tok)) throw ParseError("truncated matrix body");
      entries.push_back(parse_bigint(tok));
    }
    result.push_back(make_matrix(dim, modular, modulus, entries));
  }
  if (result.empty()) throw ParseError("no matrices found");
  return result;
}

nlohmann::ordered_json to_json(const IntMatrix& a) {
  nlohmann::ordered_json j;
  j["dim"] = a.dim();
  j["modulus"] = nullptr;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < a.dim(); ++k)
      row.push_back(entry_to_json(a.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

nlohmann::ordered_json to_json(const ModMatrix& a) {
  nlohmann::ordered_json j;
  j["dim"] = a.dim();
  j["modulus"] = a.modulus();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(a.at(i, k));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

namespace {

AnyMatrix parse_one_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ParseError("matrix JSON needs 'dim' and 'entries'");
  }
  std::size_t dim = j.at("dim").get<std::size_t>();
  if (dim == 0) throw ParseError("matrix dim must be positive");
  bool modular = false;
  std::uint64_t modulus = 0;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    modular = true;
    modulus = j.at("modulus").get<std::uint64_t>();
    if (modulus < 2) throw ParseError("modulus must be >= 2");
  }
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != dim) {
    throw ParseError("'entries' must be an array of dim rows");
  }
  std::vector<mpz_class> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      throw ParseError("each entry row must have dim values");
    }
    for (const auto& e : row) entries.push_back(entry_from_json(e));
  }
  return make_matrix(dim, modular, modulus, entries);
}

}  // namespace

std::vector<AnyMatrix> parse_matrices_json(const nlohmann::json& j) {
  std::vector<AnyMatrix> result;
  if (j.is_array()) {
    for (const auto& item : j) result.push_back(parse_one_json(item));
  } else {
    result.push_back(parse_one_json(j));
  }
  if (result.empty()) throw ParseError("no matrices found");
  return result;
}

std::vector<AnyMatrix> parse_matrices(std::string_view content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{' || c == '[') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(content);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
      }
      return parse_matrices_json(j);
    }
    return parse_matrices_text(content);
  }
  throw ParseError("empty input");
}

std::vector<AnyMatrix> load_matrices_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrices(buf.str());
}

}  // namespace monodromy
