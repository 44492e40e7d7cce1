#pragma once

// JSON encodings shared by the CLI, campaign reports and algebra spec files.
// Rationals are strings "p/q" (or "p"), indices are signed integers, matrices
// over index sets are lists of [i, j, "p/q"] triples.

#include "lielab/lie_algebra.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace lielab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json to_json(const FinMatrix& x);
FinMatrix fin_matrix_from_json(const Json& j);

/// {"schema_version", "family", "indices"} or, for custom algebras,
/// {"schema_version", "family": "custom", "dim", "constants": n x n x n nested
/// arrays of rational strings}.
Json to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const Json& j);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json_text(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// FNV-1a over the nonzero structure constants in (i, j, k) order, as hex.
std::string structure_checksum(const StructureConstants& c);

}  // namespace lielab
