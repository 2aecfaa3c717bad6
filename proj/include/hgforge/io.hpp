#pragma once

// JSON documents for cubes, measures and groups.
//
//   cube:    {"schema": "hgforge/1", "n": 2, "entries": [[["3/4","1/4"], ...], ...]}
//   measure: {"schema": "hgforge/1", "n": 2, "values": ["3/4","1/4"]}
//   group:   {"schema": "hgforge/1", "invariant_factors": [2, 2]}
//        or  {"schema": "hgforge/1", "n": 2, "cayley_table": [[1,2],[2,1]]}
//
// Arrays are positional (entries[i][j][k] is a_{i+1,j+1}(k+1)); Cayley table
// labels are one-based. A scalar is a JSON integer or a string holding an
// integer, a fraction "p/q" or a decimal "0.75". Unquoted non-integer numbers
// are rejected because a binary float cannot be converted exactly. "schema"
// is optional on input and always written on output.

#include "hgforge/cube.hpp"
#include "hgforge/groups.hpp"
#include "hgforge/rational.hpp"

#include <string>
#include <string_view>

namespace hgforge::io {

inline constexpr const char* kSchema = "hgforge/1";

/// Malformed document: bad JSON, wrong field types, unparsable scalars. The
/// message carries the JSON line/column or the field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct CubeDocument {
  std::size_t n = 0;
  RawCube<Rational> entries;
};

CubeDocument parse_cube(std::string_view text);

/// Validation of a parsed document, including agreement of "n" with the
/// entries' shape.
CubeValidation<Rational> validate_document(const CubeDocument& doc);

/// Throws ParseError, or InvalidMeasure for a well-formed but non-stochastic
/// vector.
Measure<Rational> parse_measure(std::string_view text);

/// Throws ParseError, or InvalidTable when the table is not an abelian group
/// with identity at state 1.
CayleyTable parse_group(std::string_view text);

/// Canonical serializations: fixed field order, two-space indentation, one
/// distribution per line, rationals as lowest-terms strings.
std::string serialize_cube(const StructureCube<Rational>& cube);
std::string serialize_measure(const Measure<Rational>& m);
std::string serialize_group(const CayleyTable& table);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);
/// Throws Error when the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace hgforge::io
