#include "hgforge/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace hgforge::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

void check_schema(const json& doc) {
  if (!doc.is_object()) throw ParseError("top-level value must be an object");
  if (auto it = doc.find("schema"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != kSchema)
      throw ParseError(std::string("unsupported schema ") + it->dump() + ", expected \"" + kSchema + "\"");
  }
}

Rational scalar(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>()) : Rational(v.get<std::int64_t>());
  }
  if (v.is_number_float())
    throw ParseError(path + ": unquoted decimal " + v.dump() + "; write it as a string, e.g. \"" +
                     v.dump() + "\"");
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  throw ParseError(path + ": expected a number or numeric string, got " + v.dump());
}

const json& array_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  if (!it->is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  return *it;
}

std::size_t size_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  if (!it->is_number_unsigned() || it->get<std::size_t>() == 0)
    throw ParseError(std::string("field \"") + name + "\" must be a positive integer");
  return it->get<std::size_t>();
}

std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

std::string quoted(const Rational& r) { return "\"" + to_string(r) + "\""; }

}  // namespace

CubeDocument parse_cube(std::string_view text) {
  const json doc = parse_json(text);
  check_schema(doc);
  CubeDocument out;
  out.n = size_field(doc, "n");
  const json& entries = array_field(doc, "entries");
  out.entries.resize(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string pi = idx("entries", i);
    if (!entries[i].is_array()) throw ParseError(pi + " must be an array");
    out.entries[i].resize(entries[i].size());
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      const std::string pj = idx(pi, j);
      const json& col = entries[i][j];
      if (!col.is_array()) throw ParseError(pj + " must be an array");
      out.entries[i][j].reserve(col.size());
      for (std::size_t k = 0; k < col.size(); ++k) out.entries[i][j].push_back(scalar(col[k], idx(pj, k)));
    }
  }
  return out;
}

CubeValidation<Rational> validate_document(const CubeDocument& doc) {
  if (doc.entries.size() != doc.n) {
    CubeValidation<Rational> bad;
    bad.issues.push_back({ValidationIssue::Kind::ShapeMismatch, 0, 0, 0,
                          "n=" + std::to_string(doc.n) + " but entries has " +
                              std::to_string(doc.entries.size()) + " slices"});
    return bad;
  }
  return validate_cube(doc.entries);
}

Measure<Rational> parse_measure(std::string_view text) {
  const json doc = parse_json(text);
  check_schema(doc);
  const std::size_t n = size_field(doc, "n");
  const json& values = array_field(doc, "values");
  if (values.size() != n)
    throw ParseError("n=" + std::to_string(n) + " but values has " + std::to_string(values.size()) + " entries");
  Vector<Rational> v(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k)) = scalar(values[k], idx("values", k));
  return Measure<Rational>(std::move(v));
}

CayleyTable parse_group(std::string_view text) {
  const json doc = parse_json(text);
  check_schema(doc);
  const bool has_factors = doc.contains("invariant_factors");
  const bool has_table = doc.contains("cayley_table");
  if (has_factors == has_table)
    throw ParseError("group document needs exactly one of \"invariant_factors\" or \"cayley_table\"");

  if (has_factors) {
    InvariantFactors factors;
    const json& f = array_field(doc, "invariant_factors");
    for (std::size_t t = 0; t < f.size(); ++t) {
      if (!f[t].is_number_unsigned()) throw ParseError(idx("invariant_factors", t) + " must be a positive integer");
      factors.push_back(f[t].get<std::size_t>());
    }
    std::size_t order = 1;
    for (auto d : factors) {
      if (d < 2 || order > kDefaultOrderCap) throw ParseError("invariant factors must be >= 2 with order <= cap");
      order *= d;
    }
    if (order > kDefaultOrderCap) throw ParseError("group order exceeds cap " + std::to_string(kDefaultOrderCap));
    try {
      return cayley_table(factors);
    } catch (const Error& e) {
      throw ParseError(std::string("invariant_factors: ") + e.what());
    }
  }

  const json& t = array_field(doc, "cayley_table");
  if (doc.contains("n") && size_field(doc, "n") != t.size())
    throw ParseError("n disagrees with the size of cayley_table");
  std::vector<std::vector<std::size_t>> rows(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_array()) throw ParseError(idx("cayley_table", i) + " must be an array");
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (!t[i][j].is_number_unsigned())
        throw ParseError(idx(idx("cayley_table", i), j) + " must be a positive integer");
      rows[i].push_back(t[i][j].get<std::size_t>());
    }
  }
  return CayleyTable::from_one_based(rows);
}

std::string serialize_cube(const StructureCube<Rational>& cube) {
  const std::size_t n = cube.n();
  std::ostringstream out;
  out << "{\n  \"schema\": \"" << kSchema << "\",\n  \"n\": " << n << ",\n  \"entries\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    [\n";
    for (std::size_t j = 0; j < n; ++j) {
      out << "      [";
      for (std::size_t k = 0; k < n; ++k) out << (k ? ", " : "") << quoted(cube(i, j, k));
      out << "]" << (j + 1 < n ? "," : "") << "\n";
    }
    out << "    ]" << (i + 1 < n ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string serialize_measure(const Measure<Rational>& m) {
  std::ostringstream out;
  out << "{\n  \"schema\": \"" << kSchema << "\",\n  \"n\": " << m.n() << ",\n  \"values\": [";
  for (std::size_t k = 0; k < m.n(); ++k) out << (k ? ", " : "") << quoted(m[k]);
  out << "]\n}\n";
  return out.str();
}

std::string serialize_group(const CayleyTable& table) {
  const std::size_t n = table.n();
  std::ostringstream out;
  out << "{\n  \"schema\": \"" << kSchema << "\",\n  \"n\": " << n << ",\n  \"cayley_table\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    [";
    for (std::size_t j = 0; j < n; ++j) out << (j ? ", " : "") << table(i, j) + 1;
    out << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace hgforge::io
