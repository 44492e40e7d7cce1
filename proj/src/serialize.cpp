#include "lielab/serialize.hpp"

#include "lielab/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace lielab {

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = rational_from_json(j[i]);
  return v;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vec(m.row(r).transpose())));
  return out;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  if (j.empty()) return Mat(0, 0);
  const auto cols = static_cast<Index>(j[0].size());
  Mat m(static_cast<Index>(j.size()), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Vec row = vec_from_json(j[r]);
    if (row.size() != cols) throw ParseError("ragged matrix rows");
    m.row(static_cast<Index>(r)) = row.transpose();
  }
  return m;
}

Json to_json(const FinMatrix& x) {
  Json out = Json::array();
  for (const auto& [key, v] : x.entries()) out.push_back({key.first.label(), key.second.label(), to_string(v)});
  return out;
}

FinMatrix fin_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of [i, j, value] triples");
  FinMatrix x;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      throw ParseError("malformed matrix entry " + t.dump());
    }
    if (t[0] == 0 || t[1] == 0) throw ParseError("matrix index 0 in " + t.dump());
    const Idx i(t[0].get<int>()), k(t[1].get<int>());
    if (!x.at(i, k).is_zero()) throw ParseError("duplicate matrix entry " + t.dump());
    x.set(i, k, rational_from_json(t[2]));
  }
  return x;
}

Json to_json(const AlgebraSpec& spec) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["family"] = to_string(spec.family);
  if (spec.family != Family::custom) {
    out["indices"] = spec.indices.labels();
    return out;
  }
  const Index n = spec.constants.dim();
  out["dim"] = n;
  Json tensor = Json::array();
  for (Index i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (Index j = 0; j < n; ++j) plane.push_back(to_json(spec.constants.bracket_vector(i, j)));
    tensor.push_back(std::move(plane));
  }
  out["constants"] = std::move(tensor);
  return out;
}

AlgebraSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra spec must be an object");
  if (!j.contains("schema_version")) throw ParseError("algebra spec lacks schema_version");
  if (j.at("schema_version") != kSchemaVersion) throw ParseError("unsupported schema_version " + j.at("schema_version").dump());
  if (!j.contains("family") || !j.at("family").is_string()) throw ParseError("algebra spec lacks a family name");
  AlgebraSpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  if (spec.family != Family::custom) {
    if (!j.contains("indices") || !j.at("indices").is_array()) throw ParseError("algebra spec lacks an index list");
    std::vector<Idx> labels;
    for (const auto& l : j.at("indices")) {
      if (!l.is_number_integer() || l.get<int>() <= 0) throw ParseError("indices must be positive integers");
      labels.emplace_back(l.get<int>());
    }
    spec.indices = IndexSet(std::move(labels));
    if (spec.indices.size() != j.at("indices").size()) throw ParseError("duplicate index in spec");
    return spec;
  }
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) throw ParseError("custom spec lacks dim");
  const auto n = j.at("dim").get<Index>();
  if (n < 1) throw ParseError("custom spec dim must be positive");
  const Json& tensor = j.at("constants");
  if (!tensor.is_array() || static_cast<Index>(tensor.size()) != n) throw ParseError("constants must be n x n x n");
  StructureConstants c(n);
  for (Index i = 0; i < n; ++i) {
    const Json& plane = tensor[static_cast<std::size_t>(i)];
    if (!plane.is_array() || static_cast<Index>(plane.size()) != n) throw ParseError("constants must be n x n x n");
    for (Index k = 0; k < n; ++k) {
      const Vec v = vec_from_json(plane[static_cast<std::size_t>(k)]);
      if (v.size() != n) throw ParseError("constants must be n x n x n");
      for (Index m = 0; m < n; ++m) c.set(i, k, m, v[m]);
    }
  }
  spec.constants = std::move(c);
  return spec;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line/column.
    int line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("invalid JSON", line, column);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string structure_checksum(const StructureConstants& c) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (Index i = 0; i < c.dim(); ++i) {
    for (Index j = 0; j < c.dim(); ++j) {
      for (const auto& [k, v] : c.bracket_of_basis(i, j)) {
        feed(std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + to_string(v) + ";");
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lielab
