// Serialization and the command-line surface.
//
// Fan documents are JSON objects with the fields dimension, rays, max_cones
// and optional metadata {name, source}; emission is canonical (fixed field
// order, two-space indent, trailing newline) so canonical documents
// round-trip byte-identically.  Polygon files list height-1 vertices as
// integer pairs "a b" per line, the leading e3 vertex implicit as (0,0).
// Gamma bodies export as OFF polyhedra.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latfan/classify.hpp"
#include "latfan/constructions.hpp"
#include "latfan/fan.hpp"
#include "latfan/fano.hpp"
#include "latfan/lattice.hpp"

namespace latfan {

struct FanDocument {
  int dimension = 3;
  std::vector<std::vector<i64>> rays;
  std::vector<std::vector<int>> max_cones;
  std::optional<std::string> name;
  std::optional<std::string> source;
};

// ---------------------------------------------------------------------------
// parse / emit
// ---------------------------------------------------------------------------

inline FanDocument document_from_fan(const Fan& f) {
  FanDocument doc;
  doc.dimension = f.dim;
  for (const Vec& r : f.rays) {
    std::vector<i64> row;
    for (int i = 0; i < f.dim; ++i) row.push_back(r[i]);
    doc.rays.push_back(std::move(row));
  }
  for (const Cone& c : f.max_cones) {
    std::vector<int> idx;
    for (const Vec& g : c.gens) {
      auto it = std::lower_bound(f.rays.begin(), f.rays.end(), g);
      idx.push_back(static_cast<int>(it - f.rays.begin()));
    }
    doc.max_cones.push_back(std::move(idx));
  }
  return doc;
}

inline std::string emit_document(const FanDocument& doc) {
  nlohmann::ordered_json j;
  j["dimension"] = doc.dimension;
  j["rays"] = doc.rays;
  j["max_cones"] = doc.max_cones;
  if (doc.name || doc.source) {
    nlohmann::ordered_json meta;
    if (doc.name) meta["name"] = *doc.name;
    if (doc.source) meta["source"] = *doc.source;
    j["metadata"] = meta;
  }
  return j.dump(2) + "\n";
}

inline FanDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("cli.SyntaxError", e.what());
  }
  if (!j.is_object()) throw Error("cli.SchemaError", "top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "dimension" && key != "rays" && key != "max_cones" && key != "metadata")
      throw Error("cli.SchemaError", "unknown field '" + key + "'");
  }
  FanDocument doc;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw Error("cli.SchemaError", "missing integer field 'dimension'");
  doc.dimension = j["dimension"].get<int>();
  if (doc.dimension != 2 && doc.dimension != 3)
    throw Error("cli.SchemaError", "dimension must be 2 or 3");
  if (!j.contains("rays") || !j["rays"].is_array())
    throw Error("cli.SchemaError", "missing array field 'rays'");
  for (const auto& row : j["rays"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != doc.dimension)
      throw Error("cli.SchemaError", "each ray needs exactly 'dimension' integers");
    std::vector<i64> ray;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw Error("cli.SchemaError", "ray coordinates must be integers");
      ray.push_back(x.get<i64>());
    }
    doc.rays.push_back(std::move(ray));
  }
  if (!j.contains("max_cones") || !j["max_cones"].is_array())
    throw Error("cli.SchemaError", "missing array field 'max_cones'");
  for (const auto& row : j["max_cones"]) {
    if (!row.is_array()) throw Error("cli.SchemaError", "each cone is an index array");
    std::vector<int> idx;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw Error("cli.SchemaError", "cone entries are ray indices");
      int i = x.get<int>();
      if (i < 0 || i >= static_cast<int>(doc.rays.size()))
        throw Error("cli.SchemaError", "ray index out of range");
      idx.push_back(i);
    }
    doc.max_cones.push_back(std::move(idx));
  }
  if (j.contains("metadata")) {
    const auto& meta = j["metadata"];
    if (!meta.is_object()) throw Error("cli.SchemaError", "metadata must be an object");
    for (const auto& [key, value] : meta.items()) {
      if (key == "name" && value.is_string())
        doc.name = value.get<std::string>();
      else if (key == "source" && value.is_string())
        doc.source = value.get<std::string>();
      else
        throw Error("cli.SchemaError", "metadata holds string fields name/source only");
    }
  }
  return doc;
}

/// Validated fan from a document; fan-model violations are wrapped with the
/// offending location.
inline Fan fan_from_document(const FanDocument& doc) {
  std::vector<Vec> rays;
  for (std::size_t i = 0; i < doc.rays.size(); ++i) {
    Vec v;
    v.dim = doc.dimension;
    for (int k = 0; k < doc.dimension; ++k)
      v[k] = doc.rays[i][static_cast<std::size_t>(k)];
    rays.push_back(v);
  }
  std::vector<Cone> cones;
  for (std::size_t ci = 0; ci < doc.max_cones.size(); ++ci) {
    std::vector<Vec> gens;
    for (int idx : doc.max_cones[ci]) gens.push_back(rays[static_cast<std::size_t>(idx)]);
    try {
      cones.push_back(make_cone(gens, doc.dimension));
    } catch (const Error& e) {
      std::ostringstream os;
      os << "max_cones[" << ci << "]: " << e.what();
      throw Error("cli.ValidationError", os.str());
    }
  }
  Fan f;
  try {
    f = make_fan(std::move(cones), doc.dimension);
  } catch (const Error& e) {
    throw Error("cli.ValidationError", e.what());
  }
  std::set<Vec> used(f.rays.begin(), f.rays.end());
  for (const Vec& r : rays)
    if (!used.count(r)) {
      std::ostringstream os;
      os << "ray " << r << " is not used by any cone";
      throw Error("cli.ValidationError", os.str());
    }
  FanValidation v = validate_fan(f, /*require_support=*/false);
  if (!v) throw Error("cli.ValidationError", v.message);
  return f;
}

inline Fan parse_fan(const std::string& text) {
  return fan_from_document(parse_document(text));
}

inline std::string emit_fan(const Fan& f) { return emit_document(document_from_fan(f)); }

// ---------------------------------------------------------------------------
// polygon files
// ---------------------------------------------------------------------------

/// Height-1 vertices as integer pairs, one per line; '#' starts a comment;
/// the e3 vertex (0,0) is implicit and leads the cycle.
inline std::vector<Vec> parse_polygon_file(const std::string& text) {
  std::vector<Vec> vertices{vec3(0, 0, 1)};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    i64 a, b;
    if (!(ls >> a)) continue;  // blank
    if (!(ls >> b)) {
      std::ostringstream os;
      os << "line " << lineno << ": expected two integers";
      throw Error("cli.SyntaxError", os.str());
    }
    i64 extra;
    if (ls >> extra) {
      std::ostringstream os;
      os << "line " << lineno << ": expected two integers";
      throw Error("cli.SyntaxError", os.str());
    }
    vertices.push_back(vec3(a, b, 1));
  }
  return vertices;
}

// ---------------------------------------------------------------------------
// OFF export of the Gamma body
// ---------------------------------------------------------------------------

/// Standard OFF text for the Gamma body of a 3-dimensional fan: vertices in
/// lexicographic coordinate order, one facet line per face.
inline std::string export_gamma_off(const Fan& f) {
  if (f.dim != 3)
    throw Error("cli.UnsupportedDimension", "OFF export is for 3-dimensional fans");
  GammaBody g = gamma_body(f);
  const HullComplex& hull = g.hull;
  std::set<std::pair<int, int>> edges;
  for (const HullFacet& fct : hull.facets) {
    const std::size_t n = fct.cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
      int a = fct.cycle[i], b = fct.cycle[(i + 1) % n];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  std::ostringstream os;
  os << "OFF\n"
     << hull.vertices.size() << ' ' << hull.facets.size() << ' ' << edges.size()
     << '\n';
  for (const Vec& v : hull.vertices) os << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const HullFacet& fct : hull.facets) {
    os << fct.cycle.size();
    for (int idx : fct.cycle) os << ' ' << idx;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// command-line driver
// ---------------------------------------------------------------------------

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cli.FileNotFound", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void print_grade(std::ostream& out, const FanoGrade& grade) {
  out << "gorenstein: " << (grade.gorenstein ? "true" : "false") << '\n'
      << "weak_fano: " << (grade.weak_fano ? "true" : "false") << '\n'
      << "fano: " << (grade.fano ? "true" : "false") << '\n';
  if (!grade.witness.empty()) out << "witness: " << grade.witness << '\n';
}

}  // namespace cli_detail

}  // namespace latfan
