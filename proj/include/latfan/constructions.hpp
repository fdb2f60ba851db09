// Constructors for the named families: the 2d weak-Fano surfaces and their
// Gorenstein models, 2d crepant resolution, the pyramid family over (m,m,1),
// fans from admissible height-1 polygons with their closed-form supporting
// hyperplanes, and the 13 exceptional ray sets of the built-in data table.

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "latfan/fan.hpp"
#include "latfan/fano.hpp"
#include "latfan/lattice.hpp"

namespace latfan {

// ---------------------------------------------------------------------------
// 2d: smooth weak-Fano surfaces and their Gorenstein models
// ---------------------------------------------------------------------------

namespace detail {

// strict angle order inside the first quadrant: a before b
inline bool angle_less(const Vec& a, const Vec& b) { return cross2(a, b) > 0; }

inline Fan fan_from_ordered_rays(std::vector<Vec> rays) {
  std::sort(rays.begin(), rays.end(), angle_less);
  std::vector<Cone> cones;
  for (std::size_t i = 0; i + 1 < rays.size(); ++i)
    cones.push_back(make_cone(std::vector<Vec>{rays[i], rays[i + 1]}, 2));
  return make_fan(std::move(cones), 2);
}

}  // namespace detail

/// The smooth family has rays {e1, e2, (1,1), ..., (n,1)} with n+1
/// consecutive maximal cones; the Gorenstein model is the face fan of
/// Conv(0, e1, e2, (n,1)).  Both are the affine-plane fan for n = 0.
inline Fan surface_family(i64 n, bool gorenstein) {
  if (n < 0)
    throw Error("constructions.InvalidParameter", "surface family needs n >= 0");
  if (n == 0) return sigma0_fan(2);
  if (gorenstein) {
    std::vector<Vec> pts{vec2(0, 0), vec2(1, 0), vec2(0, 1), vec2(n, 1)};
    return face_fan(convex_hull(pts));
  }
  std::vector<Vec> rays{vec2(1, 0), vec2(0, 1)};
  for (i64 k = 1; k <= n; ++k) rays.push_back(vec2(k, 1));
  return detail::fan_from_ordered_rays(std::move(rays));
}

/// Insert a ray at every lattice point of the outer boundary of Gamma.  The
/// body Gamma is unchanged (crepancy) and the result is smooth weak Fano.
inline Fan crepant_resolve_2d(const Fan& f) {
  if (f.dim != 2)
    throw Error("constructions.DimensionMismatch", "resolution is 2-dimensional");
  FanValidation v = validate_fan(f, /*require_support=*/true);
  if (!v) throw Error(v.code, v.message);
  GorensteinFanResult gor = is_gorenstein_fan(f);
  if (!gor.gorenstein) {
    std::ostringstream os;
    os << "fan is not Gorenstein";
    for (const ConeForm& cf : gor.forms)
      if (!cf.form.integral()) {
        os << "; witness " << cf.cone;
        break;
      }
    throw Error("constructions.NotGorenstein", os.str());
  }
  std::vector<Vec> rays;
  for (const Cone& c : f.max_cones) {
    Vec a = c.gens[0], b = c.gens[1];
    if (!detail::angle_less(a, b)) std::swap(a, b);
    Vec step = sub(b, a);
    i64 g = content(step);
    for (int i = 0; i < 2; ++i) step[i] /= g;
    for (i64 k = 0; k <= g; ++k) rays.push_back(add(a, scale(k, step)));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return detail::fan_from_ordered_rays(std::move(rays));
}

// ---------------------------------------------------------------------------
// the pyramid family over (m,m,1)
// ---------------------------------------------------------------------------

/// Face fan of Conv(0, e1, e2, e3, (m,m,1)): three maximal cones, Gorenstein
/// local toric Fano for every m >= 1.
inline Fan family_i(i64 m) {
  if (m < 1)
    throw Error("constructions.InvalidParameter", "family needs m >= 1");
  std::vector<Vec> pts{vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0),
                       vec3(0, 0, 1), vec3(m, m, 1)};
  return face_fan(convex_hull(pts));
}

// ---------------------------------------------------------------------------
// admissible height-1 polygons
// ---------------------------------------------------------------------------

/// One directed boundary edge of an admissible polygon, with its integrality
/// certificate.  kSlope edges (da+db > 0) store db/da; kInverse edges
/// (da+db < 0) store da/db; kBalanced edges have db = -da.
struct PolygonEdge {
  enum Kind { kSlope, kBalanced, kInverse };
  Vec from, to;
  Kind kind = kSlope;
  i64 ratio = 0;
};

/// Convex lattice polygon in the plane (Z3 = 1): vertices clockwise starting
/// at e3, all other vertices with strictly positive first two coordinates,
/// every edge passing the integrality condition above.
struct AdmissiblePolygon {
  std::vector<Vec> vertices;  // cyclic, starting at e3
  std::vector<PolygonEdge> edges;

  friend bool operator==(const AdmissiblePolygon& a, const AdmissiblePolygon& b) {
    return a.vertices == b.vertices;
  }
};

struct PolygonViolation {
  std::string code;  // NotHeightOne, MissingE3, NonPositiveCoordinate,
                     // SlopeNotIntegral, NotClockwise, DegenerateDimension
  std::string message;
};

struct PolygonValidation {
  std::optional<AdmissiblePolygon> polygon;
  std::vector<PolygonViolation> violations;

  bool ok() const { return polygon.has_value(); }
};

inline PolygonValidation validate_polygon(std::span<const Vec> vertices_in) {
  PolygonValidation out;
  auto violate = [&](const std::string& code, const std::string& msg) {
    out.violations.push_back({code, msg});
  };
  std::vector<Vec> vs(vertices_in.begin(), vertices_in.end());
  const Vec e3 = vec3(0, 0, 1);

  for (const Vec& v : vs)
    if (v.dim != 3 || v[2] != 1) {
      std::ostringstream os;
      os << "vertex " << v << " is not at height 1";
      violate("NotHeightOne", os.str());
    }
  if (!out.violations.empty()) return out;

  int e3_pos = -1;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == e3) e3_pos = static_cast<int>(i);
  if (e3_pos < 0) violate("MissingE3", "e3 = (0,0,1) is not a vertex");

  for (const Vec& v : vs)
    if (v != e3 && (v[0] <= 0 || v[1] <= 0)) {
      std::ostringstream os;
      os << "vertex " << v << " has a non-positive coordinate";
      violate("NonPositiveCoordinate", os.str());
    }

  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) {
        std::ostringstream os;
        os << "vertex " << vs[i] << " repeats";
        violate("DegenerateDimension", os.str());
        return out;
      }

  if (vs.size() < 3) {
    violate("DegenerateDimension", "fewer than three vertices");
    return out;
  }
  {
    HullComplex h = convex_hull(vs);
    if (h.dim < 2) {
      violate("DegenerateDimension", "vertices are collinear");
      return out;
    }
  }
  if (!out.violations.empty()) return out;

  // rotate the cycle so it starts at e3 (cyclic order is preserved)
  std::rotate(vs.begin(), vs.begin() + e3_pos, vs.end());

  const std::size_t n = vs.size();
  auto at = [&](std::size_t i) { return vs[i % n]; };

  // clockwise and strictly convex: every turn has negative cross product
  i64 doubled_area = 0;
  for (std::size_t i = 0; i < n; ++i)
    doubled_area = checked_add(doubled_area, cross2(at(i), at(i + 1)));
  if (doubled_area >= 0)
    violate("NotClockwise", "vertex cycle is not clockwise");
  for (std::size_t i = 0; i < n; ++i) {
    Vec d1 = sub(at(i + 1), at(i));
    Vec d2 = sub(at(i + 2), at(i + 1));
    i64 turn = cross2(d1, d2);
    if (turn > 0) {
      std::ostringstream os;
      os << "counterclockwise turn at vertex " << at(i + 1);
      violate("NotClockwise", os.str());
    } else if (turn == 0) {
      std::ostringstream os;
      os << "vertex " << at(i + 1) << " is not extremal (collinear with its neighbours)";
      violate("NotClockwise", os.str());
    }
  }
  if (!out.violations.empty()) return out;

  // edge integrality, branched by the cone type the edge will generate
  std::vector<PolygonEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    Vec from = at(i), to = at(i + 1);
    i64 da = checked_sub(to[0], from[0]);
    i64 db = checked_sub(to[1], from[1]);
    i64 kind_sign = checked_add(da, db);
    PolygonEdge e{from, to, PolygonEdge::kBalanced, -1};
    if (kind_sign > 0) {
      e.kind = PolygonEdge::kSlope;
      if (da <= 0 || db % da != 0) {
        std::ostringstream os;
        os << "edge " << from << " -> " << to << " has non-integral slope";
        violate("SlopeNotIntegral", os.str());
        continue;
      }
      e.ratio = db / da;
    } else if (kind_sign < 0) {
      e.kind = PolygonEdge::kInverse;
      if (db == 0 || da % db != 0) {
        std::ostringstream os;
        os << "edge " << from << " -> " << to << " has non-integral inverse slope";
        violate("SlopeNotIntegral", os.str());
        continue;
      }
      e.ratio = da / db;
    }
    edges.push_back(e);
  }
  if (!out.violations.empty()) return out;

  AdmissiblePolygon p;
  p.vertices = std::move(vs);
  p.edges = std::move(edges);
  out.polygon = std::move(p);
  return out;
}

namespace detail {

/// Index of the vertex maximizing a+b, and whether any edge is balanced.
inline std::pair<std::size_t, bool> polygon_transition(const AdmissiblePolygon& p) {
  bool has_balanced = false;
  for (const PolygonEdge& e : p.edges)
    if (e.kind == PolygonEdge::kBalanced) has_balanced = true;
  std::size_t best = 0;
  i64 best_val = checked_add(p.vertices[0][0], p.vertices[0][1]);
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    i64 v = checked_add(p.vertices[i][0], p.vertices[i][1]);
    if (v > best_val) {
      best = i;
      best_val = v;
    }
  }
  return {best, has_balanced};
}

}  // namespace detail

/// The fan over the polygon: the cone over P itself; per edge a cone with e2
/// (slope edges), with e1 (inverse edges), or the four-generator cone with
/// both (balanced edges); when no edge is balanced, the triangle cone over
/// e1, e2 and the a+b-maximal vertex closes the fan around the e1-e2 face.
inline Fan fan_from_polygon(const AdmissiblePolygon& p) {
  const Vec e1 = vec3(1, 0, 0), e2 = vec3(0, 1, 0);
  std::vector<Cone> cones;
  cones.push_back(make_cone(p.vertices, 3));
  for (const PolygonEdge& e : p.edges) {
    std::vector<Vec> gens;
    switch (e.kind) {
      case PolygonEdge::kSlope:
        gens = {e2, e.from, e.to};
        break;
      case PolygonEdge::kBalanced:
        gens = {e1, e2, e.from, e.to};
        break;
      case PolygonEdge::kInverse:
        gens = {e1, e.from, e.to};
        break;
    }
    cones.push_back(make_cone(gens, 3));
  }
  auto [apex, has_balanced] = detail::polygon_transition(p);
  if (!has_balanced)
    cones.push_back(make_cone(std::vector<Vec>{e1, e2, p.vertices[apex]}, 3));
  return make_fan(std::move(cones), 3);
}

/// Closed-form supporting hyperplanes of every maximal cone of
/// fan_from_polygon(p), in the value-1 normalization.  Slope edges give
/// (-s, 1, 1 - b + s a), inverse edges (1, -r, 1 - a + r b), the transition
/// (1, 1, 1 - a - b); here (a, b) is the edge endpoint.
inline std::vector<std::pair<Cone, DualForm>> polygon_hyperplanes(
    const AdmissiblePolygon& p) {
  const Vec e1 = vec3(1, 0, 0), e2 = vec3(0, 1, 0);
  std::vector<std::pair<Cone, DualForm>> out;
  out.emplace_back(make_cone(p.vertices, 3), form_from_ints(3, {0, 0, 1}));
  for (const PolygonEdge& e : p.edges) {
    i64 a = e.to[0], b = e.to[1];
    switch (e.kind) {
      case PolygonEdge::kSlope: {
        i64 s = e.ratio;
        DualForm f = form_from_ints(
            3, {checked_neg(s), 1,
                checked_add(checked_sub(1, b), checked_mul(s, a))});
        out.emplace_back(make_cone(std::vector<Vec>{e2, e.from, e.to}, 3), f);
        break;
      }
      case PolygonEdge::kBalanced: {
        DualForm f =
            form_from_ints(3, {1, 1, checked_sub(checked_sub(1, a), b)});
        out.emplace_back(make_cone(std::vector<Vec>{e1, e2, e.from, e.to}, 3), f);
        break;
      }
      case PolygonEdge::kInverse: {
        i64 r = e.ratio;
        DualForm f = form_from_ints(
            3, {1, checked_neg(r),
                checked_add(checked_sub(1, a), checked_mul(r, b))});
        out.emplace_back(make_cone(std::vector<Vec>{e1, e.from, e.to}, 3), f);
        break;
      }
    }
  }
  auto [apex, has_balanced] = detail::polygon_transition(p);
  if (!has_balanced) {
    i64 a = p.vertices[apex][0], b = p.vertices[apex][1];
    DualForm f = form_from_ints(3, {1, 1, checked_sub(checked_sub(1, a), b)});
    out.emplace_back(make_cone(std::vector<Vec>{e1, e2, p.vertices[apex]}, 3), f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// the 13 exceptional ray sets
// ---------------------------------------------------------------------------

inline constexpr int kSporadicTableVersion = 1;

/// One row of the built-in table: the rays beyond e1, e2, e3 and the
/// supporting hyperplane forms as printed in the source data.  Forms flagged
/// not well-formed are placeholders for a degenerate printed entry and are
/// reconstructed from the rays by exact hull computation.
struct SporadicRow {
  int index;
  std::vector<Vec> extra_rays;
  std::vector<DualForm> printed_forms;
  bool has_misprinted_form;
};

inline const std::vector<SporadicRow>& sporadic_table() {
  auto F = [](i64 a, i64 b, i64 c) { return form_from_ints(3, {a, b, c}); };
  static const std::vector<SporadicRow> table = {
      {1, {vec3(15, 10, 6)}, {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -4)}, false},
      {2, {vec3(6, 4, 3)}, {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -3)}, false},
      {3, {vec3(3, 2, 2)}, {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -2)}, false},
      {4,
       {vec3(9, 6, 4), vec3(5, 4, 2)},
       {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -4), F(1, 0, -2)},
       false},
      {5,
       {vec3(5, 4, 2), vec3(3, 2, 2)},
       {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -4), F(1, -1, 0)},
       false},
      {6,
       {vec3(4, 3, 2), vec3(3, 2, 2)},
       {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -3), F(1, -1, 0)},
       false},
      {7,
       {vec3(3, 2, 2), vec3(2, 2, 1)},
       {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -3), F(1, 0, -1)},
       false},
      {8,
       {vec3(5, 4, 2), vec3(2, 1, 2)},
       {F(-1, 1, 1), F(1, -3, 1), F(1, 1, -4), F(1, -1, 0)},
       false},
      {9,
       {vec3(4, 3, 2), vec3(2, 1, 2)},
       {F(-1, 1, 1), F(1, -3, 1), F(1, 1, -3), F(1, -1, 0)},
       false},
      {10,
       {vec3(6, 4, 3), vec3(5, 3, 2), vec3(3, 2, 1)},
       {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -4), F(1, 0, -2)},
       true},
      {11,
       {vec3(4, 3, 2), vec3(3, 2, 2), vec3(3, 2, 1)},
       {F(-1, 1, 1), F(1, -2, 1), F(1, 1, -4), F(1, -1, 0)},
       true},
      {12,
       {vec3(4, 3, 2), vec3(3, 2, 1), vec3(2, 1, 2)},
       {F(-1, 1, 1), F(1, -3, 1), F(1, 1, -4), F(1, -1, 0)},
       true},
      // the source ray column for this row lists (2,1,1), which is the
      // midpoint of e1 and (3,2,2) and so cannot be a ray of a Fano face
      // fan; the verified ray is (2,2,1), whose computed facet forms equal
      // the printed hyperplane column exactly
      {13,
       {vec3(3, 2, 2), vec3(2, 2, 1), vec3(2, 1, 2)},
       {F(-1, 1, 1), F(1, -3, 1), F(1, 1, -3), F(1, 0, -1), F(1, -1, 0)},
       false},
  };
  return table;
}

/// The k-th exceptional fan: the face fan over Conv(0, e1, e2, e3, extras).
inline Fan sporadic(int k) {
  if (k < 1 || k > 13)
    throw Error("constructions.IndexOutOfRange",
                "sporadic index must lie in 1..13");
  const SporadicRow& row = sporadic_table()[static_cast<std::size_t>(k - 1)];
  std::vector<Vec> pts{vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
  pts.insert(pts.end(), row.extra_rays.begin(), row.extra_rays.end());
  return face_fan(convex_hull(pts));
}

}  // namespace latfan
