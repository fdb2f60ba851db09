// Canonical forms under coordinate permutation, the classifier, the bounding
// region for the exceptional case, and the exhaustive enumerations that
// reproduce the counts 13 (fans) and 23 (polygons).

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latfan/constructions.hpp"
#include "latfan/fan.hpp"
#include "latfan/fano.hpp"
#include "latfan/lattice.hpp"

namespace latfan {

// ---------------------------------------------------------------------------
// coordinate permutations
// ---------------------------------------------------------------------------

/// Coordinate permutation: (apply(v))[i] = v[map[i]].
struct Permutation {
  int dim = 3;
  std::array<int, 3> map{0, 1, 2};

  Vec apply(const Vec& v) const {
    Vec w;
    w.dim = dim;
    for (int i = 0; i < dim; ++i) w[i] = v[map[static_cast<std::size_t>(i)]];
    return w;
  }

  bool is_identity() const {
    for (int i = 0; i < dim; ++i)
      if (map[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.dim == b.dim && a.map == b.map;
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    os << '[';
    for (int i = 0; i < p.dim; ++i)
      os << (i ? " " : "") << p.map[static_cast<std::size_t>(i)];
    return os << ']';
  }
};

inline std::vector<Permutation> all_permutations(int dim) {
  std::vector<Permutation> out;
  std::array<int, 3> idx{0, 1, 2};
  if (dim == 2) {
    out.push_back({2, {0, 1, 2}});
    out.push_back({2, {1, 0, 2}});
    return out;
  }
  std::sort(idx.begin(), idx.end());
  do {
    out.push_back({3, idx});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

inline Fan apply(const Permutation& g, const Fan& f) {
  std::vector<Cone> cones;
  for (const Cone& c : f.max_cones) {
    std::vector<Vec> gens;
    for (const Vec& v : c.gens) gens.push_back(g.apply(v));
    cones.push_back(make_cone(gens, f.dim));
  }
  return make_fan(std::move(cones), f.dim);
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

namespace detail {

inline std::string serialize_rays(int dim, std::vector<Vec> rays) {
  std::sort(rays.begin(), rays.end());
  std::ostringstream os;
  os << dim << ':';
  for (const Vec& r : rays) {
    os << '[';
    for (int i = 0; i < dim; ++i) os << (i ? "," : "") << r[i];
    os << ']';
  }
  return os.str();
}

}  // namespace detail

/// Lexicographically minimal serialization of the sorted ray list over all
/// d! coordinate permutations.  Two fans supported on the orthant get equal
/// keys iff their ray sets are related by a coordinate permutation.
inline std::string canonical_form(const Fan& f) {
  FanValidation v = validate_fan(f, /*require_support=*/true);
  if (!v) throw Error(v.code, v.message);
  std::optional<std::string> best;
  for (const Permutation& g : all_permutations(f.dim)) {
    std::vector<Vec> rays;
    for (const Vec& r : f.rays) rays.push_back(g.apply(r));
    std::string key = detail::serialize_rays(f.dim, std::move(rays));
    if (!best || key < *best) best = std::move(key);
  }
  return *best;
}

inline std::string key_hex(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// reading a polygon back off a fan
// ---------------------------------------------------------------------------

struct PolygonFromFanResult {
  std::optional<AdmissiblePolygon> polygon;
  Permutation perm;  // carries the fan onto the polygon's normal position

  bool ok() const { return polygon.has_value(); }
};

/// If some maximal cone has a coordinate functional as its value-1 form, the
/// fan is the polygon fan of its height-1 facet: normalize that coordinate
/// into third position, read the facet vertices off clockwise from e3 and
/// validate.  Requires a Fano fan.
inline PolygonFromFanResult polygon_from_fan(const Fan& f) {
  PolygonFromFanResult out;
  if (f.dim != 3) return out;
  for (const Cone& c : f.max_cones) {
    GorensteinFormResult gf = gorenstein_form(c);
    if (!gf.integral()) continue;
    int axis = -1;
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
      if ((*gf.form)[i] == Rat(0)) continue;
      ++nonzero;
      if ((*gf.form)[i] == Rat(1)) axis = i;
    }
    if (nonzero != 1 || axis < 0) continue;
    // candidate permutations move the found axis to the third coordinate
    std::array<int, 2> rest{};
    int r = 0;
    for (int i = 0; i < 3; ++i)
      if (i != axis) rest[static_cast<std::size_t>(r++)] = i;
    for (const std::array<int, 3>& mp :
         {std::array<int, 3>{rest[0], rest[1], axis},
          std::array<int, 3>{rest[1], rest[0], axis}}) {
      Permutation g{3, mp};
      std::vector<Vec> pts;
      for (const Vec& v : c.gens) pts.push_back(g.apply(v));
      std::vector<Vec> cyc = planar_cycle(pts, vec3(0, 0, 1));
      if (cyc.size() != pts.size()) continue;  // non-extremal generator
      std::reverse(cyc.begin(), cyc.end());    // planar_cycle is ccw; want cw
      auto it = std::find(cyc.begin(), cyc.end(), vec3(0, 0, 1));
      if (it == cyc.end()) continue;
      std::rotate(cyc.begin(), it, cyc.end());
      PolygonValidation pv = validate_polygon(cyc);
      if (pv.ok()) {
        out.polygon = std::move(pv.polygon);
        out.perm = g;
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

struct ClassLabel {
  enum Kind { kNotLocalFano, kAffine, kFamilyI, kPolytopeType, kSporadic, kUnclassified };
  Kind kind = kUnclassified;
  i64 m = 0;                                 // kFamilyI
  int k = 0;                                 // kSporadic
  std::optional<AdmissiblePolygon> polygon;  // kPolytopeType
  Permutation perm;                          // normalizing permutation
  FanoGrade grade;
  std::string canonical_key;

  std::string to_string() const {
    std::ostringstream os;
    switch (kind) {
      case kNotLocalFano:
        os << "NotLocalFano(gorenstein=" << (grade.gorenstein ? "true" : "false")
           << ",weak_fano=" << (grade.weak_fano ? "true" : "false")
           << ",fano=" << (grade.fano ? "true" : "false") << ')';
        break;
      case kAffine:
        os << "Affine";
        break;
      case kFamilyI:
        os << "FamilyI(" << m << ')';
        break;
      case kPolytopeType:
        os << "PolytopeType";
        break;
      case kSporadic:
        os << "Sporadic(" << k << ')';
        break;
      case kUnclassified:
        os << "UnclassifiedWitness";
        break;
    }
    return os.str();
  }
};

namespace detail {

inline const std::vector<std::string>& sporadic_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> ks;
    for (int k = 1; k <= 13; ++k) ks.push_back(canonical_form(sporadic(k)));
    return ks;
  }();
  return keys;
}

}  // namespace detail

/// Labels in the fixed priority Affine > FamilyI > PolytopeType > Sporadic.
/// A valid fan that is not Gorenstein-and-Fano gets NotLocalFano with its
/// grade; UnclassifiedWitness must never occur and is a test failure.
inline ClassLabel classify(const Fan& f) {
  if (f.dim != 3)
    throw Error("classify_enum.UnsupportedDimension",
                "classification is for fans on affine 3-space");
  FanValidation v = validate_fan(f, /*require_support=*/true);
  if (!v) throw Error(v.code, v.message);

  ClassLabel label;
  label.grade = fano_grade(f);
  if (!(label.grade.gorenstein && label.grade.fano)) {
    label.kind = ClassLabel::kNotLocalFano;
    return label;
  }
  label.canonical_key = canonical_form(f);

  const Vec e1 = vec3(1, 0, 0), e2 = vec3(0, 1, 0), e3 = vec3(0, 0, 1);
  if (f.rays == std::vector<Vec>{e3, e2, e1}) {  // lexicographic order
    label.kind = ClassLabel::kAffine;
    return label;
  }

  if (f.rays.size() == 4) {
    std::vector<Vec> extras;
    for (const Vec& r : f.rays)
      if (r != e1 && r != e2 && r != e3) extras.push_back(r);
    if (extras.size() == 1) {
      std::array<i64, 3> s{extras[0][0], extras[0][1], extras[0][2]};
      std::sort(s.begin(), s.end());
      if (s[0] == 1 && s[1] == s[2] && s[1] >= 1) {
        i64 m = s[1];
        for (const Permutation& g : all_permutations(3)) {
          if (g.apply(extras[0]) == vec3(m, m, 1)) {
            label.kind = ClassLabel::kFamilyI;
            label.m = m;
            label.perm = g;
            return label;
          }
        }
      }
    }
  }

  PolygonFromFanResult pf = polygon_from_fan(f);
  if (pf.ok()) {
    label.kind = ClassLabel::kPolytopeType;
    label.polygon = pf.polygon;
    label.perm = pf.perm;
    return label;
  }

  const auto& keys = detail::sporadic_keys();
  for (int k = 1; k <= 13; ++k) {
    if (label.canonical_key != keys[static_cast<std::size_t>(k - 1)]) continue;
    label.kind = ClassLabel::kSporadic;
    label.k = k;
    Fan target = sporadic(k);
    for (const Permutation& g : all_permutations(3)) {
      if (apply(g, f) == target) {
        label.perm = g;
        break;
      }
    }
    return label;
  }

  label.kind = ClassLabel::kUnclassified;
  return label;
}

// ---------------------------------------------------------------------------
// the bounding region of the exceptional case
// ---------------------------------------------------------------------------

/// The wedge pair Conv(0,e1,e2,e3,z1) u Conv(0,e1,e2,e3,z2) bounding every
/// exceptional Gamma body, recomputed from the defining line and plane data.
struct RegionIIb {
  HullComplex wedge1, wedge2;
  Vec z1, z2;
  std::vector<i64> alphas;                       // admissible plane constants
  std::vector<Rat> t_values;                     // intersection parameters
  std::vector<std::pair<i64, Vec>> line_contacts;  // integral contact points
  Vec nonconvexity_witness;  // in Conv(z1,z2), outside both wedges
};

/// Point (3t-3, 2t-2, t) of the critical line for integer t.
inline Vec iib_line_point(i64 t) {
  return vec3(checked_sub(checked_mul(3, t), 3), checked_sub(checked_mul(2, t), 2), t);
}

inline RegionIIb iib_bound() {
  RegionIIb r;
  // planes Z1+Z2+alpha*Z3 = 1 meeting the line x(t) = (3t-3, 2t-2, t) at a
  // parameter t0 in [1, 6]: alpha = 6/t0 - 5, so integer alpha means
  // t0 = 6/(alpha+5) and 1 <= t0 <= 6 forces alpha in {1,0,-1,-2,-3,-4}
  for (i64 alpha = -8; alpha <= 8; ++alpha) {
    i64 den = alpha + 5;
    if (den <= 0) continue;
    Rat t0(6, den);
    if (Rat(1) <= t0 && t0 <= Rat(6)) {
      r.alphas.push_back(alpha);
      r.t_values.push_back(t0);
      if (t0.is_integer()) {
        r.line_contacts.emplace_back(alpha, iib_line_point(t0.num));
      }
    }
  }
  // the extreme admissible plane meets the line farthest out
  Rat t_max = r.t_values.front();
  for (const Rat& t : r.t_values) t_max = std::max(t_max, t);
  if (!t_max.is_integer())
    throw Error("classify_enum.InternalInvariant",
                "extreme line contact is not a lattice point");
  r.z1 = iib_line_point(t_max.num);
  r.z2 = vec3(r.z1[0], r.z1[2], r.z1[1]);

  const Vec zero = vec3(0, 0, 0), e1 = vec3(1, 0, 0), e2 = vec3(0, 1, 0),
            e3 = vec3(0, 0, 1);
  r.wedge1 = convex_hull(std::vector<Vec>{zero, e1, e2, e3, r.z1});
  r.wedge2 = convex_hull(std::vector<Vec>{zero, e1, e2, e3, r.z2});

  // midpoint of [z1, z2]: integral, and outside both wedges
  Vec mid = vec3(r.z1[0], checked_add(r.z1[1], r.z2[1]) / 2,
                 checked_add(r.z1[2], r.z2[2]) / 2);
  if (r.wedge1.contains(mid) || r.wedge2.contains(mid))
    throw Error("classify_enum.InternalInvariant",
                "expected non-convexity witness lies in a wedge");
  r.nonconvexity_witness = mid;
  return r;
}

// ---------------------------------------------------------------------------
// exhaustive enumeration over a bounded region
// ---------------------------------------------------------------------------

struct EnumerationOptions {
  int max_points = 40;        // RegionTooLarge above this many lattice points
  bool reverse_order = false;  // alternative traversal, for order-independence
};

struct EnumerationStats {
  long nodes = 0;
  long extremal = 0;
  long kept = 0;
};

struct RegionEnumeration {
  std::vector<Fan> fans;          // sorted by canonical key
  std::vector<std::string> keys;  // parallel to fans
  EnumerationStats stats;
  std::vector<Vec> pool;  // nonzero lattice points of the region
};

/// Enumerates every ray set S inside the region with S containing the three
/// coordinate rays and every element of S a vertex of Conv(S u {0}), keeps
/// the face fans graded Gorenstein local toric Fano, and deduplicates by
/// canonical form.  Subsets that lose the every-element-extremal property
/// are pruned together with all their supersets.
inline RegionEnumeration enumerate_region(std::span<const HullComplex> pieces,
                                          const EnumerationOptions& opt = {}) {
  RegionEnumeration out;
  std::set<Vec> pool_set;
  for (const HullComplex& h : pieces)
    for (const TaggedPoint& tp : lattice_points(h))
      if (!tp.point.is_zero()) pool_set.insert(tp.point);
  out.pool.assign(pool_set.begin(), pool_set.end());
  if (static_cast<int>(out.pool.size()) > opt.max_points) {
    std::ostringstream os;
    os << "region has " << out.pool.size() << " nonzero lattice points, above the bound "
       << opt.max_points;
    throw Error("classify_enum.RegionTooLarge", os.str());
  }
  const Vec e1 = vec3(1, 0, 0), e2 = vec3(0, 1, 0), e3 = vec3(0, 0, 1);
  for (const Vec& e : {e1, e2, e3})
    if (!pool_set.count(e))
      throw Error("classify_enum.InvalidRegion",
                  "region must contain the three coordinate rays");

  // only primitive points can be rays of a fan
  std::vector<Vec> cands;
  for (const Vec& p : out.pool)
    if (p != e1 && p != e2 && p != e3 && content(p) == 1) cands.push_back(p);
  if (opt.reverse_order) std::reverse(cands.begin(), cands.end());

  const Vec zero = vec3(0, 0, 0);
  std::map<std::string, Fan> found;

  auto evaluate = [&](const std::vector<Vec>& rays) {
    std::vector<Vec> pts = rays;
    pts.push_back(zero);
    HullComplex hull = convex_hull(pts);
    for (const Vec& rp : rays)
      if (hull.vertex_index(rp) < 0) return false;  // prune: non-extremal ray
    ++out.stats.extremal;
    Fan fan = face_fan(hull);
    FanValidation v = validate_fan(fan, /*require_support=*/true);
    if (!v) return true;
    FanoGrade grade = fano_grade(fan);
    if (grade.gorenstein && grade.fano) {
      std::string key = canonical_form(fan);
      if (!found.count(key)) {
        found.emplace(std::move(key), std::move(fan));
        ++out.stats.kept;
      }
    }
    return true;
  };

  std::vector<Vec> base{e1, e2, e3};
  auto dfs = [&](auto&& self, std::vector<Vec>& rays, std::size_t start) -> void {
    ++out.stats.nodes;
    std::vector<Vec> sorted_rays = rays;
    std::sort(sorted_rays.begin(), sorted_rays.end());
    if (!evaluate(sorted_rays)) return;
    for (std::size_t i = start; i < cands.size(); ++i) {
      rays.push_back(cands[i]);
      self(self, rays, i + 1);
      rays.pop_back();
    }
  };
  dfs(dfs, base, 0);

  for (auto& [key, fan] : found) {
    out.keys.push_back(key);
    out.fans.push_back(std::move(fan));
  }
  return out;
}

inline RegionEnumeration enumerate_region(const HullComplex& region,
                                          const EnumerationOptions& opt = {}) {
  return enumerate_region(std::span<const HullComplex>(&region, 1), opt);
}

inline RegionEnumeration enumerate_region(const RegionIIb& region,
                                          const EnumerationOptions& opt = {}) {
  std::array<HullComplex, 2> pieces{region.wedge1, region.wedge2};
  return enumerate_region(std::span<const HullComplex>(pieces.data(), 2), opt);
}

// ---------------------------------------------------------------------------
// the 13 exceptional fans, by exhaustive search
// ---------------------------------------------------------------------------

struct IibEntry {
  std::string key;
  Fan fan;
  ClassLabel label;
};

struct IibReport {
  RegionIIb region;
  std::vector<IibEntry> entries;    // every class found, sorted by key
  std::vector<IibEntry> sporadics;  // the exceptional ones, sorted by index
  EnumerationStats stats;
};

inline IibReport enumerate_iib(const EnumerationOptions& opt = {}) {
  IibReport report;
  report.region = iib_bound();
  RegionEnumeration e = enumerate_region(report.region, opt);
  report.stats = e.stats;
  for (std::size_t i = 0; i < e.fans.size(); ++i) {
    IibEntry entry{e.keys[i], e.fans[i], classify(e.fans[i])};
    report.entries.push_back(std::move(entry));
  }
  for (const IibEntry& entry : report.entries)
    if (entry.label.kind == ClassLabel::kSporadic) report.sporadics.push_back(entry);
  std::sort(report.sporadics.begin(), report.sporadics.end(),
            [](const IibEntry& a, const IibEntry& b) { return a.label.k < b.label.k; });
  return report;
}

// ---------------------------------------------------------------------------
// the 23 lattice polygons
// ---------------------------------------------------------------------------

namespace detail {

using RatPoint = std::array<Rat, 2>;

inline Rat polygon_area2(const std::vector<RatPoint>& poly) {
  Rat s(0);
  const std::size_t n = poly.size();
  if (n < 3) return Rat(0);
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint &p = poly[i], &q = poly[(i + 1) % n];
    s = s + (p[0] * q[1] - q[0] * p[1]);
  }
  return s < Rat(0) ? -s : s;
}

inline std::vector<RatPoint> clip_halfplane(const std::vector<RatPoint>& poly,
                                            const Vec& normal, i64 offset) {
  std::vector<RatPoint> out;
  const std::size_t n = poly.size();
  auto val = [&](const RatPoint& p) {
    return Rat(normal[0]) * p[0] + Rat(normal[1]) * p[1];
  };
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint &p = poly[i], &q = poly[(i + 1) % n];
    Rat vp = val(p), vq = val(q);
    bool pin = vp <= Rat(offset), qin = vq <= Rat(offset);
    if (pin) out.push_back(p);
    if (pin != qin) {
      Rat t = (Rat(offset) - vp) / (vq - vp);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

inline std::vector<RatPoint> clip_by_hull(std::vector<RatPoint> poly,
                                          const HullComplex& hull) {
  for (const HullFacet& f : hull.facets) {
    if (poly.empty()) break;
    poly = clip_halfplane(poly, f.normal, f.offset);
  }
  return poly;
}

}  // namespace detail

struct PolygonEnumeration {
  std::vector<std::vector<Vec>> polygons;  // canonical representatives, 3d vertices
  int count_all = 0;    // before the coordinate-swap deduplication
  int count_dedup = 0;  // after it
  std::vector<Vec> pool;  // 3d lattice points of the planar region
};

/// Convex lattice polygons inside Conv(e2,e3,z1) u Conv(e2,e3,z2) (all in
/// the plane -Z1+Z2+Z3 = 1) that contain e2, e3 and (3,2,2), counted up to
/// the Z2<->Z3 swap that exchanges the two triangles.
inline PolygonEnumeration enumerate_polygons_iib() {
  // lattice isomorphism of the plane -Z1+Z2+Z3 = 1 with Z^2
  auto to2 = [](const Vec& p) { return vec2(p[1], checked_sub(p[2], 1)); };
  auto to3 = [](const Vec& q) {
    return vec3(checked_add(q[0], q[1]), q[0], checked_add(q[1], 1));
  };
  // the swap Z2<->Z3 in plane coordinates
  auto swap2 = [](const Vec& q) { return vec2(checked_add(q[1], 1), checked_sub(q[0], 1)); };

  RegionIIb region = iib_bound();
  const Vec e2p = to2(vec3(0, 1, 0));      // (1,-1)
  const Vec e3p = to2(vec3(0, 0, 1));      // (0,0)
  const Vec mark = to2(vec3(3, 2, 2));     // (2,1), the point x0 + x1
  HullComplex t1 = convex_hull(std::vector<Vec>{e2p, e3p, to2(region.z1)});
  HullComplex t2 = convex_hull(std::vector<Vec>{e2p, e3p, to2(region.z2)});

  std::set<Vec> pool_set;
  for (const HullComplex* t : {&t1, &t2})
    for (const TaggedPoint& tp : lattice_points(*t)) pool_set.insert(tp.point);

  PolygonEnumeration out;
  for (const Vec& p : pool_set) out.pool.push_back(to3(p));
  std::sort(out.pool.begin(), out.pool.end());

  std::vector<Vec> cands;
  for (const Vec& p : pool_set)
    if (p != e2p && p != e3p) cands.push_back(p);

  auto in_region = [&](const HullComplex& hull) {
    // boundary cycle of the polygon, via the planar chain on lifted points
    std::vector<Vec> lifted;
    for (const Vec& v : hull.vertices) lifted.push_back(vec3(v[0], v[1], 0));
    std::vector<Vec> cyc = planar_cycle(lifted, vec3(0, 0, 1));
    std::vector<detail::RatPoint> poly;
    for (const Vec& v : cyc) poly.push_back({Rat(v[0]), Rat(v[1])});
    Rat a = detail::polygon_area2(poly);
    Rat a1 = detail::polygon_area2(detail::clip_by_hull(poly, t1));
    Rat a2 = detail::polygon_area2(detail::clip_by_hull(poly, t2));
    Rat a12 = detail::polygon_area2(detail::clip_by_hull(detail::clip_by_hull(poly, t1), t2));
    return a == a1 + a2 - a12;
  };

  std::set<std::vector<Vec>> raw;  // accepted vertex sets, sorted
  std::vector<Vec> base{e2p, e3p};
  auto dfs = [&](auto&& self, std::vector<Vec>& pts, std::size_t start) -> void {
    std::vector<Vec> sorted_pts = pts;
    std::sort(sorted_pts.begin(), sorted_pts.end());
    HullComplex hull = convex_hull(sorted_pts);
    for (const Vec& p : sorted_pts)
      if (hull.vertex_index(p) < 0) return;  // prune: not in convex position
    if (hull.dim == 2 && hull.contains(mark) && in_region(hull))
      raw.insert(sorted_pts);
    for (std::size_t i = start; i < cands.size(); ++i) {
      pts.push_back(cands[i]);
      self(self, pts, i + 1);
      pts.pop_back();
    }
  };
  dfs(dfs, base, 0);

  out.count_all = static_cast<int>(raw.size());
  std::set<std::vector<Vec>> dedup;
  for (const std::vector<Vec>& pts : raw) {
    std::vector<Vec> mirrored;
    for (const Vec& p : pts) mirrored.push_back(swap2(p));
    std::sort(mirrored.begin(), mirrored.end());
    dedup.insert(std::min(pts, mirrored));
  }
  out.count_dedup = static_cast<int>(dedup.size());
  for (const std::vector<Vec>& pts : dedup) {
    std::vector<Vec> lifted;
    for (const Vec& p : pts) lifted.push_back(to3(p));
    std::sort(lifted.begin(), lifted.end());
    out.polygons.push_back(std::move(lifted));
  }
  std::sort(out.polygons.begin(), out.polygons.end());
  return out;
}

}  // namespace latfan
