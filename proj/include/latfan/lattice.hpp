// Exact integer linear algebra and convex hulls over Z^d, d = 2 or 3.
//
// All coordinate arithmetic is overflow-checked 64-bit; supporting forms are
// exact rationals.  Everything here is an immutable value, and every function
// is pure, so concurrent use needs no synchronization.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace latfan {

using i64 = std::int64_t;

/// Domain error carrying a module-qualified code such as
/// "lattice_core.Overflow" next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// ---------------------------------------------------------------------------
// checked 64-bit arithmetic: abort loudly, never wrap
// ---------------------------------------------------------------------------

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error("lattice_core.Overflow", "integer overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error("lattice_core.Overflow", "integer overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error("lattice_core.Overflow", "integer overflow in multiplication");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i64 gcd_i64(i64 a, i64 b) {
  a = a < 0 ? checked_neg(a) : a;
  b = b < 0 ? checked_neg(b) : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// ---------------------------------------------------------------------------
// LatticeVector
// ---------------------------------------------------------------------------

/// Integer point of Z^d (d = 2 or 3).  Unused trailing coordinates are 0.
struct Vec {
  int dim = 3;
  std::array<i64, 3> c{0, 0, 0};

  i64 operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  i64& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.dim == b.dim && a.c == b.c;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  // lexicographic; total order used for all deterministic tie-breaking
  friend bool operator<(const Vec& a, const Vec& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.c < b.c;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (int i = 0; i < v.dim; ++i) os << (i ? "," : "") << v[i];
    return os << ')';
  }
};

inline Vec vec2(i64 x, i64 y) { return Vec{2, {x, y, 0}}; }
inline Vec vec3(i64 x, i64 y, i64 z) { return Vec{3, {x, y, z}}; }

inline Vec unit(int dim, int i) {
  Vec v;
  v.dim = dim;
  v[i] = 1;
  return v;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline Vec scale(i64 k, const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] = checked_mul(k, a[i]);
  return r;
}

inline i64 dot(const Vec& a, const Vec& b) {
  i64 s = 0;
  for (int i = 0; i < a.dim; ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline Vec cross(const Vec& a, const Vec& b) {
  return vec3(checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
              checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
              checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0])));
}

inline i64 cross2(const Vec& a, const Vec& b) {
  return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

/// gcd of the coordinates (0 for the zero vector).
inline i64 content(const Vec& v) {
  i64 g = 0;
  for (int i = 0; i < v.dim; ++i) g = gcd_i64(g, v[i]);
  return g;
}

/// v divided by the gcd of its coordinates; spans the same ray.
inline Vec primitive_vector(const Vec& v) {
  if (v.is_zero())
    throw Error("lattice_core.ZeroVector",
                "the zero vector spans no ray and has no primitive form");
  i64 g = content(v);
  Vec r = v;
  for (int i = 0; i < v.dim; ++i) r[i] = v[i] / g;
  return r;
}

inline i64 determinant2(const Vec& a, const Vec& b) { return cross2(a, b); }

/// Exact 3x3 determinant of the three vectors as rows.
inline i64 determinant3(const Vec& a, const Vec& b, const Vec& c) {
  return dot(a, cross(b, c));
}

// ---------------------------------------------------------------------------
// exact rationals
// ---------------------------------------------------------------------------

/// Reduced fraction over checked 64-bit integers; denominator always > 0.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw Error("lattice_core.ZeroDenominator", "division by zero");
    if (den < 0) {
      num = checked_neg(num);
      den = checked_neg(den);
    }
    i64 g = gcd_i64(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw Error("lattice_core.ZeroDenominator", "division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
  }
  Rat operator-() const { return Rat(checked_neg(num), den); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os;
  }
};

// ---------------------------------------------------------------------------
// DualForm
// ---------------------------------------------------------------------------

/// Integer or rational linear functional on N; the +1 convention is used
/// everywhere: a supporting form takes value 1 on the points it supports.
struct DualForm {
  int dim = 3;
  std::array<Rat, 3> c{};

  Rat operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  Rat& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  bool integral() const {
    for (int i = 0; i < dim; ++i)
      if (!c[static_cast<std::size_t>(i)].is_integer()) return false;
    return true;
  }

  Rat eval(const Vec& v) const {
    Rat s(0);
    for (int i = 0; i < dim; ++i) s = s + (*this)[i] * Rat(v[i]);
    return s;
  }

  /// Integer coordinates; only valid when integral().
  Vec as_vec() const {
    Vec v;
    v.dim = dim;
    for (int i = 0; i < dim; ++i) {
      if (!(*this)[i].is_integer())
        throw Error("lattice_core.NonIntegral", "form is not integral");
      v[i] = (*this)[i].num;
    }
    return v;
  }

  friend bool operator==(const DualForm& a, const DualForm& b) {
    return a.dim == b.dim && a.c == b.c;
  }
  friend bool operator!=(const DualForm& a, const DualForm& b) { return !(a == b); }
  friend bool operator<(const DualForm& a, const DualForm& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (std::size_t i = 0; i < 3; ++i) {
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const DualForm& f) {
    os << '(';
    for (int i = 0; i < f.dim; ++i) os << (i ? "," : "") << f[i];
    return os << ')';
  }
};

inline DualForm form_from_ints(int dim, std::array<i64, 3> a) {
  DualForm f;
  f.dim = dim;
  for (int i = 0; i < dim; ++i) f[i] = Rat(a[static_cast<std::size_t>(i)]);
  return f;
}

// ---------------------------------------------------------------------------
// support form: the unique u with <u, p> = 1 on all p
// ---------------------------------------------------------------------------

enum class SupportFormStatus { kUnique, kNotUnique, kNoSolution };

struct SupportFormResult {
  SupportFormStatus status = SupportFormStatus::kNoSolution;
  std::optional<DualForm> form;  // present iff status == kUnique
};

/// Solves <u, p> = 1 for all p by exact rational elimination.  Unique when
/// the points affinely span a hyperplane missing 0; NotUnique when the span
/// is too small; NoSolution when inconsistent (0 in the affine span).
inline SupportFormResult support_form(std::span<const Vec> points) {
  if (points.empty()) return {SupportFormStatus::kNoSolution, std::nullopt};
  const int d = points.front().dim;
  std::vector<std::array<Rat, 4>> rows;
  rows.reserve(points.size());
  for (const Vec& p : points) {
    std::array<Rat, 4> row{Rat(0), Rat(0), Rat(0), Rat(1)};
    for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = Rat(p[i]);
    rows.push_back(row);
  }
  int rank = 0;
  std::array<int, 3> pivot_col{-1, -1, -1};
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
    const auto pr = rows[static_cast<std::size_t>(rank)];
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      Rat f = row[static_cast<std::size_t>(col)] / pr[static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < 4; ++k) row[k] = row[k] - f * pr[k];
    }
    pivot_col[static_cast<std::size_t>(rank)] = col;
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
    if (!rows[static_cast<std::size_t>(r)][3].is_zero())
      return {SupportFormStatus::kNoSolution, std::nullopt};
  }
  if (rank < d) return {SupportFormStatus::kNotUnique, std::nullopt};
  DualForm u;
  u.dim = d;
  for (int r = 0; r < rank; ++r) {
    int col = pivot_col[static_cast<std::size_t>(r)];
    u[col] = rows[static_cast<std::size_t>(r)][3] /
             rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
  }
  return {SupportFormStatus::kUnique, u};
}

// ---------------------------------------------------------------------------
// convex hulls
// ---------------------------------------------------------------------------

/// One facet of a full-dimensional hull: primitive outward integer normal n
/// with n.x <= offset on the hull.  When offset != 0 the rational form
/// n/offset takes value 1 exactly on the facet (the +1 normalization); when
/// the facet passes through the origin, offset is 0 and no such form exists.
struct HullFacet {
  Vec normal;
  i64 offset = 0;
  std::vector<int> cycle;     // vertex indices in boundary order (outward CCW in 3d)
  std::vector<int> vertices;  // same indices, sorted

  bool through_origin() const { return offset == 0; }

  DualForm form() const {
    if (offset == 0)
      throw Error("lattice_core.OriginFacet",
                  "facet through the origin has no value-1 form");
    DualForm f;
    f.dim = normal.dim;
    for (int i = 0; i < normal.dim; ++i) f[i] = Rat(normal[i], offset);
    return f;
  }
};

struct HullComplex {
  int ambient_dim = 3;
  int dim = 0;                // affine dimension of the input points
  std::vector<Vec> vertices;  // extreme points, lexicographically sorted
  std::vector<HullFacet> facets;  // populated only when dim == ambient_dim

  bool degenerate() const { return dim < ambient_dim; }

  int vertex_index(const Vec& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
  }

  bool contains(const Vec& p) const {
    if (degenerate())
      throw Error("lattice_core.DegenerateDimension",
                  "membership test requires a full-dimensional hull");
    for (const HullFacet& f : facets)
      if (dot(f.normal, p) > f.offset) return false;
    return true;
  }

  /// d! times the Euclidean volume, by triangulating from the first vertex.
  i64 normalized_volume() const {
    if (degenerate())
      throw Error("lattice_core.DegenerateDimension",
                  "volume requires a full-dimensional hull");
    const Vec& apex = vertices.front();
    i64 vol = 0;
    for (const HullFacet& f : facets) {
      if (dot(f.normal, apex) == f.offset) continue;  // apex on facet
      const Vec& v0 = vertices[static_cast<std::size_t>(f.cycle[0])];
      for (std::size_t i = 1; i + 1 < f.cycle.size(); ++i) {
        const Vec& a = vertices[static_cast<std::size_t>(f.cycle[i])];
        const Vec& b = vertices[static_cast<std::size_t>(f.cycle[i + 1])];
        i64 t = 0;
        if (ambient_dim == 3) {
          t = determinant3(sub(v0, apex), sub(a, apex), sub(b, apex));
        } else {
          t = determinant2(sub(v0, apex), sub(a, apex));
        }
        vol = checked_add(vol, t < 0 ? checked_neg(t) : t);
      }
      if (ambient_dim == 2) {
        // 2d facets are segments: cycle has exactly two entries
        const Vec& a = vertices[static_cast<std::size_t>(f.cycle[0])];
        const Vec& b = vertices[static_cast<std::size_t>(f.cycle[1])];
        i64 t = determinant2(sub(a, apex), sub(b, apex));
        vol = checked_add(vol, t < 0 ? checked_neg(t) : t);
      }
    }
    return vol;
  }
};

namespace detail {

inline std::vector<Vec> sorted_unique(std::span<const Vec> pts) {
  std::vector<Vec> v(pts.begin(), pts.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline int affine_dim(const std::vector<Vec>& pts, Vec* d1_out = nullptr,
                      Vec* d2_out = nullptr) {
  if (pts.size() <= 1) return 0;
  const Vec& p0 = pts.front();
  Vec d1, d2;
  bool have1 = false, have2 = false;
  for (const Vec& p : pts) {
    Vec d = sub(p, p0);
    if (d.is_zero()) continue;
    if (!have1) {
      d1 = d;
      have1 = true;
      continue;
    }
    bool indep = p0.dim == 2 ? cross2(d1, d) != 0 : !cross(d1, d).is_zero();
    if (!have2 && indep) {
      d2 = d;
      have2 = true;
      continue;
    }
    if (have2 && p0.dim == 3 && determinant3(d1, d2, d) != 0) {
      return 3;
    }
  }
  if (d1_out && have1) *d1_out = d1;
  if (d2_out && have2) *d2_out = d2;
  if (have2) return 2;
  return have1 ? 1 : 0;
}

}  // namespace detail

/// Cyclic boundary order of coplanar 3d points (plane normal given), via a
/// monotone chain under the lexicographic sweep.  Returns the extreme points
/// only, as one full cycle.
inline std::vector<Vec> planar_cycle(std::span<const Vec> points, const Vec& normal) {
  std::vector<Vec> pts = detail::sorted_unique(points);
  if (pts.size() <= 2) return pts;
  auto orient = [&](const Vec& a, const Vec& b, const Vec& c) {
    i64 s = dot(normal, cross(sub(b, a), sub(c, a)));
    return s < 0 ? -1 : (s > 0 ? 1 : 0);
  };
  std::vector<Vec> lower, upper;
  for (const Vec& p : pts) {
    while (lower.size() >= 2 &&
           orient(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 &&
           orient(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

/// Exact convex hull for d in {2,3}.  Degenerate inputs (affine dimension
/// below d) are returned, not rejected: the true dimension is recorded, the
/// extreme points are listed and the facet list is left empty.
inline HullComplex convex_hull(std::span<const Vec> points) {
  if (points.empty())
    throw Error("lattice_core.EmptyPointSet", "convex hull of no points");
  HullComplex hull;
  const int d = points.front().dim;
  hull.ambient_dim = d;
  std::vector<Vec> pts = detail::sorted_unique(points);

  Vec dir1, dir2;
  hull.dim = detail::affine_dim(pts, &dir1, &dir2);

  if (hull.dim == 0) {
    hull.vertices = {pts.front()};
    return hull;
  }
  if (hull.dim == 1) {
    // lexicographic order is monotone along any line
    hull.vertices = {pts.front(), pts.back()};
    return hull;
  }
  if (hull.dim == 2 && d == 3) {
    Vec n = primitive_vector(cross(dir1, dir2));
    std::vector<Vec> cyc = planar_cycle(pts, n);
    hull.vertices = cyc;
    std::sort(hull.vertices.begin(), hull.vertices.end());
    return hull;
  }

  // full-dimensional: brute-force supporting hyperplanes
  std::map<std::pair<Vec, i64>, std::vector<Vec>> supports;
  const int n = static_cast<int>(pts.size());
  auto consider = [&](Vec normal, const Vec& base) {
    if (normal.is_zero()) return;
    normal = primitive_vector(normal);
    i64 b = dot(normal, base);
    bool above = false, below = false;
    for (const Vec& p : pts) {
      i64 v = dot(normal, p);
      above = above || v > b;
      below = below || v < b;
      if (above && below) return;
    }
    if (above) {
      normal = scale(-1, normal);
      b = checked_neg(b);
    }
    auto key = std::make_pair(normal, b);
    if (supports.count(key)) return;
    std::vector<Vec> contact;
    for (const Vec& p : pts)
      if (dot(normal, p) == b) contact.push_back(p);
    supports.emplace(key, std::move(contact));
  };

  if (d == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec e = sub(pts[static_cast<std::size_t>(j)], pts[static_cast<std::size_t>(i)]);
        consider(vec2(checked_neg(e[1]), e[0]), pts[static_cast<std::size_t>(i)]);
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          Vec e1 = sub(pts[static_cast<std::size_t>(j)], pts[static_cast<std::size_t>(i)]);
          Vec e2 = sub(pts[static_cast<std::size_t>(k)], pts[static_cast<std::size_t>(i)]);
          consider(cross(e1, e2), pts[static_cast<std::size_t>(i)]);
        }
  }

  // facet polygons and the vertex set they span
  struct RawFacet {
    Vec normal;
    i64 offset;
    std::vector<Vec> cycle;
  };
  std::vector<RawFacet> raw;
  std::set<Vec> vertex_set;
  for (const auto& [key, contact] : supports) {
    const auto& [normal, b] = key;
    std::vector<Vec> cyc;
    if (d == 2) {
      cyc = {contact.front(), contact.back()};  // contact sorted lex
    } else {
      cyc = planar_cycle(contact, normal);
      if (cyc.size() < 3) continue;  // contact collinear: not a facet
    }
    for (const Vec& v : cyc) vertex_set.insert(v);
    raw.push_back({normal, b, std::move(cyc)});
  }

  hull.vertices.assign(vertex_set.begin(), vertex_set.end());
  for (RawFacet& rf : raw) {
    HullFacet f;
    f.normal = rf.normal;
    f.offset = rf.offset;
    if (d == 3) {
      // orient the cycle outward: consecutive edge cross along the normal
      const Vec& a = rf.cycle[0];
      const Vec& b2 = rf.cycle[1];
      const Vec& c = rf.cycle[2];
      if (dot(rf.normal, cross(sub(b2, a), sub(c, b2))) < 0)
        std::reverse(rf.cycle.begin(), rf.cycle.end());
      // deterministic starting point: smallest vertex first
      auto mn = std::min_element(rf.cycle.begin(), rf.cycle.end());
      std::rotate(rf.cycle.begin(), mn, rf.cycle.end());
    }
    for (const Vec& v : rf.cycle) f.cycle.push_back(hull.vertex_index(v));
    f.vertices = f.cycle;
    std::sort(f.vertices.begin(), f.vertices.end());
    hull.facets.push_back(std::move(f));
  }
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const HullFacet& a, const HullFacet& b) {
              if (a.normal != b.normal) return a.normal < b.normal;
              return a.offset < b.offset;
            });
  return hull;
}

// ---------------------------------------------------------------------------
// lattice point scan
// ---------------------------------------------------------------------------

enum class PointLocation { kInterior, kBoundary, kVertex };

struct TaggedPoint {
  Vec point;
  PointLocation location;
};

/// All lattice points inside or on a full-dimensional hull, by bounding-box
/// scan against the exact facet inequalities.  Sorted lexicographically.
inline std::vector<TaggedPoint> lattice_points(const HullComplex& hull) {
  if (hull.degenerate())
    throw Error("lattice_core.DegenerateDimension",
                "lattice point scan requires a full-dimensional hull");
  std::array<i64, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int i = 0; i < hull.ambient_dim; ++i) {
    lo[static_cast<std::size_t>(i)] = hull.vertices.front()[i];
    hi[static_cast<std::size_t>(i)] = hull.vertices.front()[i];
  }
  for (const Vec& v : hull.vertices)
    for (int i = 0; i < hull.ambient_dim; ++i) {
      lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], v[i]);
      hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], v[i]);
    }
  std::vector<TaggedPoint> out;
  Vec p;
  p.dim = hull.ambient_dim;
  const bool flat = hull.ambient_dim == 2;
  for (i64 x = lo[0]; x <= hi[0]; ++x)
    for (i64 y = lo[1]; y <= hi[1]; ++y)
      for (i64 z = flat ? 0 : lo[2]; z <= (flat ? 0 : hi[2]); ++z) {
        p[0] = x;
        p[1] = y;
        if (!flat) p[2] = z;
        bool inside = true, on_facet = false;
        for (const HullFacet& f : hull.facets) {
          i64 v = dot(f.normal, p);
          if (v > f.offset) {
            inside = false;
            break;
          }
          if (v == f.offset) on_facet = true;
        }
        if (!inside) continue;
        PointLocation loc = PointLocation::kInterior;
        if (hull.vertex_index(p) >= 0)
          loc = PointLocation::kVertex;
        else if (on_facet)
          loc = PointLocation::kBoundary;
        out.push_back({p, loc});
      }
  std::sort(out.begin(), out.end(),
            [](const TaggedPoint& a, const TaggedPoint& b) { return a.point < b.point; });
  return out;
}

}  // namespace latfan
