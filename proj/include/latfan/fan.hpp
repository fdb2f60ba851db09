// Cones, fans, smoothness and Gorenstein tests, face fans.
//
// Maximal cones are stored explicitly (faces are derived on demand) and may
// be non-simplicial.  Construction rejects bad input instead of repairing it:
// nothing in this codebase should ever produce a non-primitive ray, so a
// silent fix would mask bugs.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "latfan/lattice.hpp"

namespace latfan {

// ---------------------------------------------------------------------------
// Cone
// ---------------------------------------------------------------------------

/// Strongly convex rational cone given by its primitive extremal generators,
/// kept in lexicographic order.
struct Cone {
  int ambient_dim = 3;
  int dim = 0;
  std::vector<Vec> gens;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim == b.ambient_dim && a.gens == b.gens;
  }
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.ambient_dim != b.ambient_dim) return a.ambient_dim < b.ambient_dim;
    return a.gens < b.gens;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cone& c) {
    os << "Cone{";
    for (std::size_t i = 0; i < c.gens.size(); ++i) os << (i ? " " : "") << c.gens[i];
    return os << '}';
  }
};

/// Is v a nonnegative combination of gens?  Caratheodory over subsets of at
/// most d linearly independent generators, solved exactly.
inline bool cone_member(const Vec& v, std::span<const Vec> gens) {
  if (v.is_zero()) return true;
  const int d = v.dim;
  const int n = static_cast<int>(gens.size());
  // single generator: v = t g with t >= 0 real, i.e. parallel and same side
  for (const Vec& g : gens) {
    bool dep = d == 2 ? cross2(g, v) == 0 : cross(g, v).is_zero();
    if (!dep) continue;
    int i = 0;
    while (g[i] == 0) ++i;
    if ((v[i] > 0) == (g[i] > 0)) return true;
  }
  // pairs
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Vec &ga = gens[static_cast<std::size_t>(a)], &gb = gens[static_cast<std::size_t>(b)];
      if (d == 2) {
        i64 det = cross2(ga, gb);
        if (det == 0) continue;
        // v = x ga + y gb: Cramer
        Rat x = Rat(cross2(v, gb), det);
        Rat y = Rat(cross2(ga, v), det);
        if (x >= Rat(0) && y >= Rat(0)) return true;
      } else {
        Vec nrm = cross(ga, gb);
        if (nrm.is_zero()) continue;
        if (dot(nrm, v) != 0) continue;  // v not in the plane
        // v = x ga + y gb: solve via projections
        // pick two coordinates forming an invertible 2x2 minor
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            i64 det = checked_sub(checked_mul(ga[i], gb[j]), checked_mul(ga[j], gb[i]));
            if (det == 0) continue;
            Rat x = Rat(checked_sub(checked_mul(v[i], gb[j]), checked_mul(v[j], gb[i])), det);
            Rat y = Rat(checked_sub(checked_mul(ga[i], v[j]), checked_mul(ga[j], v[i])), det);
            // verify on the third coordinate
            int k = 3 - i - j;
            if (x * Rat(ga[k]) + y * Rat(gb[k]) != Rat(v[k])) goto next_pair;
            if (x >= Rat(0) && y >= Rat(0)) return true;
            goto next_pair;
          }
      next_pair:;
      }
    }
  if (d == 3) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          const Vec &ga = gens[static_cast<std::size_t>(a)],
                    &gb = gens[static_cast<std::size_t>(b)],
                    &gc = gens[static_cast<std::size_t>(c)];
          i64 det = determinant3(ga, gb, gc);
          if (det == 0) continue;
          Rat x = Rat(determinant3(v, gb, gc), det);
          Rat y = Rat(determinant3(ga, v, gc), det);
          Rat z = Rat(determinant3(ga, gb, v), det);
          if (x >= Rat(0) && y >= Rat(0) && z >= Rat(0)) return true;
        }
  }
  return false;
}

namespace detail {

inline int rank_of(std::span<const Vec> vs) {
  std::vector<Vec> v(vs.begin(), vs.end());
  if (v.empty()) return 0;
  Vec zero;
  zero.dim = v.front().dim;
  std::vector<Vec> with0{zero};
  with0.insert(with0.end(), v.begin(), v.end());
  return affine_dim(with0);
}

}  // namespace detail

/// Validated cone.  Errors: ZeroVector, NonPrimitive, NotPointed,
/// RedundantGenerator (duplicates count as redundant).
inline Cone make_cone(std::span<const Vec> gens_in, int ambient_dim) {
  if (gens_in.empty())
    throw Error("fan_model.EmptyCone", "a cone needs at least one generator");
  std::vector<Vec> gens(gens_in.begin(), gens_in.end());
  for (const Vec& g : gens) {
    if (g.dim != ambient_dim)
      throw Error("fan_model.DimensionMismatch", "generator dimension mismatch");
    if (g.is_zero())
      throw Error("fan_model.ZeroVector", "zero vector cannot generate a ray");
    if (content(g) != 1) {
      std::ostringstream os;
      os << "generator " << g << " is not primitive";
      throw Error("fan_model.NonPrimitive", os.str());
    }
  }
  std::sort(gens.begin(), gens.end());
  for (std::size_t i = 0; i + 1 < gens.size(); ++i)
    if (gens[i] == gens[i + 1]) {
      std::ostringstream os;
      os << "generator " << gens[i] << " repeats";
      throw Error("fan_model.RedundantGenerator", os.str());
    }
  // pointed <=> 0 not in the convex hull of the generators, i.e. 0 stays
  // extreme when added to them
  {
    Vec zero;
    zero.dim = ambient_dim;
    std::vector<Vec> with0 = gens;
    with0.push_back(zero);
    HullComplex h0 = convex_hull(with0);
    if (h0.vertex_index(zero) < 0)
      throw Error("fan_model.NotPointed", "cone contains a line");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (!others.empty() && cone_member(gens[i], others)) {
      std::ostringstream os;
      os << "generator " << gens[i] << " lies in the cone of the others";
      throw Error("fan_model.RedundantGenerator", os.str());
    }
  }
  Cone c;
  c.ambient_dim = ambient_dim;
  c.gens = std::move(gens);
  c.dim = detail::rank_of(c.gens);
  return c;
}

// ---------------------------------------------------------------------------
// halfspace descriptions and faces
// ---------------------------------------------------------------------------

/// Exact description {x : e.x = 0 for e in eqs, n.x <= 0 for n in ineqs}.
struct HalfspaceDesc {
  std::vector<Vec> eqs;
  std::vector<Vec> ineqs;

  bool contains(const Vec& v) const {
    for (const Vec& e : eqs)
      if (dot(e, v) != 0) return false;
    for (const Vec& n : ineqs)
      if (dot(n, v) > 0) return false;
    return true;
  }
};

inline HalfspaceDesc cone_halfspaces(const Cone& c) {
  HalfspaceDesc hs;
  const int d = c.ambient_dim;
  auto push_ineq = [&](Vec n) {
    n = primitive_vector(n);
    bool le = true, ge = true;
    for (const Vec& g : c.gens) {
      i64 v = dot(n, g);
      le = le && v <= 0;
      ge = ge && v >= 0;
    }
    if (!le && !ge) return;
    if (!le) n = scale(-1, n);
    if (std::find(hs.ineqs.begin(), hs.ineqs.end(), n) == hs.ineqs.end())
      hs.ineqs.push_back(n);
  };

  if (d == 2) {
    if (c.dim == 1) {
      const Vec& g = c.gens.front();
      hs.eqs.push_back(primitive_vector(vec2(checked_neg(g[1]), g[0])));
      hs.ineqs.push_back(scale(-1, g));
    } else {
      for (const Vec& g : c.gens) push_ineq(vec2(checked_neg(g[1]), g[0]));
    }
    return hs;
  }

  if (c.dim == 1) {
    const Vec& g = c.gens.front();
    for (int i = 0; i < 3; ++i) {
      Vec n = cross(g, unit(3, i));
      if (n.is_zero()) continue;
      n = primitive_vector(n);
      bool indep = true;
      for (const Vec& e : hs.eqs)
        if (cross(e, n).is_zero()) indep = false;
      if (indep) hs.eqs.push_back(n);
      if (hs.eqs.size() == 2) break;
    }
    hs.ineqs.push_back(scale(-1, g));
    return hs;
  }
  if (c.dim == 2) {
    // a pointed 2-dimensional cone has exactly two extreme generators
    Vec span_normal = primitive_vector(cross(c.gens[0], c.gens[1]));
    hs.eqs.push_back(span_normal);
    for (const Vec& g : c.gens) {
      Vec t = cross(span_normal, g);
      if (!t.is_zero()) push_ineq(t);
    }
    return hs;
  }
  // full-dimensional: facets arise from generator pairs
  for (std::size_t i = 0; i < c.gens.size(); ++i)
    for (std::size_t j = i + 1; j < c.gens.size(); ++j) {
      Vec n = cross(c.gens[i], c.gens[j]);
      if (!n.is_zero()) push_ineq(n);
    }
  return hs;
}

/// The facets (codimension-1 faces) of a cone, as generator subsets.
inline std::vector<std::vector<Vec>> cone_facets(const Cone& c) {
  std::vector<std::vector<Vec>> out;
  if (c.dim <= 1) return out;
  HalfspaceDesc hs = cone_halfspaces(c);
  for (const Vec& n : hs.ineqs) {
    std::vector<Vec> face;
    for (const Vec& g : c.gens)
      if (dot(n, g) == 0) face.push_back(g);
    if (!face.empty()) out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Extreme rays of the intersection of two cones.
inline std::vector<Vec> cone_intersection_rays(const Cone& a, const Cone& b) {
  HalfspaceDesc ha = cone_halfspaces(a), hb = cone_halfspaces(b);
  std::vector<Vec> constraints;
  for (const auto& v : {ha.eqs, ha.ineqs, hb.eqs, hb.ineqs})
    constraints.insert(constraints.end(), v.begin(), v.end());
  std::set<Vec> rays;
  auto admit = [&](Vec v) {
    if (v.is_zero()) return;
    v = primitive_vector(v);
    for (const Vec& cand : {v, scale(-1, v)})
      if (ha.contains(cand) && hb.contains(cand)) rays.insert(cand);
  };
  for (const Vec& g : a.gens) admit(g);
  for (const Vec& g : b.gens) admit(g);
  const int d = a.ambient_dim;
  if (d == 2) {
    for (const Vec& n : constraints) admit(vec2(checked_neg(n[1]), n[0]));
  } else {
    for (std::size_t i = 0; i < constraints.size(); ++i)
      for (std::size_t j = i + 1; j < constraints.size(); ++j)
        admit(cross(constraints[i], constraints[j]));
  }
  return {rays.begin(), rays.end()};
}

// ---------------------------------------------------------------------------
// smoothness and Gorenstein forms
// ---------------------------------------------------------------------------

/// True iff the generators extend to a lattice basis: for full-dimensional
/// simplicial cones |det| = 1, in lower dimension the gcd of the maximal
/// minors of the generator matrix is 1.
inline bool is_smooth_cone(const Cone& c) {
  const int k = static_cast<int>(c.gens.size());
  if (k > c.dim) return false;  // non-simplicial
  if (c.ambient_dim == 2) {
    if (k == 2) {
      i64 det = determinant2(c.gens[0], c.gens[1]);
      return det == 1 || det == -1;
    }
    return content(c.gens[0]) == 1;
  }
  if (k == 3) {
    i64 det = determinant3(c.gens[0], c.gens[1], c.gens[2]);
    return det == 1 || det == -1;
  }
  if (k == 2) {
    return content(cross(c.gens[0], c.gens[1])) == 1;
  }
  return content(c.gens[0]) == 1;
}

enum class GorensteinStatus { kIntegral, kNonIntegral, kNotUnique };

struct GorensteinFormResult {
  GorensteinStatus status = GorensteinStatus::kNotUnique;
  std::optional<DualForm> form;  // present unless kNotUnique

  bool integral() const { return status == GorensteinStatus::kIntegral; }
};

/// The unique rational form with value 1 on every generator, classified by
/// integrality.  kNotUnique covers generators that do not lie on a common
/// affine hyperplane missing the origin.
inline GorensteinFormResult gorenstein_form(const Cone& c) {
  if (c.dim != c.ambient_dim)
    throw Error("fan_model.NotFullDimensional",
                "the Gorenstein form is defined for full-dimensional cones");
  SupportFormResult r = support_form(c.gens);
  if (r.status != SupportFormStatus::kUnique)
    return {GorensteinStatus::kNotUnique, std::nullopt};
  return {r.form->integral() ? GorensteinStatus::kIntegral
                             : GorensteinStatus::kNonIntegral,
          r.form};
}

// ---------------------------------------------------------------------------
// Fan
// ---------------------------------------------------------------------------

/// Fan given by its maximal cones; rays are the union of their generators.
struct Fan {
  int dim = 3;
  std::vector<Cone> max_cones;  // sorted
  std::vector<Vec> rays;        // sorted

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim == b.dim && a.max_cones == b.max_cones;
  }
  friend bool operator!=(const Fan& a, const Fan& b) { return !(a == b); }
};

inline Fan make_fan(std::vector<Cone> cones, int dim) {
  if (cones.empty()) throw Error("fan_model.EmptyFan", "a fan needs cones");
  Fan f;
  f.dim = dim;
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  std::set<Vec> rays;
  for (const Cone& c : cones) {
    if (c.ambient_dim != dim)
      throw Error("fan_model.DimensionMismatch", "cone dimension mismatch");
    rays.insert(c.gens.begin(), c.gens.end());
  }
  f.max_cones = std::move(cones);
  f.rays.assign(rays.begin(), rays.end());
  return f;
}

inline Fan sigma0_fan(int dim) {
  std::vector<Vec> gens;
  for (int i = 0; i < dim; ++i) gens.push_back(unit(dim, i));
  return make_fan({make_cone(gens, dim)}, dim);
}

// ---------------------------------------------------------------------------
// fan validation
// ---------------------------------------------------------------------------

struct FanValidation {
  bool ok = true;
  std::string code;     // fan_model.NotAFan / MissingFace / WrongSupport
  std::string message;  // witness description

  explicit operator bool() const { return ok; }
};

namespace detail {

/// Is `face` (a set of generators of some cone) equal to a face of cone c?
inline bool is_face_of(std::span<const Vec> face, const Cone& c) {
  HalfspaceDesc hs = cone_halfspaces(c);
  for (const Vec& g : face)
    if (!hs.contains(g)) return false;
  // tight inequalities on all of `face`
  std::vector<Vec> tight;
  for (const Vec& n : hs.ineqs) {
    bool all0 = true;
    for (const Vec& g : face) all0 = all0 && dot(n, g) == 0;
    if (all0) tight.push_back(n);
  }
  // smallest face of c containing `face`
  std::vector<Vec> small;
  for (const Vec& g : c.gens) {
    bool on = true;
    for (const Vec& n : tight) on = on && dot(n, g) == 0;
    if (on) small.push_back(g);
  }
  // equality <=> every generator of that face lies in Cone(face)
  for (const Vec& g : small)
    if (!cone_member(g, face)) return false;
  return true;
}

inline FanValidation fail(const std::string& code, const std::string& msg) {
  return {false, code, msg};
}

}  // namespace detail

/// Checks that pairwise intersections are common faces; with
/// `require_support`, additionally that the support is exactly the positive
/// orthant cone with every proper face of it present in the fan.
inline FanValidation validate_fan(const Fan& f, bool require_support = false) {
  const int d = f.dim;
  for (std::size_t i = 0; i < f.max_cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.max_cones.size(); ++j) {
      const Cone &a = f.max_cones[i], &b = f.max_cones[j];
      std::vector<Vec> common = cone_intersection_rays(a, b);
      if (common.empty()) continue;  // intersection is the origin
      // the smallest face of a containing the intersection must lie in b,
      // and symmetrically
      HalfspaceDesc ha = cone_halfspaces(a), hb = cone_halfspaces(b);
      auto check = [&](const Cone& c, const HalfspaceDesc& other) -> std::optional<Vec> {
        HalfspaceDesc hc = cone_halfspaces(c);
        std::vector<Vec> tight;
        for (const Vec& n : hc.ineqs) {
          bool all0 = true;
          for (const Vec& r : common) all0 = all0 && dot(n, r) == 0;
          if (all0) tight.push_back(n);
        }
        for (const Vec& g : c.gens) {
          bool on = true;
          for (const Vec& n : tight) on = on && dot(n, g) == 0;
          if (on && !other.contains(g)) return g;
        }
        return std::nullopt;
      };
      std::optional<Vec> w = check(a, hb);
      if (!w) w = check(b, ha);
      if (w) {
        std::ostringstream os;
        os << "cones " << a << " and " << b
           << " intersect in a set that is not a common face (witness generator "
           << *w << ")";
        return detail::fail("fan_model.NotAFan", os.str());
      }
    }

  if (!require_support) return {};

  for (const Cone& c : f.max_cones) {
    if (c.dim != d) {
      std::ostringstream os;
      os << "maximal cone " << c << " is not full-dimensional";
      return detail::fail("fan_model.WrongSupport", os.str());
    }
    for (const Vec& g : c.gens)
      for (int i = 0; i < d; ++i)
        if (g[i] < 0) {
          std::ostringstream os;
          os << "generator " << g << " leaves the positive orthant";
          return detail::fail("fan_model.WrongSupport", os.str());
        }
  }

  // every proper face of the orthant cone must be a face of some cone
  for (int i = 0; i < d; ++i) {
    Vec e = unit(d, i);
    if (!std::binary_search(f.rays.begin(), f.rays.end(), e)) {
      std::ostringstream os;
      os << "coordinate ray " << e << " is not a ray of the fan";
      return detail::fail("fan_model.MissingFace", os.str());
    }
  }
  if (d == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        std::vector<Vec> coord_face{unit(3, i), unit(3, j)};
        std::sort(coord_face.begin(), coord_face.end());
        bool found = false;
        for (const Cone& c : f.max_cones) {
          for (const auto& facet : cone_facets(c)) {
            if (facet == coord_face) found = true;
          }
        }
        if (!found) {
          std::ostringstream os;
          os << "the coordinate cone spanned by " << coord_face[0] << " and "
             << coord_face[1] << " is not a face of the fan";
          return detail::fail("fan_model.MissingFace", os.str());
        }
      }
  }

  // covering: every wall (facet of a maximal cone) either lies on the
  // boundary of the orthant or is shared with exactly one other cone
  for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
    const Cone& c = f.max_cones[i];
    std::vector<std::vector<Vec>> walls = cone_facets(c);
    for (const auto& wall : walls) {
      bool on_boundary = false;
      for (int k = 0; k < d && !on_boundary; ++k) {
        bool all0 = true;
        for (const Vec& g : wall) all0 = all0 && g[k] == 0;
        on_boundary = all0;
      }
      if (on_boundary) continue;
      int shared = 0;
      for (std::size_t j = 0; j < f.max_cones.size(); ++j) {
        if (j == i) continue;
        if (detail::is_face_of(wall, f.max_cones[j])) ++shared;
      }
      if (shared != 1) {
        std::ostringstream os;
        os << "interior wall {";
        for (std::size_t k = 0; k < wall.size(); ++k) os << (k ? " " : "") << wall[k];
        os << "} of " << c << " is shared by " << shared
           << " other cones (expected 1)";
        return detail::fail("fan_model.WrongSupport", os.str());
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// face fan
// ---------------------------------------------------------------------------

/// Fan over the facets of a convex body away from the apex 0: one maximal
/// cone per facet not containing the origin, generated by that facet's
/// vertices.
inline Fan face_fan(const HullComplex& gamma) {
  if (gamma.degenerate())
    throw Error("fan_model.DegenerateDimension",
                "face fan needs a full-dimensional body");
  Vec zero;
  zero.dim = gamma.ambient_dim;
  if (gamma.vertex_index(zero) < 0)
    throw Error("fan_model.ApexNotVertex", "0 is not a vertex of the body");
  std::vector<Cone> cones;
  for (const HullFacet& fct : gamma.facets) {
    if (fct.through_origin()) continue;
    std::vector<Vec> gens;
    for (int idx : fct.vertices) {
      const Vec& v = gamma.vertices[static_cast<std::size_t>(idx)];
      if (!v.is_zero()) gens.push_back(v);
    }
    cones.push_back(make_cone(gens, gamma.ambient_dim));
  }
  if (cones.empty())
    throw Error("fan_model.EmptyFan", "no facet of the body avoids the origin");
  return make_fan(std::move(cones), gamma.ambient_dim);
}

}  // namespace latfan
