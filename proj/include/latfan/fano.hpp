// The central predicates: the body Gamma, the Gorenstein property of a fan,
// and the local weak-Fano / Fano grades.
//
// Gamma is the union of the pyramids Conv({0} u generators(cone)) over the
// maximal cones.  Convexity of that union (it then equals the convex hull of
// {0} and the rays) grades the fan weak Fano; strict convexity, checked
// structurally as a bijection between maximal cones and outer hull facets
// with matching contact sets, grades it Fano.  Convexity is decided by exact
// normalized-volume additivity, never by sampling.

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "latfan/fan.hpp"
#include "latfan/lattice.hpp"

namespace latfan {

// ---------------------------------------------------------------------------
// Gamma body
// ---------------------------------------------------------------------------

struct GammaBody {
  HullComplex hull;               // Conv({0} u rays)
  std::vector<int> origin_facets;  // facet indices through 0
  std::vector<int> outer_facets;   // facet indices missing 0
  bool union_equals_hull = false;  // exactly: Gamma is convex
  i64 hull_volume = 0;             // normalized volume of the hull
  i64 union_volume = 0;            // sum over cones of vol(Conv({0} u gens))
};

/// Requires a valid fan supported on the positive orthant; throws the
/// validation error otherwise.
inline GammaBody gamma_body(const Fan& f) {
  FanValidation v = validate_fan(f, /*require_support=*/true);
  if (!v) throw Error(v.code, v.message);
  GammaBody g;
  std::vector<Vec> pts = f.rays;
  Vec zero;
  zero.dim = f.dim;
  pts.push_back(zero);
  g.hull = convex_hull(pts);
  for (int i = 0; i < static_cast<int>(g.hull.facets.size()); ++i) {
    if (g.hull.facets[static_cast<std::size_t>(i)].through_origin())
      g.origin_facets.push_back(i);
    else
      g.outer_facets.push_back(i);
  }
  g.hull_volume = g.hull.normalized_volume();
  i64 total = 0;
  for (const Cone& c : f.max_cones) {
    std::vector<Vec> cp = c.gens;
    cp.push_back(zero);
    total = checked_add(total, convex_hull(cp).normalized_volume());
  }
  g.union_volume = total;
  // the pyramids have pairwise disjoint interiors (the fan is valid), so the
  // union fills the hull exactly when the volumes agree
  g.union_equals_hull = g.hull_volume == g.union_volume;
  return g;
}

/// Fan over the outer facets of a Gamma body.
inline Fan face_fan(const GammaBody& g) { return face_fan(g.hull); }

// ---------------------------------------------------------------------------
// grading
// ---------------------------------------------------------------------------

struct FanoGrade {
  bool gorenstein = false;
  bool weak_fano = false;
  bool fano = false;
  std::string witness;  // first violation found, empty when all three hold
};

struct ConeForm {
  Cone cone;
  GorensteinFormResult form;
};

struct GorensteinFanResult {
  bool gorenstein = false;
  std::vector<ConeForm> forms;  // one entry per maximal cone
};

/// True iff every maximal cone carries an integral value-1 form on its
/// generators; the per-cone forms are returned either way.
inline GorensteinFanResult is_gorenstein_fan(const Fan& f) {
  FanValidation v = validate_fan(f, /*require_support=*/false);
  if (!v) throw Error(v.code, v.message);
  GorensteinFanResult r;
  r.gorenstein = true;
  for (const Cone& c : f.max_cones) {
    GorensteinFormResult gf = gorenstein_form(c);
    r.gorenstein = r.gorenstein && gf.integral();
    r.forms.push_back({c, std::move(gf)});
  }
  return r;
}

/// All three flags are reported independently: the enumeration machinery
/// wants the failure reason, not just a verdict.
inline FanoGrade fano_grade(const Fan& f) {
  FanoGrade grade;
  std::ostringstream witness;

  GorensteinFanResult gor = is_gorenstein_fan(f);
  grade.gorenstein = gor.gorenstein;
  if (!grade.gorenstein) {
    for (const ConeForm& cf : gor.forms) {
      if (cf.form.integral()) continue;
      witness << "cone " << cf.cone << " has ";
      if (cf.form.form)
        witness << "non-integral form " << *cf.form.form;
      else
        witness << "generators on no common value-1 hyperplane";
      break;
    }
  }

  GammaBody g = gamma_body(f);
  grade.weak_fano = g.union_equals_hull;
  if (!grade.weak_fano && witness.str().empty()) {
    witness << "union of cone pyramids has normalized volume " << g.union_volume
            << " < hull volume " << g.hull_volume;
  }

  // strict convexity: outer facets correspond one-to-one with maximal cones,
  // and each cone's generator set is exactly its facet's vertex contact set
  bool strict = grade.weak_fano;
  if (strict && g.outer_facets.size() != f.max_cones.size()) {
    strict = false;
    if (witness.str().empty())
      witness << "fan has " << f.max_cones.size() << " maximal cones but Gamma has "
              << g.outer_facets.size() << " outer facets";
  }
  if (strict) {
    std::vector<bool> used(g.outer_facets.size(), false);
    for (const Cone& c : f.max_cones) {
      bool matched = false;
      for (std::size_t k = 0; k < g.outer_facets.size() && !matched; ++k) {
        if (used[k]) continue;
        const HullFacet& fct =
            g.hull.facets[static_cast<std::size_t>(g.outer_facets[k])];
        std::vector<Vec> contact;
        for (int idx : fct.vertices)
          contact.push_back(g.hull.vertices[static_cast<std::size_t>(idx)]);
        if (contact == c.gens) {  // both sorted
          used[k] = true;
          matched = true;
        }
      }
      if (!matched) {
        strict = false;
        if (witness.str().empty())
          witness << "generators of " << c
                  << " are not the vertex contact set of any outer facet";
        break;
      }
    }
  }
  grade.fano = strict;
  grade.witness = witness.str();
  return grade;
}

}  // namespace latfan
