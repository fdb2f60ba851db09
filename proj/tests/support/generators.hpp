// Deterministic random generators for property tests.
//
// Admissible polygons are produced by a clockwise boundary walk from e3:
// slope edges with strictly decreasing integer slopes, an optional balanced
// edge, inverse edges with strictly increasing integer ratios, and a closing
// edge back to the origin; walks that close badly or leave the requested
// bounds are rejected and retried.

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "latfan/constructions.hpp"
#include "latfan/lattice.hpp"

namespace latfan::testing {

struct PolygonLimits {
  int max_vertices = 8;
  i64 max_coord = 20;
};

inline std::optional<AdmissiblePolygon> try_random_polygon(std::mt19937& rng,
                                                           const PolygonLimits& lim) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<Vec> verts{vec3(0, 0, 1)};
  i64 a = 0, b = 0;
  // slope edges (descending slopes, the first at least 1)
  int n_slope = pick(1, 3);
  i64 slope = pick(1, 4);
  for (int i = 0; i < n_slope; ++i) {
    i64 len = pick(1, 2);
    a += len;
    b += slope * len;
    verts.push_back(vec3(a, b, 1));
    if (slope == 0) break;
    slope = slope > 1 ? pick(0, static_cast<int>(slope) - 1) : 0;
  }
  // optional balanced edge
  if (pick(0, 1) == 1) {
    i64 len = pick(1, 2);
    a += len;
    b -= len;
    if (b <= 0) return std::nullopt;
    verts.push_back(vec3(a, b, 1));
  }
  // inverse edges (ascending ratios), keeping both coordinates positive
  int n_inv = pick(0, 2);
  i64 ratio = pick(0, 2);
  for (int i = 0; i < n_inv; ++i) {
    i64 len = pick(1, 2);
    i64 na = a - ratio * len, nb = b - len;
    if (na <= 0 || nb <= 0) break;
    a = na;
    b = nb;
    verts.push_back(vec3(a, b, 1));
    ratio += pick(1, 2);
  }
  // the closing edge needs an integer ratio a/b larger than the last one
  if (b <= 0 || a <= 0 || a % b != 0 || a / b < ratio) return std::nullopt;
  if (static_cast<int>(verts.size()) > lim.max_vertices) return std::nullopt;
  for (const Vec& v : verts)
    if (v[0] > lim.max_coord || v[1] > lim.max_coord) return std::nullopt;
  PolygonValidation pv = validate_polygon(verts);
  if (!pv.ok()) return std::nullopt;
  return pv.polygon;
}

inline std::vector<AdmissiblePolygon> random_polygons(unsigned seed, int count,
                                                      const PolygonLimits& lim = {}) {
  std::mt19937 rng(seed);
  std::vector<AdmissiblePolygon> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 1000) {
    ++attempts;
    if (auto p = try_random_polygon(rng, lim)) out.push_back(std::move(*p));
  }
  return out;
}

/// Random point sets in a small box, for hull property tests.
inline std::vector<Vec> random_points(std::mt19937& rng, int dim, int count, i64 lo,
                                      i64 hi) {
  std::uniform_int_distribution<i64> coord(lo, hi);
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) {
    Vec v;
    v.dim = dim;
    for (int k = 0; k < dim; ++k) v[k] = coord(rng);
    pts.push_back(v);
  }
  return pts;
}

}  // namespace latfan::testing
