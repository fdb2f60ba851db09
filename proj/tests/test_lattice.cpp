#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "latfan/lattice.hpp"
#include "support/generators.hpp"

using namespace latfan;

namespace {

// Test-local extremality oracle: p lies in conv(S) iff some simplex on at
// most dim+1 points of S contains it (exact barycentric coordinates).  Kept
// independent of the hull construction it checks.
bool in_convex_hull_oracle(const Vec& p, const std::vector<Vec>& pts) {
  const int d = p.dim;
  const int n = static_cast<int>(pts.size());
  for (const Vec& q : pts)
    if (q == p) return true;
  // segments
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec &a = pts[i], &b = pts[j];
      Vec ab = sub(b, a), ap = sub(p, a);
      bool collinear = d == 2 ? cross2(ab, ap) == 0 : cross(ab, ap).is_zero();
      if (!collinear) continue;
      int k = 0;
      while (ab[k] == 0) ++k;
      Rat t(ap[k], ab[k]);
      if (Rat(0) <= t && t <= Rat(1)) return true;
    }
  // triangles (2d) / tetrahedra (3d) via barycentric signs
  if (d == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const Vec &a = pts[i], &b = pts[j], &c = pts[k];
          i64 det = cross2(sub(b, a), sub(c, a));
          if (det == 0) continue;
          Rat u(cross2(sub(p, a), sub(c, a)), det);
          Rat v(cross2(sub(b, a), sub(p, a)), det);
          if (u >= Rat(0) && v >= Rat(0) && u + v <= Rat(1)) return true;
        }
    return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Vec &a = pts[i], &b = pts[j], &c = pts[k], &e = pts[l];
          i64 det = determinant3(sub(b, a), sub(c, a), sub(e, a));
          if (det == 0) continue;
          Rat u(determinant3(sub(p, a), sub(c, a), sub(e, a)), det);
          Rat v(determinant3(sub(b, a), sub(p, a), sub(e, a)), det);
          Rat w(determinant3(sub(b, a), sub(c, a), sub(p, a)), det);
          if (u >= Rat(0) && v >= Rat(0) && w >= Rat(0) && u + v + w <= Rat(1))
            return true;
        }
  return false;
}

std::vector<Vec> extremal_points_oracle(const std::vector<Vec>& pts_in) {
  std::vector<Vec> pts = pts_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Vec> out;
  for (const Vec& p : pts) {
    std::vector<Vec> others;
    for (const Vec& q : pts)
      if (q != p) others.push_back(q);
    if (!in_convex_hull_oracle(p, others)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("primitive_vector divides by the coordinate gcd") {
  CHECK(primitive_vector(vec3(2, 2, 2)) == vec3(1, 1, 1));
  CHECK(primitive_vector(vec3(15, 10, 6)) == vec3(15, 10, 6));
  CHECK(primitive_vector(vec3(0, 4, 6)) == vec3(0, 2, 3));
  CHECK_THROWS_MATCHES(primitive_vector(vec3(0, 0, 0)), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("ZeroVector")));
}

TEST_CASE("primitive_vector is idempotent") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    auto pts = latfan::testing::random_points(rng, 3, 1, -9, 9);
    if (pts[0].is_zero()) continue;
    Vec p = primitive_vector(pts[0]);
    CHECK(primitive_vector(p) == p);
    CHECK(content(p) == 1);
  }
}

TEST_CASE("determinant3 on frozen cases") {
  CHECK(determinant3(vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)) == 1);
  CHECK(determinant3(vec3(0, 1, 0), vec3(0, 0, 1), vec3(15, 10, 6)) == 15);
  CHECK(determinant3(vec3(2, 1, 1), vec3(1, 2, 1), vec3(1, 1, 2)) == 4);
}

TEST_CASE("determinant3 is alternating") {
  std::mt19937 rng(12);
  for (int it = 0; it < 200; ++it) {
    auto pts = latfan::testing::random_points(rng, 3, 3, -6, 6);
    const Vec &a = pts[0], &b = pts[1], &c = pts[2];
    i64 d = determinant3(a, b, c);
    CHECK(determinant3(b, a, c) == -d);
    CHECK(determinant3(a, c, b) == -d);
    CHECK(determinant3(a, a, c) == 0);
  }
}

TEST_CASE("checked arithmetic aborts on overflow") {
  i64 big = std::numeric_limits<i64>::max();
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big, 2), Error);
  CHECK(checked_add(big, 0) == big);
}

TEST_CASE("support_form solves the value-1 system") {
  auto u = support_form(std::vector<Vec>{vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)});
  REQUIRE(u.status == SupportFormStatus::kUnique);
  CHECK(*u.form == form_from_ints(3, {1, 1, 1}));

  auto v = support_form(std::vector<Vec>{vec3(0, 1, 0), vec3(0, 0, 1), vec3(15, 10, 6)});
  REQUIRE(v.status == SupportFormStatus::kUnique);
  CHECK(*v.form == form_from_ints(3, {-1, 1, 1}));
  CHECK(v.form->integral());

  auto w = support_form(std::vector<Vec>{vec3(1, 0, 0), vec3(0, 1, 0), vec3(1, 1, 2)});
  REQUIRE(w.status == SupportFormStatus::kUnique);
  CHECK_FALSE(w.form->integral());
  CHECK((*w.form)[0] == Rat(1));
  CHECK((*w.form)[1] == Rat(1));
  CHECK((*w.form)[2] == Rat(-1, 2));

  CHECK(support_form(std::vector<Vec>{vec3(0, 1, 0), vec3(0, 0, 1)}).status ==
        SupportFormStatus::kNotUnique);
  CHECK(support_form(std::vector<Vec>{vec3(1, 0, 0), vec3(2, 0, 0), vec3(0, 1, 0),
                                      vec3(0, 0, 1)})
            .status == SupportFormStatus::kNoSolution);
}

TEST_CASE("convex_hull of the unit simplex") {
  HullComplex h = convex_hull(std::vector<Vec>{vec3(0, 0, 0), vec3(1, 0, 0),
                                               vec3(0, 1, 0), vec3(0, 0, 1)});
  CHECK(h.dim == 3);
  CHECK(h.vertices.size() == 4);
  CHECK(h.facets.size() == 4);
  CHECK(h.normalized_volume() == 1);
}

TEST_CASE("convex_hull drops interior points") {
  HullComplex h = convex_hull(std::vector<Vec>{vec2(0, 0), vec2(1, 0), vec2(0, 1),
                                               vec2(2, 1), vec2(1, 2), vec2(1, 1)});
  CHECK(h.dim == 2);
  std::vector<Vec> expect{vec2(0, 0), vec2(0, 1), vec2(1, 0), vec2(1, 2), vec2(2, 1)};
  CHECK(h.vertices == expect);
  CHECK(h.vertex_index(vec2(1, 1)) < 0);
}

TEST_CASE("convex_hull facet structure agrees with the extremality oracle") {
  std::vector<Vec> pts{vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1),
                       vec3(1, 1, 1)};
  std::vector<Vec> expected_vertices = extremal_points_oracle(pts);
  HullComplex h = convex_hull(pts);
  CHECK(h.vertices == expected_vertices);
  CHECK(h.vertices.size() == 5);
  CHECK(h.facets.size() == 6);
  int through_origin = 0;
  int through_ones = 0;
  for (const HullFacet& f : h.facets) {
    if (f.through_origin()) ++through_origin;
    if (dot(f.normal, vec3(1, 1, 1)) == f.offset) ++through_ones;
  }
  CHECK(through_origin == 3);
  CHECK(through_ones == 3);
}

TEST_CASE("degenerate hulls report their true dimension") {
  HullComplex seg = convex_hull(std::vector<Vec>{vec3(0, 0, 0), vec3(2, 2, 2),
                                                 vec3(1, 1, 1)});
  CHECK(seg.dim == 1);
  CHECK(seg.degenerate());
  CHECK(seg.vertices == std::vector<Vec>{vec3(0, 0, 0), vec3(2, 2, 2)});

  HullComplex planar = convex_hull(std::vector<Vec>{vec3(0, 0, 1), vec3(1, 1, 1),
                                                    vec3(2, 1, 1), vec3(1, 0, 1)});
  CHECK(planar.dim == 2);
  CHECK(planar.degenerate());
  CHECK(planar.vertices.size() == 4);
}

TEST_CASE("hull of the hull's vertices is the hull") {
  std::mt19937 rng(13);
  for (int it = 0; it < 120; ++it) {
    int dim = it % 2 == 0 ? 3 : 2;
    auto pts = latfan::testing::random_points(rng, dim, 8, -4, 4);
    HullComplex h = convex_hull(pts);
    if (h.degenerate()) continue;
    HullComplex h2 = convex_hull(h.vertices);
    CHECK(h2.vertices == h.vertices);
    REQUIRE(h2.facets.size() == h.facets.size());
    for (std::size_t i = 0; i < h.facets.size(); ++i) {
      CHECK(h2.facets[i].normal == h.facets[i].normal);
      CHECK(h2.facets[i].offset == h.facets[i].offset);
      CHECK(h2.facets[i].vertices == h.facets[i].vertices);
    }
  }
}

TEST_CASE("facet forms take value 1 on their vertices and less elsewhere") {
  std::mt19937 rng(14);
  for (int it = 0; it < 120; ++it) {
    int dim = it % 2 == 0 ? 3 : 2;
    auto pts = latfan::testing::random_points(rng, dim, 7, 0, 4);
    HullComplex h = convex_hull(pts);
    if (h.degenerate()) continue;
    for (const HullFacet& f : h.facets) {
      if (f.through_origin()) continue;
      DualForm u = f.form();
      for (int vi = 0; vi < static_cast<int>(h.vertices.size()); ++vi) {
        Rat val = u.eval(h.vertices[static_cast<std::size_t>(vi)]);
        bool on_facet =
            std::binary_search(f.vertices.begin(), f.vertices.end(), vi);
        if (f.offset > 0) {
          if (on_facet)
            CHECK(val == Rat(1));
          else
            CHECK(val < Rat(1));
        }
      }
    }
    // every lattice point of the hull satisfies every facet inequality
    for (const TaggedPoint& tp : lattice_points(h))
      for (const HullFacet& f : h.facets) CHECK(dot(f.normal, tp.point) <= f.offset);
  }
}

TEST_CASE("lattice_points tags the unit simplex") {
  HullComplex h = convex_hull(std::vector<Vec>{vec3(0, 0, 0), vec3(1, 0, 0),
                                               vec3(0, 1, 0), vec3(0, 0, 1)});
  auto pts = lattice_points(h);
  REQUIRE(pts.size() == 4);
  for (const TaggedPoint& tp : pts) CHECK(tp.location == PointLocation::kVertex);
}

TEST_CASE("lattice_points finds the boundary point of the stretched pyramid") {
  HullComplex h = convex_hull(std::vector<Vec>{vec3(0, 0, 0), vec3(1, 0, 0),
                                               vec3(0, 1, 0), vec3(0, 0, 1),
                                               vec3(2, 2, 1)});
  auto pts = lattice_points(h);
  REQUIRE(pts.size() == 6);
  bool found = false;
  for (const TaggedPoint& tp : pts)
    if (tp.point == vec3(1, 1, 1)) {
      found = true;
      CHECK(tp.location == PointLocation::kBoundary);
    }
  CHECK(found);
}

TEST_CASE("lattice_points of the big wedge contains the expected interior points") {
  HullComplex h = convex_hull(std::vector<Vec>{vec3(0, 0, 0), vec3(1, 0, 0),
                                               vec3(0, 1, 0), vec3(0, 0, 1),
                                               vec3(15, 10, 6)});
  auto pts = lattice_points(h);
  std::set<Vec> got;
  for (const TaggedPoint& tp : pts) got.insert(tp.point);
  for (const Vec& expect :
       {vec3(3, 2, 2), vec3(6, 4, 3), vec3(9, 6, 4), vec3(5, 4, 2), vec3(4, 3, 2),
        vec3(5, 3, 2), vec3(3, 2, 1), vec3(2, 2, 1)})
    CHECK(got.count(expect) == 1);
  CHECK(got.size() == 19);
}

TEST_CASE("lattice_points is invariant under input point order") {
  std::mt19937 rng(15);
  std::vector<Vec> pts{vec3(0, 0, 0), vec3(3, 1, 0), vec3(0, 2, 1), vec3(1, 0, 2),
                       vec3(2, 2, 2)};
  HullComplex h = convex_hull(pts);
  auto base = lattice_points(h);
  for (int it = 0; it < 10; ++it) {
    std::shuffle(pts.begin(), pts.end(), rng);
    auto again = lattice_points(convex_hull(pts));
    REQUIRE(again.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(again[i].point == base[i].point);
      CHECK(again[i].location == base[i].location);
    }
  }
}
