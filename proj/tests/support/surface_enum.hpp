// Exhaustive enumeration of smooth local weak-Fano surface fans with rays in
// a box, as ray chains from e1 to e2: consecutive rays spanning unimodular
// cones in counterclockwise order, pruning reflex turns of the boundary
// polyline (a reflex turn makes Gamma non-convex in every extension).

#pragma once

#include <map>
#include <string>
#include <vector>

#include "latfan/classify.hpp"
#include "latfan/constructions.hpp"
#include "latfan/fan.hpp"
#include "latfan/fano.hpp"

namespace latfan::testing {

struct SurfaceEnumeration {
  std::map<std::string, Fan> classes;  // canonical key -> representative
  long chains = 0;
};

inline SurfaceEnumeration enumerate_smooth_weak_fano_surfaces(i64 box) {
  SurfaceEnumeration out;
  const Vec e1 = vec2(1, 0), e2 = vec2(0, 1);
  std::vector<Vec> chain{e1};
  auto dfs = [&](auto&& self) -> void {
    const Vec cur = chain.back();
    if (cur == e2) {
      ++out.chains;
      std::vector<Cone> cones;
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        cones.push_back(make_cone(std::vector<Vec>{chain[i], chain[i + 1]}, 2));
      Fan f = make_fan(std::move(cones), 2);
      FanoGrade g = fano_grade(f);
      bool smooth = true;
      for (const Cone& c : f.max_cones) smooth = smooth && is_smooth_cone(c);
      if (smooth && g.weak_fano) out.classes.emplace(canonical_form(f), std::move(f));
      return;
    }
    for (i64 y = 0; y <= box; ++y)
      for (i64 x = 0; x <= box; ++x) {
        Vec next = vec2(x, y);
        if (determinant2(cur, next) != 1) continue;
        if (chain.size() >= 2) {
          const Vec prev = chain[chain.size() - 2];
          if (cross2(sub(cur, prev), sub(next, cur)) < 0) continue;  // reflex
        }
        chain.push_back(next);
        self(self);
        chain.pop_back();
      }
  };
  dfs(dfs);
  return out;
}

}  // namespace latfan::testing
