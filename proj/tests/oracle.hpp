#pragma once

// Independent walk counter for cross-checks: sparse map DP over endpoints.

#include "quadwalk/model.hpp"

#include <map>
#include <vector>

namespace oracle {

struct Flavors {
  std::vector<long long> anywhere, x_axis, y_axis, origin;
};

inline Flavors quadrant_counts(const quadwalk::StepSet& s, int n_max) {
  std::map<std::pair<int, int>, long long> cur{{{0, 0}, 1}};
  Flavors f;
  auto record = [&] {
    long long a = 0, xa = 0, ya = 0, o = 0;
    for (const auto& [p, c] : cur) {
      a += c;
      if (p.second == 0) xa += c;
      if (p.first == 0) ya += c;
      if (p.first == 0 && p.second == 0) o += c;
    }
    f.anywhere.push_back(a);
    f.x_axis.push_back(xa);
    f.y_axis.push_back(ya);
    f.origin.push_back(o);
  };
  record();
  for (int n = 1; n <= n_max; ++n) {
    std::map<std::pair<int, int>, long long> nxt;
    for (const auto& [p, c] : cur) {
      for (auto st : s.steps()) {
        int x = p.first + st.dx, y = p.second + st.dy;
        if (x < 0 || y < 0) continue;
        nxt[{x, y}] += c;
      }
    }
    cur = std::move(nxt);
    record();
  }
  return f;
}

}  // namespace oracle
