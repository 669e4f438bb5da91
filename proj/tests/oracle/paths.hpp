#pragma once

// Brute-force path enumeration for monomial bound quiver algebras: the basis is the set of paths
// containing no zero relation as a contiguous subpath.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

struct PathCount {
  int dim = 0;
  int longest = 0;                   // length of the longest surviving path
  std::vector<std::vector<int>> corner;  // corner[i][j] = surviving paths from i to j
};

/// nullopt when a path of length `bound` survives (the algebra is not finite dimensional).
inline std::optional<PathCount> count_paths(int vertices, const std::vector<std::pair<int, int>>& arrows,
                                            const std::vector<std::vector<int>>& zero_paths, int bound = 40) {
  PathCount pc;
  pc.corner.assign(vertices, std::vector<int>(vertices, 0));
  auto has_zero_suffix = [&](const std::vector<int>& p) {
    for (const auto& z : zero_paths)
      if (z.size() <= p.size() && std::equal(z.begin(), z.end(), p.end() - static_cast<long>(z.size()))) return true;
    return false;
  };
  bool overflow = false;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int start, int at) -> void {
    if (overflow) return;
    if (static_cast<int>(path.size()) >= bound) {
      overflow = true;
      return;
    }
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
      if (arrows[a].first != at) continue;
      path.push_back(a);
      if (!has_zero_suffix(path)) {
        ++pc.dim;
        ++pc.corner[start][arrows[a].second];
        pc.longest = std::max(pc.longest, static_cast<int>(path.size()));
        self(self, start, arrows[a].second);
      }
      path.pop_back();
    }
  };
  for (int v = 0; v < vertices; ++v) {
    ++pc.dim;
    ++pc.corner[v][v];
    dfs(dfs, v, v);
  }
  if (overflow) return std::nullopt;
  return pc;
}

}  // namespace oracle
