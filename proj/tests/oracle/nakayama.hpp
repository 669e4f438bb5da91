#pragma once

// Combinatorial invariants of Nakayama algebras from the Kupisch series alone.
// Pure integer bookkeeping on uniserial modules; shares no code with the library.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Kupisch series c[i] = length of P_i (top S_i, factors S_i, S_{i+1}, ...).
/// Linear: vertices 0..m-1 with arrows i -> i+1, c[m-1] = 1. Cyclic: arrows i -> i+1 mod m.
struct Kupisch {
  std::vector<int> c;
  bool cyclic = false;

  int m() const { return static_cast<int>(c.size()); }
  int wrap(int i) const { return cyclic ? ((i % m()) + m()) % m() : i; }
  bool valid_index(int i) const { return cyclic || (i >= 0 && i < m()); }

  bool admissible() const {
    if (c.empty()) return false;
    for (int i = 0; i < m(); ++i) {
      if (c[i] < 1) return false;
      int nxt = i + 1;
      if (!cyclic && nxt == m()) {
        if (c[i] != 1) return false;
        continue;
      }
      if (c[wrap(nxt)] < c[i] - 1) return false;
      if (!cyclic && c[i] > m() - i) return false;
      if (cyclic && c[i] < 2) return false;
    }
    return true;
  }

  int dim() const {
    int s = 0;
    for (int x : c) s += x;
    return s;
  }
  int loewy_length() const { return *std::max_element(c.begin(), c.end()); }
};

/// Uniserial module with top S_top and length len; len = 0 is the zero module.
struct Uni {
  int top = 0, len = 0;
  auto operator<=>(const Uni&) const = default;
};

class Nakayama {
 public:
  explicit Nakayama(Kupisch k) : k_(std::move(k)) {}

  const Kupisch& kupisch() const { return k_; }

  int socle(const Uni& u) const { return k_.wrap(u.top + u.len - 1); }

  /// Length of the injective hull of S_j: the longest uniserial module with socle S_j.
  int d(int j) const {
    int best = 0;
    for (int l = 1; l <= k_.loewy_length(); ++l) {
      int start = j - l + 1;
      if (!k_.valid_index(start)) break;
      if (k_.c[k_.wrap(start)] >= l) best = l;
    }
    return best;
  }

  Uni projective(int i) const { return {i, k_.c[i]}; }
  Uni injective(int j) const { return {k_.wrap(j - d(j) + 1), d(j)}; }
  Uni simple(int i) const { return {i, 1}; }

  bool is_projective(const Uni& u) const { return u.len == 0 || u.len == k_.c[u.top]; }
  bool is_injective(const Uni& u) const { return u.len == 0 || u.len == d(socle(u)); }

  Uni syzygy(const Uni& u) const {
    if (is_projective(u)) return {0, 0};
    return {k_.wrap(u.top + u.len), k_.c[u.top] - u.len};
  }
  Uni cosyzygy(const Uni& u) const {
    if (is_injective(u)) return {0, 0};
    Uni env = injective(socle(u));
    return {env.top, env.len - u.len};
  }

  /// Projective dimension; nullopt when infinite.
  std::optional<int> pd(Uni u) const {
    std::set<Uni> seen;
    for (int i = 0;; ++i) {
      if (u.len == 0) return i == 0 ? 0 : i - 1;
      if (is_projective(u)) return i;
      if (!seen.insert(u).second) return std::nullopt;
      u = syzygy(u);
    }
  }
  std::optional<int> id(Uni u) const {
    std::set<Uni> seen;
    for (int i = 0;; ++i) {
      if (u.len == 0) return i == 0 ? 0 : i - 1;
      if (is_injective(u)) return i;
      if (!seen.insert(u).second) return std::nullopt;
      u = cosyzygy(u);
    }
  }

  /// Leading projective terms in the minimal injective coresolution of P_i; nullopt for infinity.
  std::optional<int> domdim_of(Uni u) const {
    std::set<Uni> seen;
    for (int i = 0;; ++i) {
      if (u.len == 0) return std::nullopt;
      Uni env = injective(socle(u));
      if (!is_projective(env)) return i;
      if (!seen.insert(u).second) return std::nullopt;
      u = cosyzygy(u);
    }
  }

  std::optional<int> gldim() const { return worst([&](int i) { return pd(simple(i)); }); }
  std::optional<int> injdim() const { return worst([&](int i) { return id(projective(i)); }); }
  /// pd of the cogenerator D(Lambda).
  std::optional<int> n() const { return worst([&](int i) { return pd(injective(i)); }); }

  /// nullopt for infinite dominant dimension.
  std::optional<int> domdim() const {
    std::optional<int> best;
    for (int i = 0; i < k_.m(); ++i) {
      auto v = domdim_of(projective(i));
      if (v && (!best || *v < *best)) best = v;
    }
    return best;
  }

  std::vector<int> simple_pd_or(int infinite) const {
    std::vector<int> out;
    for (int i = 0; i < k_.m(); ++i) out.push_back(pd(simple(i)).value_or(infinite));
    return out;
  }

 private:
  template <class Fn>
  std::optional<int> worst(Fn fn) const {
    int best = 0;
    for (int i = 0; i < k_.m(); ++i) {
      auto v = fn(i);
      if (!v) return std::nullopt;
      best = std::max(best, *v);
    }
    return best;
  }

  Kupisch k_;
};

/// Arrow list and monomial relations realising the Kupisch series as a bound quiver algebra.
struct BoundQuiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;            // source, target; arrow i leaves vertex i
  std::vector<std::vector<int>> zero_paths;           // arrow indices, left to right
  std::vector<int> arrow_of_vertex;                   // -1 when no arrow leaves the vertex
};

inline BoundQuiver bound_quiver(const Kupisch& k) {
  BoundQuiver q;
  q.vertices = k.m();
  q.arrow_of_vertex.assign(k.m(), -1);
  for (int i = 0; i < k.m(); ++i) {
    if (k.c[i] < 2) continue;
    q.arrow_of_vertex[i] = static_cast<int>(q.arrows.size());
    q.arrows.push_back({i, k.wrap(i + 1)});
  }
  for (int i = 0; i < k.m(); ++i) {
    int len = k.c[i];
    if (!k.cyclic && i + len >= k.m()) continue;
    // redundant when the tail of the path is already zero
    if (k.c[k.wrap(i + 1)] < len) continue;
    std::vector<int> path;
    bool ok = true;
    for (int s = 0; s < len; ++s) {
      int a = q.arrow_of_vertex[k.wrap(i + s)];
      if (a < 0) ok = false;
      path.push_back(a);
    }
    if (ok && len >= 2) q.zero_paths.push_back(path);
  }
  return q;
}

}  // namespace oracle
