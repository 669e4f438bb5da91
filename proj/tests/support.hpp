#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracle/nakayama.hpp"
#include "oracle/paths.hpp"
#include "shiftkit/cli.hpp"

#ifndef SHIFTKIT_CORPUS_DIR
#define SHIFTKIT_CORPUS_DIR "corpus"
#endif

namespace testsupport {

using namespace shiftkit;

inline std::string corpus_path(const std::string& name) { return std::string(SHIFTKIT_CORPUS_DIR) + "/" + name + ".alg"; }

inline AlgebraFile corpus_file(const std::string& name) { return parse_algebra_file(corpus_path(name)); }

template <class F = PrimeField>
AlgebraPtr<F> corpus_algebra(const std::string& name, const F& field = F()) {
  return build_algebra(corpus_file(name), field);
}

inline std::vector<std::string> corpus_names() {
  return {"a2",          "a3_linear",     "a3_sink",       "a3_source",        "auslander_kx2", "auslander_kx3",
          "comm_square", "loop_cube",     "loop_sq",       "nakayama_a4_rad2", "semisimple_k2"};
}

inline std::string arrow_name(int a) { return "x" + std::to_string(a); }

/// Library algebra of a monomial bound quiver.
template <class F = PrimeField>
AlgebraPtr<F> monomial_algebra(int vertices, const std::vector<std::pair<int, int>>& arrows,
                               const std::vector<std::vector<int>>& zero_paths, const F& field = F()) {
  Quiver q;
  q.vertices = static_cast<std::size_t>(vertices);
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
    q.arrows.push_back({arrow_name(a), static_cast<std::size_t>(arrows[a].first), static_cast<std::size_t>(arrows[a].second)});
  std::vector<RelationCombo<F>> rels;
  for (const auto& z : zero_paths) {
    RelationTerm<F> t{field.one(), {}};
    for (int a : z) t.path.push_back(arrow_name(a));
    rels.push_back({t});
  }
  return build_based_algebra(q, rels, field);
}

template <class F = PrimeField>
AlgebraPtr<F> nakayama_algebra(const oracle::Kupisch& k, const F& field = F()) {
  auto bq = oracle::bound_quiver(k);
  return monomial_algebra(bq.vertices, bq.arrows, bq.zero_paths, field);
}

/// Random admissible Kupisch series with total dimension at most max_dim.
inline oracle::Kupisch random_kupisch(std::mt19937_64& rng, bool cyclic, int max_m, int max_dim) {
  for (;;) {
    oracle::Kupisch k;
    k.cyclic = cyclic;
    int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
    if (!cyclic && m < 2) m = 2;
    k.c.assign(m, 0);
    if (cyclic) {
      for (int i = 0; i < m; ++i) k.c[i] = 2 + static_cast<int>(rng() % 3);
    } else {
      k.c[m - 1] = 1;
      for (int i = m - 2; i >= 0; --i) k.c[i] = 2 + static_cast<int>(rng() % static_cast<unsigned>(k.c[i + 1]));
    }
    if (k.admissible() && k.dim() <= max_dim) return k;
  }
}

inline Capped capped_of(const std::optional<int>& v, std::size_t cap) {
  return v ? Capped::exact(static_cast<std::size_t>(*v)) : Capped::geq(cap);
}

}  // namespace testsupport
