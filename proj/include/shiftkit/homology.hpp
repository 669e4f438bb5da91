#pragma once

#include <string>
#include <vector>

#include "shiftkit/modcat.hpp"

namespace shiftkit {

/// A dimension that is either exact or only known to be at least `value` (the cap was reached).
struct Capped {
  std::size_t value = 0;
  bool at_least = false;

  static Capped exact(std::size_t v) { return {v, false}; }
  static Capped geq(std::size_t v) { return {v, true}; }
  bool finite() const { return !at_least; }
  std::string text() const;        // "2" or "≥ 24"
  std::string json_token() const;  // "2" or "geq:24"
  bool operator==(const Capped&) const = default;
};

/// max of exact values; any capped input makes the result capped at `cap`.
Capped capped_max(const std::vector<Capped>& xs, std::size_t cap);

enum class Direction { projective, injective };

/// Projective: augmentation P_0 -> M, differentials[i] : P_{i+1} -> P_i, syzygy_maps[i] : Omega^{i+1} -> P_i.
/// Injective: augmentation M -> I^0, differentials[i] : I^i -> I^{i+1}, syzygy_maps[i] : I^i -> Omega^{-(i+1)}.
template <class F>
struct Resolution {
  Direction direction = Direction::projective;
  ModulePtr<F> module;
  std::vector<ModulePtr<F>> terms;
  std::vector<std::vector<std::size_t>> vertices;  // indecomposable summands of each term
  Morphism<F> augmentation;
  std::vector<Morphism<F>> differentials;
  std::vector<ModulePtr<F>> syzygies;  // Omega^{i+1} (or cosyzygies), aligned with syzygy_maps
  std::vector<Morphism<F>> syzygy_maps;
  bool minimal = true;
  bool capped = false;
  std::size_t cap = 0;

  Capped length() const;
};

template <class F>
Resolution<F> minimal_resolution(const ModulePtr<F>& m, Direction direction, std::size_t cap);

/// Exactness and d o d = 0 checks by rank bookkeeping; returns an empty string when consistent.
template <class F>
std::string check_resolution(const Resolution<F>& r);

/// dim Ext^i(M, N) for 0 <= i <= max_i.
template <class F>
std::vector<std::size_t> ext_dims(const ModulePtr<F>& m, const ModulePtr<F>& n, std::size_t max_i);

struct HomologicalProfile {
  Capped gldim, injdim, domdim, n;
  std::vector<Capped> simple_pd;
  std::size_t cap = 0;

  bool qf3() const { return domdim.at_least || domdim.value >= 1; }
};

template <class F>
HomologicalProfile profile(const AlgebraPtr<F>& a, std::size_t cap);

/// Number of leading projective terms of the minimal injective coresolution of the regular module.
template <class F>
Capped dominant_dimension(const AlgebraPtr<F>& a, std::size_t cap);

}  // namespace shiftkit
