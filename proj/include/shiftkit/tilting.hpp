#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftkit/homology.hpp"

namespace shiftkit {

/// An input outside the hypotheses of an operation ("not QF-3", "k exceeds dominant dimension", ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed certificate contradicted an expected property.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { pass, fail, experimental_fail, inconclusive, not_applicable };

std::string to_string(Verdict v);

/// Worst-first combination used for aggregate exit codes; not-applicable is the neutral element.
Verdict combine(Verdict a, Verdict b);

/// Indecomposable projective-injective modules, one per isomorphism class.
template <class F>
struct ProjInjGenerator {
  std::vector<std::size_t> vertices;  // P_v for each member
  std::vector<ModulePtr<F>> members;
};

template <class F>
ProjInjGenerator<F> proj_inj_generator(const AlgebraPtr<F>& a, std::uint64_t seed = 0);

/// T_k = K_k + Pi with K_k the k-th cosyzygy of the regular module and K_0 = the regular module.
template <class F>
struct ShiftData {
  AlgebraPtr<F> algebra;
  std::size_t level = 0;
  ModulePtr<F> cosyzygy;
  /// Lambda -> I^0 -> ... -> I^{k-1} -> K_k; empty when k = 0.
  std::vector<ModulePtr<F>> witness_terms;  // Lambda, I^0, ..., I^{k-1}, K_k
  std::vector<Morphism<F>> witness_maps;
  std::vector<std::vector<std::size_t>> witness_vertices;  // injective vertices of each I^j
  ProjInjGenerator<F> pi;
  std::vector<ModulePtr<F>> summands;  // basic indecomposable summands of T
  std::vector<bool> summand_in_pi;
  ModulePtr<F> module;                 // direct sum of the summands
};

/// Throws PreconditionError("not QF-3") or PreconditionError("k exceeds dominant dimension").
template <class F>
ShiftData<F> shifted_module(const AlgebraPtr<F>& a, std::size_t k, std::uint64_t seed = 0);

template <class F>
struct TiltingCertificate {
  Capped pd;
  std::vector<Capped> summand_pd;
  std::vector<std::size_t> self_ext;  // dim Ext^i(T, T) for 1 <= i <= max(pd, 1)
  bool witness_exact = false;
  bool witness_in_add_t = false;
  bool hom_left_exact = false;
  std::size_t summands = 0;
  std::size_t simples = 0;
};

/// Checks pd T <= k, Ext^{>0}(T, T) = 0, the add T coresolution of the regular module and the
/// summand count. Throws VerificationError("tilting verification failed: ...").
template <class F>
TiltingCertificate<F> verify_tilting(const ShiftData<F>& sd, std::size_t cap);

/// End of a list of pairwise non-isomorphic indecomposables. The basis element with source x and
/// target y is a map summands[y] -> summands[x]; products are composites (g h = g o h).
template <class F>
struct ShiftedAlgebra {
  AlgebraPtr<F> gamma;
  std::vector<ModulePtr<F>> summands;  // idempotent x <-> summands[x]
  std::vector<Mat<F>> basis_maps;      // Lambda-matrix of each basis element of gamma
};

template <class F>
ShiftedAlgebra<F> endomorphism_algebra(const std::vector<ModulePtr<F>>& summands);

template <class F>
ShiftedAlgebra<F> endomorphism_algebra(const ShiftData<F>& sd) {
  return endomorphism_algebra(sd.summands);
}

struct GldimReport {
  std::size_t level = 0;
  Capped gldim_lambda, gldim_gamma;
  std::size_t simples_gamma = 0;
  Verdict verdict = Verdict::not_applicable;
};

/// gldim Gamma <= gldim Lambda; not applicable when gldim Lambda reached the cap.
template <class F>
GldimReport shift_gldim_report(const AlgebraPtr<F>& a, std::size_t k, std::size_t cap, std::uint64_t seed = 0);

struct InjdimReport {
  std::size_t level = 0;
  Capped n, injdim_t;
  Verdict verdict = Verdict::not_applicable;
  std::string note;
};

/// injdim T_k = n - k. Requires 1 <= k <= domdim and 0 != n finite.
template <class F>
InjdimReport shifted_injdim_check(const AlgebraPtr<F>& a, std::size_t k, std::size_t cap, std::uint64_t seed = 0);

struct EndcheckReport {
  std::size_t summands = 0;
  std::size_t end_dim = 0;
  Capped domdim_end;
  Verdict verdict = Verdict::fail;
};

/// domdim End(M) >= 2 for a generator-cogenerator M. Throws PreconditionError
/// ("M is not a generator-cogenerator") when a projective or injective is missing from add M.
template <class F>
EndcheckReport generator_cogenerator_check(const ModulePtr<F>& m, std::size_t cap, std::uint64_t seed = 0);

/// Bounded complex with terms in add T. Degree lo + i holds the summands types[i] (indices into
/// the summand list) and blocks[i][r][s] is the component of d from summand r in degree lo + i
/// to summand s in degree lo + i + 1.
template <class F>
struct ComplexOfModules {
  std::vector<ModulePtr<F>> summands;
  int lo = 0;
  std::vector<std::vector<std::size_t>> types;
  std::vector<std::vector<std::vector<Mat<F>>>> blocks;

  int hi() const { return lo + static_cast<int>(types.size()) - 1; }
  std::size_t term_dim(std::size_t i) const;
  Mat<F> differential(std::size_t i) const;  // degree lo + i -> lo + i + 1
  std::vector<std::size_t> cohomology_dims() const;
  /// Index window of nonzero terms; 0 for the zero complex.
  std::size_t width() const;
  /// d o d = 0 and every block is a module map; returns an empty string when consistent.
  std::string check() const;
};

/// Removes contractible summands T_x -> T_x with invertible components by Gaussian elimination.
template <class F>
ComplexOfModules<F> minimize(const ComplexOfModules<F>& x);

struct MechanismRow {
  std::size_t simple = 0;
  Capped pd_simple;
  std::vector<std::size_t> cohomology;      // degrees lo .. 0 of the transported complex
  std::vector<std::size_t> cohomology_min;  // same after minimization
  int lo = 0;
  std::size_t width = 0, width_min = 0;
  bool tor_vanishes = false, width_bounded = false;
  Verdict verdict = Verdict::inconclusive;
};

struct MechanismReport {
  std::size_t level = 0;
  Capped n;
  std::vector<MechanismRow> rows;
  Verdict verdict = Verdict::inconclusive;
};

/// For each simple Gamma-module (or only `which` when given): transports its minimal projective
/// resolution to add T, minimizes, and checks H^i = 0 for i < -k and width <= n + 1.
template <class F>
MechanismReport mechanism_check(const AlgebraPtr<F>& a, std::size_t k, std::optional<std::size_t> which,
                                std::size_t cap, std::uint64_t seed = 0);

/// The transported complex of a simple Gamma-module before minimization.
template <class F>
ComplexOfModules<F> transport_resolution(const ShiftedAlgebra<F>& g, const Resolution<F>& r);

}  // namespace shiftkit
