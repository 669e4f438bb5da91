#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "shiftkit/algebra.hpp"

namespace shiftkit {

/// Right module: action(b) is the dim x dim matrix of v -> v * b_b. Every basis vector carries a
/// vertex label (it lies in M e_vertex), so direct sums are concatenations.
template <class F>
struct ModuleRep {
  AlgebraPtr<F> algebra;
  std::vector<std::size_t> vertex;
  std::vector<Mat<F>> action;

  std::size_t dim() const { return vertex.size(); }
  const F& field() const { return algebra->field(); }
  std::vector<std::size_t> dimension_vector() const;
  /// Indices of basis vectors at each vertex.
  std::vector<std::vector<std::size_t>> vertex_indices() const;
  /// Action of an arbitrary algebra element (1 x dim A row).
  Mat<F> action_of(const Mat<F>& element) const;
};

template <class F>
using ModulePtr = std::shared_ptr<const ModuleRep<F>>;

template <class F>
struct Morphism {
  ModulePtr<F> src, tgt;
  Mat<F> matrix;  // src.dim x tgt.dim, v -> v * matrix

  Morphism compose(const Morphism& then) const;  // then after this
};

template <class F>
Morphism<F> identity_morphism(const ModulePtr<F>& m);
template <class F>
Morphism<F> zero_morphism(const ModulePtr<F>& m, const ModulePtr<F>& n);

/// Checks vertex labels and the homomorphism property of the action; throws MathError.
template <class F>
void check_module(const ModuleRep<F>& m);
template <class F>
bool is_morphism(const Morphism<F>& f);

template <class F>
ModulePtr<F> regular_module(const AlgebraPtr<F>& a);
template <class F>
ModulePtr<F> zero_module(const AlgebraPtr<F>& a);

/// Hom(M, N) with its canonical basis. Coordinates of an element are its entries at the free
/// positions of the intertwining system.
template <class F>
struct HomSpace {
  ModulePtr<F> src, tgt;
  std::vector<Mat<F>> basis;
  std::vector<std::pair<std::size_t, std::size_t>> free_positions;

  std::size_t dim() const { return basis.size(); }
  Mat<F> coordinates(const Mat<F>& f) const;  // 1 x dim
  Mat<F> element(const Mat<F>& coords) const;
  std::vector<Morphism<F>> morphisms() const;
};

template <class F>
HomSpace<F> hom_space(const ModulePtr<F>& m, const ModulePtr<F>& n);

template <class F>
std::vector<Morphism<F>> hom_basis(const ModulePtr<F>& m, const ModulePtr<F>& n) {
  return hom_space(m, n).morphisms();
}

template <class F>
struct Submodule {
  ModulePtr<F> module;
  Mat<F> inclusion;  // k x dim M
};

template <class F>
struct QuotientModule {
  ModulePtr<F> module;
  Mat<F> projection;  // dim M x q
};

/// Submodule spanned by rows of u (which must span a submodule whose rows are vertex-pure after
/// splitting by vertex). Throws MathError if the span is not closed under the action.
template <class F>
Submodule<F> submodule(const ModulePtr<F>& m, const Mat<F>& u);
template <class F>
QuotientModule<F> quotient(const ModulePtr<F>& m, const Mat<F>& u);

template <class F>
struct Factorization {
  Submodule<F> kernel;        // kernel.inclusion: ker -> M
  Submodule<F> image;         // image.inclusion: im -> N
  Mat<F> coimage;             // M -> im
  QuotientModule<F> cokernel; // N -> coker
};

template <class F>
Factorization<F> morphism_factor(const Morphism<F>& f);

template <class F>
Submodule<F> kernel_of(const Morphism<F>& f);

template <class F>
struct DirectSum {
  ModulePtr<F> module;
  std::vector<Mat<F>> inclusions;   // summand -> sum
  std::vector<Mat<F>> projections;  // sum -> summand
};

template <class F>
DirectSum<F> direct_sum(const std::vector<ModulePtr<F>>& parts);

/// M J as a submodule.
template <class F>
Submodule<F> radical_of(const ModulePtr<F>& m);
template <class F>
Submodule<F> socle_of(const ModulePtr<F>& m);
/// dim of (M / M J) e_i for each vertex i.
template <class F>
std::vector<std::size_t> top_vector(const ModulePtr<F>& m);
template <class F>
std::vector<std::size_t> socle_vector(const ModulePtr<F>& m);

/// Indecomposable projectives e_i A, simples and injectives D(A e_i), aligned by idempotent index.
template <class F>
const std::vector<ModulePtr<F>>& projectives(const AlgebraPtr<F>& a);
template <class F>
const std::vector<ModulePtr<F>>& simples(const AlgebraPtr<F>& a);
template <class F>
const std::vector<ModulePtr<F>>& injectives(const AlgebraPtr<F>& a);

template <class F>
struct Catalog {
  std::vector<ModulePtr<F>> simples, projectives, injectives;
};
template <class F>
Catalog<F> catalog(const AlgebraPtr<F>& a);

/// Direct sum of indecomposable projectives indexed by vertex list.
template <class F>
DirectSum<F> free_module(const AlgebraPtr<F>& a, const std::vector<std::size_t>& vertices);

/// Direct sum of indecomposable injectives indexed by vertex list.
template <class F>
DirectSum<F> cofree_module(const AlgebraPtr<F>& a, const std::vector<std::size_t>& vertices);

template <class F>
struct Cover {
  DirectSum<F> projective;          // P = sum of P_v over generator vertices
  std::vector<std::size_t> vertices;
  Morphism<F> epi;                  // P -> M
};

template <class F>
struct Envelope {
  DirectSum<F> injective;
  std::vector<std::size_t> vertices;
  Morphism<F> mono;                 // M -> I
};

/// Minimal projective cover; the zero module gets the zero cover.
template <class F>
Cover<F> projective_cover(const ModulePtr<F>& m);
/// Minimal injective envelope, dual to the cover of D(M) over the opposite algebra.
template <class F>
Envelope<F> injective_envelope(const ModulePtr<F>& m);

/// D(M) over the opposite algebra; D(f) is the transpose matrix.
template <class F>
ModulePtr<F> dualize(const ModulePtr<F>& m);
template <class F>
Morphism<F> dualize(const Morphism<F>& f, const ModulePtr<F>& dual_src, const ModulePtr<F>& dual_tgt);

/// Radical of End(M) (as coordinate rows in the Hom basis) and the right multiplication data.
template <class F>
struct EndomorphismRing {
  HomSpace<F> hom;
  std::vector<Mat<F>> right_mult;  // composition x then b_j, in coordinates
  Mat<F> radical;
};

template <class F>
EndomorphismRing<F> endomorphism_ring(const ModulePtr<F>& m);

template <class F>
struct DecompositionCert {
  ModulePtr<F> module;
  std::vector<ModulePtr<F>> summands;
  std::vector<Mat<F>> inclusions;   // summand -> M
  std::vector<Mat<F>> projections;  // M -> summand
};

/// Krull-Schmidt decomposition by Fitting splitting; summands ordered by dimension vector.
/// Throws MathError("decomposition not found within retry budget").
template <class F>
DecompositionCert<F> decompose(const ModulePtr<F>& m, std::uint64_t seed);

/// True if End(M) / rad End(M) is the ground field.
template <class F>
bool is_split_local(const ModulePtr<F>& m);

template <class F>
bool isomorphic(const ModulePtr<F>& m, const ModulePtr<F>& n, std::uint64_t seed = 0);

/// An explicit isomorphism M -> N if one is found.
template <class F>
std::optional<Mat<F>> find_isomorphism(const ModulePtr<F>& m, const ModulePtr<F>& n, std::uint64_t seed = 0);

/// One representative per isomorphism class, keeping first occurrences.
template <class F>
std::vector<ModulePtr<F>> basic_representatives(const std::vector<ModulePtr<F>>& parts, std::uint64_t seed);

/// dim Ext^1(M, S_j) for each j, read off the top of the first syzygy.
template <class F>
std::vector<std::size_t> ext1_against_simples(const ModulePtr<F>& m);
/// dim Ext^1(S_j, M) for each j, via duality with the opposite algebra.
template <class F>
std::vector<std::size_t> ext1_from_simples(const ModulePtr<F>& m);

template <class F>
bool is_projective(const ModulePtr<F>& m);
template <class F>
bool is_injective(const ModulePtr<F>& m);

}  // namespace shiftkit
