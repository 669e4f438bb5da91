#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "shiftkit/matrix.hpp"

namespace shiftkit {

template <class F>
struct ModuleRep;

enum class Provenance { quiver_built, endomorphism_built, opposite, rebased };

std::string to_string(Provenance p);

template <class F>
struct RadicalData {
  Mat<F> basis;                 // rows: coordinate vectors spanning J (canonical rref)
  std::vector<Mat<F>> powers;   // powers[k] spans J^(k+1); the last one is zero
  std::size_t loewy_length = 0; // least N with J^N = 0
};

/// Finite-dimensional algebra given by structure constants over a basis that is adapted to a
/// complete set of orthogonal idempotents: basis element b lies in e_src(b) A e_tgt(b).
///
/// Structure constants are stored as right multiplication matrices: row x of right_mult(j)
/// holds the coordinates of b_x * b_j.
template <class F>
class BasedAlgebra : public std::enable_shared_from_this<BasedAlgebra<F>> {
 public:
  using Elem = typename F::Elem;
  using Ptr = std::shared_ptr<const BasedAlgebra>;

  struct Init {
    F field;
    std::vector<Mat<F>> right_mult;
    std::vector<Mat<F>> idempotents;  // 1 x dim rows
    std::vector<std::size_t> src, tgt;
    Provenance provenance = Provenance::quiver_built;
    std::vector<std::string> labels;  // optional basis labels
    std::vector<Mat<F>> radical_generators;  // optional, pure elements generating J mod J^2
  };

  /// Validates shapes, Peirce adaptation and the unit; associativity is checked separately.
  static Ptr create(Init init);

  const F& field() const { return field_; }
  std::size_t dim() const { return right_mult_.size(); }
  std::size_t num_vertices() const { return idempotents_.size(); }
  Provenance provenance() const { return provenance_; }

  const Mat<F>& right_mult(std::size_t j) const { return right_mult_[j]; }
  const std::vector<Mat<F>>& right_mult_all() const { return right_mult_; }
  /// Right multiplication matrix of an arbitrary element (1 x dim row).
  Mat<F> right_mult_of(const Mat<F>& y) const;
  Mat<F> product(const Mat<F>& x, const Mat<F>& y) const;
  Mat<F> basis_vector(std::size_t i) const;

  const Mat<F>& unit() const { return unit_; }
  const std::vector<Mat<F>>& idempotents() const { return idempotents_; }
  std::size_t src(std::size_t b) const { return src_[b]; }
  std::size_t tgt(std::size_t b) const { return tgt_[b]; }
  /// Basis indices of e_v A (elements with source v), ascending.
  const std::vector<std::size_t>& starting_at(std::size_t v) const { return starting_at_[v]; }
  const std::vector<std::size_t>& ending_at(std::size_t v) const { return ending_at_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Exhaustive check of associativity on basis triples and of unit/idempotent identities.
  void check_axioms() const;

  const RadicalData<F>& radical() const;
  /// Pure elements of J that, together with the idempotents, generate the algebra.
  const std::vector<Mat<F>>& radical_generators() const;
  /// dim A/J equals the number of idempotents: pairwise non-isomorphic split local corners.
  bool is_basic() const;

  Ptr opposite() const;

  // Lazily built module catalog (see modcat.hpp).
  struct CatalogCache {
    std::once_flag proj_once, simple_once, inj_once;
    std::vector<std::shared_ptr<const ModuleRep<F>>> projectives, simples, injectives;
  };
  CatalogCache& catalog_cache() const { return *catalog_cache_; }

  explicit BasedAlgebra(Init init);

 private:
  F field_;
  std::vector<Mat<F>> right_mult_;
  Mat<F> unit_;
  std::vector<Mat<F>> idempotents_;
  std::vector<std::size_t> src_, tgt_;
  std::vector<std::vector<std::size_t>> starting_at_, ending_at_;
  Provenance provenance_;
  std::vector<std::string> labels_;
  bool generators_given_ = false;

  mutable std::once_flag radical_once_, generators_once_, opposite_once_;
  mutable RadicalData<F> radical_;
  mutable std::vector<Mat<F>> radical_generators_;
  mutable std::shared_ptr<const BasedAlgebra> opposite_;
  mutable std::weak_ptr<const BasedAlgebra> opposite_of_;
  std::unique_ptr<CatalogCache> catalog_cache_ = std::make_unique<CatalogCache>();
};

template <class F>
using AlgebraPtr = std::shared_ptr<const BasedAlgebra<F>>;

/// Jacobson radical of the algebra spanned by the given matrices (a faithful representation).
/// Over Q, or F_p with p larger than the matrix size, this is the kernel of the trace form;
/// for small p the iterated trace criterion over Z/p^(i+1) is applied. Returns coordinate rows.
template <class F>
Mat<F> matrix_algebra_radical(const std::vector<Mat<F>>& basis);

template <class F>
RadicalData<F> radical_series(const BasedAlgebra<F>& a);

/// Complete set of primitive orthogonal idempotents obtained by splitting the semisimple quotient
/// with seeded random elements and lifting along the radical. Throws MathError on failure
/// ("lifting failed at seed ..." or "non-split simple quotient component").
template <class F>
std::vector<Mat<F>> primitive_idempotents(const BasedAlgebra<F>& a, std::uint64_t seed);

/// Entry (i, j) is dim e_i A e_j, the multiplicity of S_j in P_i.
template <class F>
std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra<F>& a);

template <class F>
std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra<F>& a, const std::vector<Mat<F>>& idempotents);

/// Same algebra re-expressed in a Peirce basis for the given complete orthogonal idempotents.
template <class F>
AlgebraPtr<F> rebase_on_idempotents(const BasedAlgebra<F>& a, const std::vector<Mat<F>>& idempotents);

template <class F>
AlgebraPtr<F> opposite_algebra(const AlgebraPtr<F>& a) {
  return a->opposite();
}

/// Algebra equality up to identity of the structure constants (same basis).
template <class F>
bool same_algebra(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b);

}  // namespace shiftkit
