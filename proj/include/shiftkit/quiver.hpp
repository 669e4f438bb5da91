#pragma once

#include <string>
#include <vector>

#include "shiftkit/algebra.hpp"

namespace shiftkit {

struct Arrow {
  std::string name;
  std::size_t source = 0;  // 0-based
  std::size_t target = 0;
};

struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;

  /// Throws std::invalid_argument on duplicate names or out-of-range endpoints.
  void validate() const;
  /// Index of the arrow with this name, or npos.
  std::size_t find(const std::string& name) const;
};

template <class F>
struct RelationTerm {
  typename F::Elem coeff;
  std::vector<std::string> path;  // arrow names, composed left to right
};

template <class F>
using RelationCombo = std::vector<RelationTerm<F>>;

class RelationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quotient kQ / I as a based algebra. The basis consists of the standard paths (those that are
/// not leading terms of the ideal under a longest-first order), so trivial paths and arrows always
/// appear. Throws RelationError for ill-formed relations and AdmissibilityError when paths of
/// length nilpotency_cap survive.
template <class F>
AlgebraPtr<F> build_based_algebra(const Quiver& q, const std::vector<RelationCombo<F>>& relations, const F& field,
                                  std::size_t nilpotency_cap = 30);

}  // namespace shiftkit
