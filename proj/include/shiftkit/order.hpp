#pragma once

#include <optional>
#include <string>

#include "shiftkit/tilting.hpp"

namespace shiftkit {

/// Symbolic order A (x) R with R = k[[x_1, ..., x_d]].
template <class F>
struct TensorOrderSpec {
  AlgebraPtr<F> base;
  std::size_t krull = 0;

  std::string base_ring() const;
};

/// Modelling assumption behind every d >= 1 statement about the shifted order.
extern const char* const kTransferAssumption;

struct OrderProfile {
  std::size_t krull = 0;
  Capped cm_domdim, n, gldim_base, gldim_lambda, predicted_bound;
  bool qf3 = false;
  std::optional<bool> applicable;  // n > d; empty when n reached the cap
};

template <class F>
OrderProfile order_profile(const TensorOrderSpec<F>& spec, std::size_t cap);

/// Profile of the order from an already computed profile of the base algebra.
OrderProfile order_profile_from(const HomologicalProfile& base, std::size_t krull);

struct TheoremReport {
  std::size_t krull = 0, level = 0;
  Capped gldim_gamma_base, lhs, rhs;  // lhs = gldim Gamma_A + d, rhs = gldim Lambda - d = n
  Verdict verdict = Verdict::inconclusive;
};

/// gldim Gamma <= gldim Lambda - d under the transfer assumption. Hard pass/fail at d = 0, pass or
/// experimental-fail for d >= 1. Throws PreconditionError when the hypotheses fail.
template <class F>
TheoremReport theorem_report(const TensorOrderSpec<F>& spec, std::size_t k, std::size_t cap, std::uint64_t seed = 0);

}  // namespace shiftkit
