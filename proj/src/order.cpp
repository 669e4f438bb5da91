#include "shiftkit/order.hpp"

namespace shiftkit {

const char* const kTransferAssumption =
    "the shifted order of A (x) R is modelled as (shifted algebra of A) (x) R, so gldim Gamma = gldim Gamma_A + d";

template <class F>
std::string TensorOrderSpec<F>::base_ring() const {
  if (krull == 0) return "k";
  std::string s = "k[[";
  for (std::size_t i = 1; i <= krull; ++i) s += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
  return s + "]]";
}

namespace {

Capped shift_by(const Capped& c, std::size_t d) {
  return c.at_least ? c : Capped::exact(c.value + d);
}

}  // namespace

OrderProfile order_profile_from(const HomologicalProfile& base, std::size_t krull) {
  OrderProfile o;
  o.krull = krull;
  o.cm_domdim = base.domdim;
  o.n = base.n;
  o.gldim_base = base.gldim;
  o.gldim_lambda = shift_by(base.gldim, krull);
  o.predicted_bound = base.gldim.at_least ? base.gldim : base.n;
  o.qf3 = base.qf3();
  if (!base.n.at_least) o.applicable = base.n.value > krull;
  return o;
}

template <class F>
OrderProfile order_profile(const TensorOrderSpec<F>& spec, std::size_t cap) {
  return order_profile_from(profile(spec.base, cap), spec.krull);
}

template <class F>
TheoremReport theorem_report(const TensorOrderSpec<F>& spec, std::size_t k, std::size_t cap, std::uint64_t seed) {
  auto base = profile(spec.base, cap);
  auto o = order_profile_from(base, spec.krull);
  TheoremReport r;
  r.krull = spec.krull;
  r.level = k;
  if (!o.applicable) throw PreconditionError("theorem inconclusive: n reached the cap");
  if (!*o.applicable)
    throw PreconditionError("theorem not applicable: n = " + o.n.text() + " <= d = " + std::to_string(spec.krull));
  if (!o.qf3) throw PreconditionError("not QF-3");
  if (!o.cm_domdim.at_least && k > o.cm_domdim.value)
    throw PreconditionError("k exceeds dominant dimension: k = " + std::to_string(k) + ", domdim = " + o.cm_domdim.text());
  r.rhs = o.predicted_bound;
  auto g = endomorphism_algebra(shifted_module(spec.base, k, seed));
  std::vector<Capped> pds;
  for (const auto& s : simples(g.gamma)) pds.push_back(minimal_resolution(s, Direction::projective, cap).length());
  r.gldim_gamma_base = capped_max(pds, cap);
  r.lhs = shift_by(r.gldim_gamma_base, spec.krull);
  if (r.lhs.at_least || r.rhs.at_least) {
    r.verdict = Verdict::inconclusive;
  } else if (r.lhs.value <= r.rhs.value) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = spec.krull == 0 ? Verdict::fail : Verdict::experimental_fail;
  }
  return r;
}

#define SHIFTKIT_INSTANTIATE_ORDER(F)                                                      \
  template struct TensorOrderSpec<F>;                                                      \
  template OrderProfile order_profile(const TensorOrderSpec<F>&, std::size_t);             \
  template TheoremReport theorem_report(const TensorOrderSpec<F>&, std::size_t, std::size_t, std::uint64_t);

SHIFTKIT_INSTANTIATE_ORDER(PrimeField)
SHIFTKIT_INSTANTIATE_ORDER(Rationals)

}  // namespace shiftkit
