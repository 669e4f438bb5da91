#include "doctest.h"
#include "support.hpp"

using namespace shiftkit;
using namespace testsupport;

namespace {
constexpr std::size_t kCap = 24;
}

TEST_CASE("order profile at Krull dimension zero is the algebra profile") {
  for (const auto& name : corpus_names()) {
    for (int field = 0; field < 2; ++field) {
      auto run = [&](auto f) {
        auto a = corpus_algebra(name, f);
        auto hp = profile(a, kCap);
        auto op = order_profile(TensorOrderSpec<decltype(f)>{a, 0}, kCap);
        CAPTURE(name);
        CHECK(op.krull == 0);
        CHECK(op.cm_domdim == hp.domdim);
        CHECK(op.n == hp.n);
        CHECK(op.gldim_lambda == hp.gldim);
        CHECK(op.gldim_base == hp.gldim);
        CHECK(op.qf3 == hp.qf3());
      };
      if (field == 0)
        run(PrimeField(101));
      else
        run(Rationals());
    }
  }
}

TEST_CASE("order profile of the Auslander algebra at Krull dimension one") {
  auto a = corpus_algebra("auslander_kx2");
  TensorOrderSpec<PrimeField> spec{a, 1};
  CHECK(spec.base_ring() == "k[[x1]]");
  CHECK(TensorOrderSpec<PrimeField>{a, 0}.base_ring() == "k");
  auto op = order_profile(spec, kCap);
  CHECK(op.cm_domdim == Capped::exact(2));
  CHECK(op.n == Capped::exact(2));
  CHECK(op.gldim_lambda == Capped::exact(3));
  REQUIRE(op.applicable.has_value());
  CHECK(*op.applicable);
  CHECK(op.predicted_bound == Capped::exact(2));
}

TEST_CASE("self-injective orders are Gorenstein and outside the theorem") {
  auto a = corpus_algebra("loop_sq");
  for (std::size_t d : {0u, 1u, 3u}) {
    auto op = order_profile(TensorOrderSpec<PrimeField>{a, d}, kCap);
    CHECK(op.cm_domdim == Capped::geq(kCap));
    CHECK(op.n == Capped::exact(0));
    REQUIRE(op.applicable.has_value());
    CHECK_FALSE(*op.applicable);
    CHECK_THROWS_WITH_AS(theorem_report(TensorOrderSpec<PrimeField>{a, d}, 1, kCap),
                         doctest::Contains("theorem not applicable"), PreconditionError);
  }
}

TEST_CASE("theorem at Krull dimension zero passes on the corpus") {
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    auto hp = profile(a, kCap);
    if (!hp.n.finite() || hp.n.value == 0 || !hp.qf3()) continue;
    CAPTURE(name);
    auto tr = theorem_report(TensorOrderSpec<PrimeField>{a, 0}, 1, kCap);
    CHECK(tr.verdict == Verdict::pass);
    CHECK(tr.lhs.value <= tr.rhs.value);
  }
}

TEST_CASE("theorem for the Auslander algebra at Krull dimension one") {
  auto a = corpus_algebra("auslander_kx2");
  auto tr = theorem_report(TensorOrderSpec<PrimeField>{a, 1}, 1, kCap);
  // the shifted algebra is the Nakayama algebra (3, 2) of global dimension 2, so 2 + 1 > 2
  oracle::Nakayama gamma({{3, 2}, true});
  CHECK(tr.gldim_gamma_base == capped_of(gamma.gldim(), kCap));
  CHECK(tr.lhs == Capped::exact(3));
  CHECK(tr.rhs == Capped::exact(2));
  CHECK(tr.verdict == Verdict::experimental_fail);
}

TEST_CASE("theorem preconditions") {
  auto a2 = corpus_algebra("a2");
  CHECK_THROWS_WITH_AS(theorem_report(TensorOrderSpec<PrimeField>{a2, 1}, 1, kCap),
                       doctest::Contains("theorem not applicable"), PreconditionError);
  auto sink = corpus_algebra("a3_sink");
  CHECK_THROWS_WITH_AS(theorem_report(TensorOrderSpec<PrimeField>{sink, 0}, 1, kCap), doctest::Contains("not QF-3"),
                       PreconditionError);
  auto aus = corpus_algebra("auslander_kx2");
  CHECK_THROWS_WITH_AS(theorem_report(TensorOrderSpec<PrimeField>{aus, 0}, 3, kCap),
                       doctest::Contains("k exceeds dominant dimension"), PreconditionError);
  CHECK(std::string(kTransferAssumption).size() > 0);
}

TEST_CASE("order profile from a precomputed profile") {
  auto hp = profile(corpus_algebra("nakayama_a4_rad2"), kCap);
  auto op = order_profile_from(hp, 2);
  CHECK(op.gldim_lambda == Capped::exact(5));
  CHECK(op.predicted_bound == Capped::exact(3));
  CHECK(op.applicable == std::optional<bool>(true));
  CHECK(order_profile_from(hp, 3).applicable == std::optional<bool>(false));
}
