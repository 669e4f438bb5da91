#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace shiftkit;
using namespace testsupport;

using Dims = std::vector<std::size_t>;

namespace {

template <class F>
Morphism<F> random_morphism(const ModulePtr<F>& m, const ModulePtr<F>& n, std::mt19937_64& rng) {
  auto hs = hom_space(m, n);
  Mat<F> coords(m->field(), 1, hs.dim());
  for (std::size_t i = 0; i < hs.dim(); ++i) coords(0, i) = m->field().random(rng);
  return {m, n, hs.element(coords)};
}

}  // namespace

TEST_CASE("hom examples") {
  auto a2 = corpus_algebra("a2");
  for (const auto& m : catalog(a2).injectives) CHECK(hom_space(regular_module(a2), m).dim() == m->dim());
  for (std::size_t i = 0; i < 2; ++i)
    for (const auto& m : catalog(a2).injectives)
      CHECK(hom_space(projectives(a2)[i], m).dim() == m->dimension_vector()[i]);
  CHECK(hom_space(simples(a2)[0], projectives(a2)[0]).dim() == 0);
  CHECK(hom_space(projectives(a2)[0], simples(a2)[0]).dim() == 1);
}

TEST_CASE("hom basis elements are morphisms and coordinates round trip") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"a3_linear", "auslander_kx2", "comm_square"}) {
    auto a = corpus_algebra(name);
    auto cat = catalog(a);
    std::vector<ModulePtr<PrimeField>> mods = cat.simples;
    mods.insert(mods.end(), cat.injectives.begin(), cat.injectives.end());
    mods.push_back(regular_module(a));
    for (const auto& m : mods)
      for (const auto& n : mods) {
        auto hs = hom_space(m, n);
        for (const auto& f : hs.morphisms()) CHECK(is_morphism(f));
        auto f = random_morphism(m, n, rng);
        CHECK(hs.element(hs.coordinates(f.matrix)) == f.matrix);
      }
  }
}

TEST_CASE("morphism factor examples") {
  auto a2 = corpus_algebra("a2");
  auto lam = regular_module(a2);
  auto id = morphism_factor(identity_morphism(lam));
  CHECK(id.kernel.module->dim() == 0);
  CHECK(id.cokernel.module->dim() == 0);
  auto p1 = projectives(a2)[0];
  auto z = morphism_factor(zero_morphism(lam, p1));
  CHECK(z.kernel.module->dim() == lam->dim());
  CHECK(z.cokernel.module->dim() == p1->dim());
  auto env = injective_envelope(lam);
  CHECK(env.injective.module->dim() == 4);
  auto coker = morphism_factor(env.mono).cokernel.module;
  CHECK(coker->dim() == 1);
  CHECK(coker->dimension_vector() == Dims{1, 0});
}

TEST_CASE("factorizations are exact") {
  std::mt19937_64 rng(9);
  auto a = corpus_algebra("auslander_kx3");
  auto cat = catalog(a);
  std::vector<ModulePtr<PrimeField>> mods = cat.projectives;
  mods.insert(mods.end(), cat.injectives.begin(), cat.injectives.end());
  for (const auto& m : mods)
    for (const auto& n : mods) {
      auto f = random_morphism(m, n, rng);
      auto fac = morphism_factor(f);
      CHECK(fac.kernel.module->dim() + fac.image.module->dim() == m->dim());
      CHECK((fac.kernel.inclusion * f.matrix).is_zero());
      CHECK((fac.coimage * fac.image.inclusion) == f.matrix);
      CHECK((f.matrix * fac.cokernel.projection).is_zero());
      CHECK(rank(fac.cokernel.projection) == fac.cokernel.module->dim());
      CHECK_NOTHROW(check_module(*fac.kernel.module));
      CHECK_NOTHROW(check_module(*fac.cokernel.module));
    }
}

TEST_CASE("catalog examples") {
  auto ss = corpus_algebra("semisimple_k2");
  auto c = catalog(ss);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(c.simples[i]->dimension_vector() == c.projectives[i]->dimension_vector());
    CHECK(c.simples[i]->dimension_vector() == c.injectives[i]->dimension_vector());
  }
  auto a2 = corpus_algebra("a2");
  CHECK(projectives(a2)[0]->dimension_vector() == Dims{1, 1});
  CHECK(projectives(a2)[1]->dimension_vector() == Dims{0, 1});
  CHECK(injectives(a2)[0]->dimension_vector() == Dims{1, 0});
  CHECK(injectives(a2)[1]->dimension_vector() == Dims{1, 1});
  auto loop = corpus_algebra("loop_sq");
  CHECK(projectives(loop)[0]->dim() == 2);
  CHECK(isomorphic(projectives(loop)[0], injectives(loop)[0]));
}

TEST_CASE("cover and envelope examples") {
  auto loop = corpus_algebra("loop_sq");
  auto s = simples(loop)[0];
  auto cov = projective_cover(s);
  CHECK(cov.projective.module->dim() == 2);
  CHECK(kernel_of(cov.epi).module->dim() == 1);
  auto pc = projective_cover(projectives(loop)[0]);
  CHECK(inverse(pc.epi.matrix).has_value());

  auto a2 = corpus_algebra("a2");
  auto env = injective_envelope(regular_module(a2));
  CHECK(env.vertices == std::vector<std::size_t>{1, 1});
  CHECK(kernel_of(env.mono).module->dim() == 0);
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    for (const auto& m : catalog(a).simples) {
      auto c = projective_cover(m);
      CHECK(rank(c.epi.matrix) == m->dim());
      CHECK(top_vector(c.projective.module) == top_vector(m));
      auto e = injective_envelope(m);
      CHECK(kernel_of(e.mono).module->dim() == 0);
      CHECK(socle_vector(e.injective.module) == socle_vector(m));
    }
  }
}

TEST_CASE("decomposition examples") {
  auto a2 = corpus_algebra("a2");
  auto s1 = simples(a2)[0];
  auto d = decompose(direct_sum<PrimeField>({s1, s1}).module, 0);
  REQUIRE(d.summands.size() == 2);
  for (const auto& x : d.summands) CHECK(isomorphic(x, s1));
  CHECK(decompose(projectives(a2)[0], 0).summands.size() == 1);

  auto aus = corpus_algebra("auslander_kx2");
  auto dl = decompose(regular_module(aus), 3);
  REQUIRE(dl.summands.size() == 2);
  Dims sum(2, 0);
  for (const auto& x : dl.summands)
    for (std::size_t i = 0; i < 2; ++i) sum[i] += x->dimension_vector()[i];
  CHECK(sum[0] + sum[1] == 5);
}

TEST_CASE("decomposition certificates") {
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    std::vector<std::size_t> all(a->num_vertices());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    auto m = direct_sum<PrimeField>({regular_module(a), cofree_module(a, all).module}).module;
    for (std::uint64_t seed : {0u, 1u}) {
      auto d = decompose(m, seed);
      auto id = Mat<PrimeField>(a->field(), m->dim(), m->dim());
      for (std::size_t i = 0; i < d.summands.size(); ++i) {
        CHECK((d.inclusions[i] * d.projections[i]).is_identity());
        CHECK(is_split_local(d.summands[i]));
        id = id + d.projections[i] * d.inclusions[i];
        for (std::size_t j = 0; j < d.summands.size(); ++j)
          if (i != j) CHECK((d.inclusions[i] * d.projections[j]).is_zero());
      }
      CHECK(id.is_identity());
    }
  }
}

TEST_CASE("dualize examples") {
  auto a = corpus_algebra("a3_linear");
  auto op = a->opposite();
  for (std::size_t i = 0; i < 3; ++i) {
    auto ds = dualize(simples(a)[i]);
    CHECK(ds->algebra == op);
    CHECK(isomorphic(ds, simples(op)[i]));
  }
  auto lam = regular_module(a);
  auto dl = dualize(lam);
  CHECK(dl->dim() == lam->dim());
  // D(Lambda) over the opposite has dimension vector given by the column sums of the Cartan matrix
  auto c = cartan_matrix(*a);
  Dims cols(3, 0), rows(3, 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      cols[j] += c[i][j];
      rows[i] += c[i][j];
    }
  CHECK(lam->dimension_vector() == cols);
  CHECK(dl->dimension_vector() == cols);
  CHECK(regular_module(op)->dimension_vector() == rows);
}

TEST_CASE("hom duality on the corpus") {
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    auto cat = catalog(a);
    std::vector<ModulePtr<PrimeField>> mods = cat.simples;
    mods.insert(mods.end(), cat.projectives.begin(), cat.projectives.end());
    mods.insert(mods.end(), cat.injectives.begin(), cat.injectives.end());
    for (const auto& m : mods)
      for (const auto& n : mods) CHECK(hom_space(m, n).dim() == hom_space(dualize(n), dualize(m)).dim());
  }
}

TEST_CASE("projective and injective recognition") {
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    for (const auto& p : projectives(a)) CHECK(is_projective(p));
    for (const auto& i : injectives(a)) CHECK(is_injective(i));
  }
  auto a2 = corpus_algebra("a2");
  CHECK_FALSE(is_projective(simples(a2)[0]));
  CHECK(is_injective(simples(a2)[0]));
  CHECK_FALSE(is_injective(simples(a2)[1]));
}

TEST_CASE("modules over Q") {
  auto a = corpus_algebra("auslander_kx3", Rationals());
  auto d = decompose(regular_module(a), 0);
  CHECK(d.summands.size() == 3);
  CHECK(hom_space(regular_module(a), injectives(a)[0]).dim() == injectives(a)[0]->dim());
}
