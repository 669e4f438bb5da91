#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace shiftkit;
using namespace testsupport;

using Dims = std::vector<std::size_t>;

namespace {

constexpr std::size_t kCap = 24;

Dims sorted_dims(const std::vector<ModulePtr<PrimeField>>& ms) {
  Dims d;
  for (const auto& m : ms) d.push_back(m->dim());
  std::sort(d.begin(), d.end());
  return d;
}

/// Lengths of the Loewy layers of M; a module is uniserial when every layer is simple.
std::vector<std::size_t> loewy_layers(ModulePtr<PrimeField> m) {
  std::vector<std::size_t> out;
  while (m->dim() > 0) {
    auto t = top_vector(m);
    std::size_t s = 0;
    for (auto x : t) s += x;
    out.push_back(s);
    m = radical_of(m).module;
  }
  return out;
}

void shift_properties(const AlgebraPtr<PrimeField>& a, std::size_t kmax) {
  auto p = profile(a, kCap);
  REQUIRE(p.gldim.finite());
  std::size_t top = p.domdim.finite() ? std::min(p.domdim.value, kmax) : kmax;
  for (std::size_t k = 0; k <= top; ++k) {
    CAPTURE(k);
    auto sd = shifted_module(a, k);
    auto cert = verify_tilting(sd, kCap);
    CHECK(cert.summands == a->num_vertices());
    CHECK(cert.pd.value <= k);
    auto g = endomorphism_algebra(sd);
    CHECK(g.gamma->num_vertices() == a->num_vertices());
    auto gr = shift_gldim_report(a, k, kCap);
    CHECK(gr.gldim_gamma.finite());
    CHECK(gr.gldim_gamma.value <= p.gldim.value);
    CHECK(gr.verdict == Verdict::pass);
    if (k >= 1 && p.n.value >= 1) {
      auto ir = shifted_injdim_check(a, k, kCap);
      CHECK(ir.injdim_t == Capped::exact(p.n.value - k));
      CHECK(ir.verdict == Verdict::pass);
    }
    auto mr = mechanism_check(a, k, std::nullopt, kCap);
    CHECK(mr.verdict == Verdict::pass);
    for (const auto& row : mr.rows) {
      CHECK(row.tor_vanishes);
      CHECK(row.width_min <= p.n.value + 1);
      CHECK(row.cohomology == row.cohomology_min);
    }
  }
}

}  // namespace

TEST_CASE("projective-injective generator examples") {
  auto loop = corpus_algebra("loop_sq");
  auto pl = proj_inj_generator(loop);
  REQUIRE(pl.members.size() == 1);
  CHECK(isomorphic(pl.members[0], regular_module(loop)));
  auto ss = corpus_algebra("semisimple_k2");
  CHECK(proj_inj_generator(ss).vertices == Dims{0, 1});
  auto a2 = corpus_algebra("a2");
  auto pa = proj_inj_generator(a2);
  CHECK(pa.vertices == Dims{0});
  CHECK(isomorphic(pa.members[0], injectives(a2)[1]));
}

TEST_CASE("shifted module examples") {
  auto a2 = corpus_algebra("a2");
  auto s0 = shifted_module(a2, 0);
  CHECK(sorted_dims(s0.summands) == sorted_dims(projectives(a2)));
  for (const auto& s : s0.summands) CHECK(is_projective(s));

  auto loop = corpus_algebra("loop_sq");
  auto sl = shifted_module(loop, 1);
  CHECK(sl.cosyzygy->dim() == 0);
  REQUIRE(sl.summands.size() == 1);
  CHECK(isomorphic(sl.summands[0], regular_module(loop)));

  auto s1 = shifted_module(a2, 1);
  CHECK(isomorphic(s1.cosyzygy, simples(a2)[0]));
  CHECK(sorted_dims(s1.summands) == Dims{1, 2});
  CHECK(std::count(s1.summand_in_pi.begin(), s1.summand_in_pi.end(), true) == 1);
}

TEST_CASE("shift preconditions") {
  auto sink = corpus_algebra("a3_sink");
  CHECK_THROWS_WITH_AS(shifted_module(sink, 1), doctest::Contains("not QF-3"), PreconditionError);
  CHECK_NOTHROW(shifted_module(sink, 0));
  auto a2 = corpus_algebra("a2");
  CHECK_THROWS_WITH_AS(shifted_module(a2, 2), doctest::Contains("k exceeds dominant dimension"), PreconditionError);
}

TEST_CASE("tilting certificate examples") {
  auto a2 = corpus_algebra("a2");
  auto c0 = verify_tilting(shifted_module(a2, 0), kCap);
  CHECK(c0.pd == Capped::exact(0));
  auto c1 = verify_tilting(shifted_module(a2, 1), kCap);
  CHECK(c1.pd == Capped::exact(1));
  CHECK(c1.self_ext == Dims{0});
  CHECK(c1.witness_exact);
  CHECK(c1.witness_in_add_t);
  CHECK(c1.hom_left_exact);
  auto aus = corpus_algebra("auslander_kx2");
  CHECK_NOTHROW(verify_tilting(shifted_module(aus, 1), kCap));
  CHECK_NOTHROW(verify_tilting(shifted_module(aus, 2), kCap));
}

TEST_CASE("a module with self-extensions fails the tilting certificate") {
  auto a2 = corpus_algebra("a2");
  auto sd = shifted_module(a2, 1);
  // S2 + S1 has Ext^1(S1, S2) != 0
  sd.summands = {simples(a2)[1], simples(a2)[0]};
  sd.summand_in_pi = {false, false};
  sd.module = direct_sum(sd.summands).module;
  CHECK_THROWS_WITH_AS(verify_tilting(sd, kCap), doctest::Contains("tilting verification failed"), VerificationError);
}

TEST_CASE("shifted algebra examples") {
  auto loop = corpus_algebra("loop_sq");
  auto gl = endomorphism_algebra(shifted_module(loop, 1));
  CHECK(gl.gamma->dim() == 2);
  CHECK(gl.gamma->num_vertices() == 1);
  CHECK(gl.gamma->radical().loewy_length == 2);

  for (const auto& name : {"a2", "auslander_kx2", "comm_square"}) {
    auto a = corpus_algebra(name);
    auto g0 = endomorphism_algebra(shifted_module(a, 0));
    CHECK(g0.gamma->num_vertices() == a->num_vertices());
    CHECK(profile(g0.gamma, kCap).gldim == profile(a, kCap).gldim);
  }

  auto a2 = corpus_algebra("a2");
  auto g = endomorphism_algebra(shifted_module(a2, 1));
  CHECK(g.gamma->dim() == 3);
  CHECK(g.gamma->num_vertices() == 2);
  CHECK(g.gamma->radical().basis.rows() == 1);
  auto c = cartan_matrix(*g.gamma);
  CHECK(c[0][0] == 1);
  CHECK(c[1][1] == 1);
  CHECK(c[0][1] + c[1][0] == 1);
  for (std::size_t i = 0; i < g.basis_maps.size(); ++i)
    CHECK(is_morphism(Morphism<PrimeField>{g.summands[g.gamma->tgt(i)], g.summands[g.gamma->src(i)], g.basis_maps[i]}));
}

TEST_CASE("shifted algebra of the Auslander algebra is the Nakayama algebra with Kupisch series (3, 2)") {
  auto aus = corpus_algebra("auslander_kx2");
  auto g = endomorphism_algebra(shifted_module(aus, 1));
  REQUIRE(g.gamma->num_vertices() == 2);
  CHECK(g.gamma->dim() == 5);
  Dims lengths;
  for (const auto& p : projectives(g.gamma)) {
    auto layers = loewy_layers(p);
    for (auto l : layers) CHECK(l == 1);
    lengths.push_back(layers.size());
  }
  std::sort(lengths.begin(), lengths.end());
  REQUIRE(lengths == Dims{2, 3});
  oracle::Nakayama nak({{3, 2}, true});
  CHECK(profile(g.gamma, kCap).gldim == capped_of(nak.gldim(), kCap));
  CHECK(nak.gldim() == 2);
}

TEST_CASE("gldim report examples") {
  auto a2 = corpus_algebra("a2");
  auto r0 = shift_gldim_report(a2, 0, kCap);
  CHECK(r0.gldim_gamma == r0.gldim_lambda);
  auto r1 = shift_gldim_report(a2, 1, kCap);
  CHECK(r1.gldim_gamma == Capped::exact(1));
  CHECK(r1.verdict == Verdict::pass);
  auto aus = shift_gldim_report(corpus_algebra("auslander_kx2"), 1, kCap);
  CHECK(aus.gldim_gamma.value <= 2);
  CHECK(aus.simples_gamma == 2);
  auto loop = shift_gldim_report(corpus_algebra("loop_sq"), 1, kCap);
  CHECK(loop.verdict == Verdict::not_applicable);
}

TEST_CASE("shifted injective dimension examples") {
  auto a2 = shifted_injdim_check(corpus_algebra("a2"), 1, kCap);
  CHECK(a2.n == Capped::exact(1));
  CHECK(a2.injdim_t == Capped::exact(0));
  CHECK(a2.verdict == Verdict::pass);
  auto loop = shifted_injdim_check(corpus_algebra("loop_sq"), 1, kCap);
  CHECK(loop.verdict == Verdict::not_applicable);
  CHECK(loop.note.find("self-injective") != std::string::npos);
  auto aus = shifted_injdim_check(corpus_algebra("auslander_kx2"), 1, kCap);
  CHECK(aus.injdim_t == Capped::exact(1));
  CHECK_THROWS_AS(shifted_injdim_check(corpus_algebra("a2"), 0, kCap), PreconditionError);
}

TEST_CASE("generator-cogenerator examples") {
  auto a2 = corpus_algebra("a2");
  auto m = parse_module_spec(a2, "regular+dual");
  auto r = generator_cogenerator_check(m, kCap);
  CHECK((r.domdim_end.at_least || r.domdim_end.value >= 2));
  CHECK(r.verdict == Verdict::pass);

  auto loop = corpus_algebra("loop_sq");
  auto rl = generator_cogenerator_check(regular_module(loop), kCap);
  CHECK(rl.end_dim == 2);
  CHECK(rl.domdim_end == Capped::geq(kCap));

  auto rk = generator_cogenerator_check(parse_module_spec(loop, "regular+S1"), kCap);
  CHECK(rk.end_dim == 5);
  CHECK(rk.domdim_end == Capped::exact(2));

  CHECK_THROWS_WITH_AS(generator_cogenerator_check(regular_module(a2), kCap),
                       doctest::Contains("not a generator-cogenerator"), PreconditionError);
}

TEST_CASE("module specs") {
  auto a2 = corpus_algebra("a2");
  CHECK(parse_module_spec(a2, "regular")->dim() == 3);
  CHECK(parse_module_spec(a2, "dual")->dim() == 3);
  CHECK(parse_module_spec(a2, "2*S1+P2")->dimension_vector() == Dims{2, 1});
  CHECK(parse_module_spec(a2, "I2")->dimension_vector() == Dims{1, 1});
  CHECK_THROWS(parse_module_spec(a2, "S3"));
  CHECK_THROWS(parse_module_spec(a2, "Q1"));
}

TEST_CASE("minimization removes a contractible summand") {
  auto a2 = corpus_algebra("a2");
  auto p1 = projectives(a2)[0];
  auto p2 = projectives(a2)[1];
  auto incl = hom_basis(p2, p1);
  REQUIRE(incl.size() == 1);
  ComplexOfModules<PrimeField> x;
  x.summands = {p1, p2};
  x.lo = -1;
  // degree -1: P1 + P2, degree 0: P1, d = (identity, inclusion)
  x.types = {{0, 1}, {0}};
  x.blocks = {{{Mat<PrimeField>::identity(a2->field(), 2)}, {incl[0].matrix}}};
  REQUIRE(x.check() == "");
  CHECK(x.cohomology_dims() == Dims{1, 0});
  CHECK(x.width() == 2);
  auto y = minimize(x);
  CHECK(y.check() == "");
  CHECK(y.cohomology_dims() == Dims{1, 0});
  CHECK(y.width() == 1);
  CHECK(y.types[0] == Dims{1});
  CHECK(y.types[1].empty());
}

TEST_CASE("minimization keeps a minimal complex") {
  auto a2 = corpus_algebra("a2");
  auto p1 = projectives(a2)[0];
  auto p2 = projectives(a2)[1];
  auto incl = hom_basis(p2, p1);
  ComplexOfModules<PrimeField> x;
  x.summands = {p1, p2};
  x.lo = -1;
  x.types = {{1}, {0}};
  x.blocks = {{{incl[0].matrix}}};
  REQUIRE(x.check() == "");
  auto y = minimize(x);
  CHECK(y.types == x.types);
  CHECK(y.cohomology_dims() == Dims{0, 1});
}

TEST_CASE("a complex with d o d != 0 is rejected by the consistency check") {
  auto loop = corpus_algebra("loop_sq");
  auto p = projectives(loop)[0];
  auto id = Mat<PrimeField>::identity(loop->field(), 2);
  ComplexOfModules<PrimeField> x;
  x.summands = {p};
  x.lo = -2;
  x.types = {{0}, {0}, {0}};
  x.blocks = {{{id}}, {{id}}};
  CHECK(x.check() != "");
}

TEST_CASE("transported resolutions") {
  auto aus = corpus_algebra("auslander_kx2");
  for (std::size_t k : {0u, 1u, 2u}) {
    auto g = endomorphism_algebra(shifted_module(aus, k));
    for (const auto& s : simples(g.gamma)) {
      auto r = minimal_resolution(s, Direction::projective, kCap);
      auto x = transport_resolution(g, r);
      CHECK(x.check() == "");
      CHECK(x.hi() == 0);
      CHECK(x.lo == -static_cast<int>(r.length().value));
      auto h = x.cohomology_dims();
      for (int deg = x.lo; deg < -static_cast<int>(k); ++deg) CHECK(h[static_cast<std::size_t>(deg - x.lo)] == 0);
    }
  }
}

TEST_CASE("mechanism examples") {
  auto a2 = corpus_algebra("a2");
  auto m0 = mechanism_check(a2, 0, std::nullopt, kCap);
  for (const auto& r : m0.rows) CHECK(r.width_min == r.pd_simple.value + 1);
  auto m1 = mechanism_check(a2, 1, std::nullopt, kCap);
  CHECK(m1.rows.size() == 2);
  for (const auto& r : m1.rows) CHECK(r.width_min <= 2);
  auto aus = mechanism_check(corpus_algebra("auslander_kx2"), 1, std::nullopt, kCap);
  CHECK(aus.rows.size() == 2);
  for (const auto& r : aus.rows) CHECK(r.width_min <= 3);
  CHECK(aus.verdict == Verdict::pass);
  auto one = mechanism_check(corpus_algebra("auslander_kx2"), 1, std::size_t{1}, kCap);
  CHECK(one.rows.size() == 1);
  auto loop = mechanism_check(corpus_algebra("loop_sq"), 1, std::nullopt, kCap);
  CHECK(loop.verdict == Verdict::inconclusive);
}

TEST_CASE("verdict combination") {
  CHECK(combine(Verdict::pass, Verdict::not_applicable) == Verdict::pass);
  CHECK(combine(Verdict::not_applicable, Verdict::not_applicable) == Verdict::not_applicable);
  CHECK(combine(Verdict::pass, Verdict::experimental_fail) == Verdict::experimental_fail);
  CHECK(combine(Verdict::experimental_fail, Verdict::inconclusive) == Verdict::inconclusive);
  CHECK(combine(Verdict::inconclusive, Verdict::fail) == Verdict::fail);
  CHECK(to_string(Verdict::experimental_fail) == "experimental-fail");
}

TEST_CASE("shift properties on the finite-gldim corpus") {
  for (const auto& name : corpus_names()) {
    auto a = corpus_algebra(name);
    if (!profile(a, kCap).gldim.finite()) continue;
    CAPTURE(name);
    shift_properties(a, 4);
  }
}

TEST_CASE("shift properties on random Nakayama algebras of finite global dimension") {
  std::mt19937_64 rng(41);
  int tested = 0;
  for (int t = 0; t < 40 && tested < 12; ++t) {
    auto k = random_kupisch(rng, t % 2 == 1, 5, 14);
    oracle::Nakayama nak(k);
    if (!nak.gldim()) continue;
    CAPTURE(k.c);
    CAPTURE(k.cyclic);
    shift_properties(nakayama_algebra(k), 3);
    ++tested;
  }
  CHECK(tested >= 6);
}
