#include "shiftkit/tilting.hpp"

#include <algorithm>

namespace shiftkit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::experimental_fail: return "experimental-fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::not_applicable: return 0;
    case Verdict::pass: return 1;
    case Verdict::experimental_fail: return 2;
    case Verdict::inconclusive: return 3;
    case Verdict::fail: return 4;
  }
  return 4;
}

template <class F>
Capped global_dimension(const AlgebraPtr<F>& a, std::size_t cap) {
  std::vector<Capped> pds;
  for (const auto& s : simples(a)) pds.push_back(minimal_resolution(s, Direction::projective, cap).length());
  return capped_max(pds, cap);
}

template <class F>
Capped injective_dimension(const std::vector<ModulePtr<F>>& parts, std::size_t cap) {
  std::vector<Capped> ds;
  for (const auto& p : parts) ds.push_back(minimal_resolution(p, Direction::injective, cap).length());
  return capped_max(ds, cap);
}

/// Matrix of Hom(T, f) : Hom(T, X) -> Hom(T, Y) in the canonical bases.
template <class F>
Mat<F> hom_functor_matrix(const HomSpace<F>& hx, const HomSpace<F>& hy, const Mat<F>& f) {
  Mat<F> out(f.field(), 0, hy.dim());
  for (const auto& g : hx.basis) out = Mat<F>::vstack(out, hy.coordinates(g * f));
  return out;
}

template <class F>
Mat<F> remove_row_block(const Mat<F>& m, std::size_t r0, std::size_t n) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i < r0 || i >= r0 + n) keep.push_back(i);
  return m.select_rows(keep);
}

}  // namespace

Verdict combine(Verdict a, Verdict b) {
  return severity(a) >= severity(b) ? a : b;
}

template <class F>
ProjInjGenerator<F> proj_inj_generator(const AlgebraPtr<F>& a, std::uint64_t seed) {
  ProjInjGenerator<F> g;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    const auto& p = projectives(a)[v];
    if (!is_injective(p)) continue;
    bool seen = false;
    for (const auto& q : g.members)
      if (isomorphic(p, q, seed)) {
        seen = true;
        break;
      }
    if (seen) continue;
    g.vertices.push_back(v);
    g.members.push_back(p);
  }
  return g;
}

template <class F>
ShiftData<F> shifted_module(const AlgebraPtr<F>& a, std::size_t k, std::uint64_t seed) {
  ShiftData<F> sd;
  sd.algebra = a;
  sd.level = k;
  sd.pi = proj_inj_generator(a, seed);
  auto lam = regular_module(a);
  if (k == 0) {
    sd.cosyzygy = lam;
  } else {
    auto r = minimal_resolution(lam, Direction::injective, k);
    std::vector<int> proj(a->num_vertices(), -1);
    sd.witness_terms.push_back(lam);
    for (std::size_t j = 0; j < k; ++j) {
      if (j >= r.terms.size()) {
        sd.witness_terms.push_back(zero_module(a));
        sd.witness_vertices.push_back({});
        continue;
      }
      for (auto v : r.vertices[j]) {
        if (proj[v] < 0) proj[v] = is_projective(injectives(a)[v]) ? 1 : 0;
        if (proj[v] == 0) {
          if (j == 0) throw PreconditionError("not QF-3: the injective envelope of the regular module is not projective");
          throw PreconditionError("k exceeds dominant dimension: k = " + std::to_string(k) +
                                  ", domdim = " + std::to_string(j));
        }
      }
      sd.witness_terms.push_back(r.terms[j]);
      sd.witness_vertices.push_back(r.vertices[j]);
    }
    sd.cosyzygy = k - 1 < r.syzygies.size() ? r.syzygies[k - 1] : zero_module(a);
    sd.witness_terms.push_back(sd.cosyzygy);
    const auto& w = sd.witness_terms;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      Mat<F> m(a->field(), w[j]->dim(), w[j + 1]->dim());
      if (j == 0 && !r.terms.empty())
        m = r.augmentation.matrix;
      else if (j + 1 == w.size() - 1 && k - 1 < r.syzygy_maps.size())
        m = r.syzygy_maps[k - 1].matrix;
      else if (j >= 1 && j - 1 < r.differentials.size())
        m = r.differentials[j - 1].matrix;
      sd.witness_maps.push_back({w[j], w[j + 1], m});
    }
  }
  std::vector<ModulePtr<F>> parts = decompose(sd.cosyzygy, seed).summands;
  for (const auto& p : sd.pi.members) parts.push_back(p);
  sd.summands = basic_representatives(parts, seed);
  for (const auto& s : sd.summands) sd.summand_in_pi.push_back(is_projective(s) && is_injective(s));
  sd.module = sd.summands.empty() ? zero_module(a) : direct_sum(sd.summands).module;
  return sd;
}

template <class F>
TiltingCertificate<F> verify_tilting(const ShiftData<F>& sd, std::size_t cap) {
  auto fail = [](const std::string& why) { throw VerificationError("tilting verification failed: " + why); };
  const auto& a = sd.algebra;
  TiltingCertificate<F> c;
  c.summands = sd.summands.size();
  c.simples = a->num_vertices();
  for (const auto& s : sd.summands) c.summand_pd.push_back(minimal_resolution(s, Direction::projective, cap).length());
  c.pd = capped_max(c.summand_pd, cap);
  if (c.pd.at_least || c.pd.value > sd.level)
    fail("pd T = " + c.pd.text() + " exceeds k = " + std::to_string(sd.level));
  auto ext = ext_dims(sd.module, sd.module, std::max<std::size_t>(c.pd.value, 1));
  c.self_ext.assign(ext.begin() + 1, ext.end());
  for (std::size_t i = 0; i < c.self_ext.size(); ++i)
    if (c.self_ext[i] != 0) fail("Ext^" + std::to_string(i + 1) + "(T, T) != 0");

  if (sd.level == 0) {
    c.witness_exact = c.witness_in_add_t = c.hom_left_exact = true;
  } else {
    const auto& w = sd.witness_terms;
    const auto& f = sd.witness_maps;
    c.witness_exact = true;
    for (std::size_t j = 0; j + 1 < f.size(); ++j)
      if (!(f[j].matrix * f[j + 1].matrix).is_zero()) c.witness_exact = false;
    std::vector<std::size_t> rk;
    for (const auto& m : f) {
      if (!is_morphism(m)) c.witness_exact = false;
      rk.push_back(rank(m.matrix));
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      std::size_t in = j == 0 ? 0 : rk[j - 1];
      std::size_t out = j < rk.size() ? rk[j] : 0;
      if (in + out != w[j]->dim()) c.witness_exact = false;
    }
    c.witness_in_add_t = true;
    for (const auto& vs : sd.witness_vertices)
      for (auto v : vs)
        if (!is_projective(injectives(a)[v])) c.witness_in_add_t = false;
    auto h0 = hom_space(sd.module, w[0]);
    auto h1 = hom_space(sd.module, w[1]);
    auto h2 = hom_space(sd.module, w[2]);
    std::size_t r0 = rank(hom_functor_matrix(h0, h1, f[0].matrix));
    std::size_t r1 = rank(hom_functor_matrix(h1, h2, f[1].matrix));
    c.hom_left_exact = r0 == h0.dim() && h1.dim() - r1 == r0;
    if (!c.witness_exact) fail("witness coresolution is not exact");
    if (!c.witness_in_add_t) fail("witness coresolution leaves add T");
    if (!c.hom_left_exact) fail("Hom(T, -) of the witness is not left exact");
  }
  if (c.summands != c.simples)
    fail(std::to_string(c.summands) + " summands but " + std::to_string(c.simples) + " simples");
  return c;
}

template <class F>
ShiftedAlgebra<F> endomorphism_algebra(const std::vector<ModulePtr<F>>& summands) {
  if (summands.empty()) throw MathError("endomorphism algebra of the zero module");
  const F& f = summands[0]->field();
  const std::size_t n = summands.size();
  std::vector<std::vector<HomSpace<F>>> h(n);
  std::vector<std::vector<std::size_t>> offset(n, std::vector<std::size_t>(n));
  ShiftedAlgebra<F> g;
  g.summands = summands;
  typename BasedAlgebra<F>::Init init{f, {}, {}, {}, {}, Provenance::endomorphism_built, {}, {}};
  std::size_t dim = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      h[x].push_back(hom_space(summands[y], summands[x]));
      offset[x][y] = dim;
      for (std::size_t i = 0; i < h[x][y].dim(); ++i) {
        init.src.push_back(x);
        init.tgt.push_back(y);
        init.labels.push_back("h" + std::to_string(x + 1) + "_" + std::to_string(y + 1) + "." + std::to_string(i));
        g.basis_maps.push_back(h[x][y].basis[i]);
      }
      dim += h[x][y].dim();
    }
  for (std::size_t j = 0; j < dim; ++j) {
    Mat<F> r(f, dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      if (init.tgt[b] != init.src[j]) continue;
      const std::size_t x = init.src[b], z = init.tgt[j];
      Mat<F> coords = h[x][z].coordinates(g.basis_maps[j] * g.basis_maps[b]);
      r.set_block(b, offset[x][z], coords);
    }
    init.right_mult.push_back(std::move(r));
  }
  for (std::size_t x = 0; x < n; ++x) {
    Mat<F> e(f, 1, dim);
    e.set_block(0, offset[x][x], h[x][x].coordinates(Mat<F>::identity(f, summands[x]->dim())));
    init.idempotents.push_back(std::move(e));
  }
  g.gamma = BasedAlgebra<F>::create(std::move(init));
  g.gamma->check_axioms();
  return g;
}

template <class F>
GldimReport shift_gldim_report(const AlgebraPtr<F>& a, std::size_t k, std::size_t cap, std::uint64_t seed) {
  GldimReport r;
  r.level = k;
  r.gldim_lambda = global_dimension(a, cap);
  auto g = endomorphism_algebra(shifted_module(a, k, seed));
  r.simples_gamma = g.gamma->num_vertices();
  r.gldim_gamma = global_dimension(g.gamma, cap);
  if (r.gldim_lambda.at_least)
    r.verdict = Verdict::not_applicable;
  else if (r.gldim_gamma.at_least)
    r.verdict = r.gldim_lambda.value < cap ? Verdict::fail : Verdict::inconclusive;
  else
    r.verdict = r.gldim_gamma.value <= r.gldim_lambda.value ? Verdict::pass : Verdict::fail;
  return r;
}

template <class F>
InjdimReport shifted_injdim_check(const AlgebraPtr<F>& a, std::size_t k, std::size_t cap, std::uint64_t seed) {
  if (k == 0) throw PreconditionError("shifted injdim check needs k >= 1");
  InjdimReport r;
  r.level = k;
  auto p = profile(a, cap);
  r.n = p.n;
  auto sd = shifted_module(a, k, seed);
  r.injdim_t = injective_dimension(sd.summands, cap);
  if (p.n.at_least) {
    r.verdict = Verdict::inconclusive;
    r.note = "n reached the cap";
  } else if (p.n.value == 0) {
    r.note = "self-injective: n = 0";
  } else if (k > p.n.value) {
    r.note = "k exceeds n";
  } else if (r.injdim_t.at_least) {
    r.verdict = Verdict::inconclusive;
    r.note = "injdim T reached the cap";
  } else {
    r.verdict = r.injdim_t.value == p.n.value - k ? Verdict::pass : Verdict::fail;
  }
  return r;
}

template <class F>
EndcheckReport generator_cogenerator_check(const ModulePtr<F>& m, std::size_t cap, std::uint64_t seed) {
  const auto& a = m->algebra;
  auto reps = basic_representatives(decompose(m, seed).summands, seed);
  auto contains = [&](const ModulePtr<F>& x) {
    return std::any_of(reps.begin(), reps.end(), [&](const ModulePtr<F>& y) { return isomorphic(x, y, seed); });
  };
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    if (!contains(projectives(a)[v]))
      throw PreconditionError("M is not a generator-cogenerator: P" + std::to_string(v + 1) + " missing");
    if (!contains(injectives(a)[v]))
      throw PreconditionError("M is not a generator-cogenerator: I" + std::to_string(v + 1) + " missing");
  }
  EndcheckReport r;
  r.summands = reps.size();
  auto g = endomorphism_algebra(reps);
  r.end_dim = g.gamma->dim();
  r.domdim_end = dominant_dimension(g.gamma, cap);
  r.verdict = r.domdim_end.at_least || r.domdim_end.value >= 2 ? Verdict::pass : Verdict::fail;
  return r;
}

template <class F>
std::size_t ComplexOfModules<F>::term_dim(std::size_t i) const {
  std::size_t d = 0;
  for (auto t : types[i]) d += summands[t]->dim();
  return d;
}

template <class F>
Mat<F> ComplexOfModules<F>::differential(std::size_t i) const {
  const F& f = summands[0]->field();
  Mat<F> d(f, term_dim(i), term_dim(i + 1));
  std::size_t r0 = 0;
  for (std::size_t r = 0; r < types[i].size(); ++r) {
    std::size_t c0 = 0;
    for (std::size_t s = 0; s < types[i + 1].size(); ++s) {
      d.set_block(r0, c0, blocks[i][r][s]);
      c0 += summands[types[i + 1][s]]->dim();
    }
    r0 += summands[types[i][r]]->dim();
  }
  return d;
}

template <class F>
std::vector<std::size_t> ComplexOfModules<F>::cohomology_dims() const {
  std::vector<std::size_t> rk;
  for (std::size_t i = 0; i + 1 < types.size(); ++i) rk.push_back(rank(differential(i)));
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < types.size(); ++i) {
    std::size_t in = i == 0 ? 0 : rk[i - 1];
    std::size_t out = i < rk.size() ? rk[i] : 0;
    h.push_back(term_dim(i) - in - out);
  }
  return h;
}

template <class F>
std::size_t ComplexOfModules<F>::width() const {
  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i < types.size(); ++i)
    if (term_dim(i) > 0) {
      if (!first) first = i;
      last = i;
    }
  return first ? *last - *first + 1 : 0;
}

template <class F>
std::string ComplexOfModules<F>::check() const {
  if (blocks.size() + 1 != types.size() && !(types.empty() && blocks.empty())) return "block count mismatch";
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t r = 0; r < types[i].size(); ++r)
      for (std::size_t s = 0; s < types[i + 1].size(); ++s)
        if (!is_morphism(Morphism<F>{summands[types[i][r]], summands[types[i + 1][s]], blocks[i][r][s]}))
          return "component is not a module map at degree " + std::to_string(lo + static_cast<int>(i));
  for (std::size_t i = 0; i + 2 < types.size(); ++i)
    if (!(differential(i) * differential(i + 1)).is_zero())
      return "d o d != 0 at degree " + std::to_string(lo + static_cast<int>(i));
  return "";
}

template <class F>
ComplexOfModules<F> minimize(const ComplexOfModules<F>& x) {
  ComplexOfModules<F> c = x;
  for (;;) {
    bool reduced = false;
    for (std::size_t i = 0; i < c.blocks.size() && !reduced; ++i)
      for (std::size_t r = 0; r < c.types[i].size() && !reduced; ++r)
        for (std::size_t s = 0; s < c.types[i + 1].size() && !reduced; ++s) {
          if (c.types[i][r] != c.types[i + 1][s]) continue;
          auto inv = inverse(c.blocks[i][r][s]);
          if (!inv) continue;
          auto& b = c.blocks[i];
          for (std::size_t r2 = 0; r2 < b.size(); ++r2) {
            if (r2 == r) continue;
            Mat<F> left = b[r2][s] * *inv;
            for (std::size_t s2 = 0; s2 < b[r2].size(); ++s2)
              if (s2 != s) b[r2][s2] = b[r2][s2] - left * b[r][s2];
          }
          b.erase(b.begin() + r);
          for (auto& row : b) row.erase(row.begin() + s);
          if (i > 0)
            for (auto& row : c.blocks[i - 1]) row.erase(row.begin() + r);
          if (i + 1 < c.blocks.size()) c.blocks[i + 1].erase(c.blocks[i + 1].begin() + s);
          c.types[i].erase(c.types[i].begin() + r);
          c.types[i + 1].erase(c.types[i + 1].begin() + s);
          reduced = true;
        }
    if (!reduced) break;
  }
  return c;
}

template <class F>
ComplexOfModules<F> transport_resolution(const ShiftedAlgebra<F>& g, const Resolution<F>& r) {
  const auto& gamma = g.gamma;
  const F& f = gamma->field();
  ComplexOfModules<F> c;
  c.summands = g.summands;
  if (r.terms.empty()) return c;
  const std::size_t len = r.terms.size() - 1;
  c.lo = -static_cast<int>(len);
  for (std::size_t i = 0; i <= len; ++i) c.types.push_back(r.vertices[len - i]);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t j = len - i;  // P_j -> P_{j-1}
    const Mat<F>& d = r.differentials[j - 1].matrix;
    const auto& from = r.vertices[j];
    const auto& to = r.vertices[j - 1];
    std::vector<std::vector<Mat<F>>> blocks(from.size());
    std::size_t r0 = 0;
    for (std::size_t a = 0; a < from.size(); ++a) {
      const auto& gens = gamma->starting_at(from[a]);
      Mat<F> e = gamma->idempotents()[from[a]].select_cols(gens);
      Mat<F> image = e * d.block(r0, 0, gens.size(), d.cols());
      std::size_t c0 = 0;
      for (std::size_t s = 0; s < to.size(); ++s) {
        const auto& cols = gamma->starting_at(to[s]);
        Mat<F> m(f, g.summands[from[a]]->dim(), g.summands[to[s]]->dim());
        for (std::size_t t = 0; t < cols.size(); ++t) {
          const auto& coeff = image(0, c0 + t);
          if (f.is_zero(coeff)) continue;
          if (gamma->tgt(cols[t]) != from[a]) throw MathError("transported component is not Peirce-pure");
          m = m + g.basis_maps[cols[t]].scaled(coeff);
        }
        blocks[a].push_back(std::move(m));
        c0 += cols.size();
      }
      r0 += gens.size();
    }
    c.blocks.push_back(std::move(blocks));
  }
  return c;
}

template <class F>
MechanismReport mechanism_check(const AlgebraPtr<F>& a, std::size_t k, std::optional<std::size_t> which,
                                std::size_t cap, std::uint64_t seed) {
  MechanismReport rep;
  rep.level = k;
  auto p = profile(a, cap);
  rep.n = p.n;
  if (p.gldim.at_least || p.n.at_least) return rep;
  auto g = endomorphism_algebra(shifted_module(a, k, seed));
  const auto& simp = simples(g.gamma);
  std::vector<std::size_t> todo;
  if (which) {
    if (*which >= simp.size()) throw PreconditionError("no simple module with index " + std::to_string(*which + 1));
    todo.push_back(*which);
  } else {
    for (std::size_t s = 0; s < simp.size(); ++s) todo.push_back(s);
  }
  rep.verdict = Verdict::pass;
  for (auto s : todo) {
    MechanismRow row;
    row.simple = s;
    auto res = minimal_resolution(simp[s], Direction::projective, cap);
    row.pd_simple = res.length();
    if (res.capped) {
      rep.rows.push_back(row);
      rep.verdict = combine(rep.verdict, Verdict::inconclusive);
      continue;
    }
    auto x = transport_resolution(g, res);
    if (auto err = x.check(); !err.empty()) throw VerificationError("transported complex: " + err);
    auto xm = minimize(x);
    if (auto err = xm.check(); !err.empty()) throw VerificationError("minimized complex: " + err);
    row.lo = x.lo;
    row.cohomology = x.cohomology_dims();
    row.cohomology_min = xm.cohomology_dims();
    if (row.cohomology != row.cohomology_min) throw VerificationError("minimization changed cohomology");
    row.width = x.width();
    row.width_min = xm.width();
    row.tor_vanishes = true;
    for (std::size_t i = 0; i < row.cohomology.size(); ++i)
      if (x.lo + static_cast<int>(i) < -static_cast<int>(k) && row.cohomology[i] != 0) row.tor_vanishes = false;
    row.width_bounded = row.width_min <= p.n.value + 1;
    row.verdict = row.tor_vanishes && row.width_bounded ? Verdict::pass : Verdict::fail;
    rep.verdict = combine(rep.verdict, row.verdict);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

#define SHIFTKIT_INSTANTIATE_TILTING(F)                                                                      \
  template struct ComplexOfModules<F>;                                                                       \
  template ProjInjGenerator<F> proj_inj_generator(const AlgebraPtr<F>&, std::uint64_t);                      \
  template ShiftData<F> shifted_module(const AlgebraPtr<F>&, std::size_t, std::uint64_t);                    \
  template TiltingCertificate<F> verify_tilting(const ShiftData<F>&, std::size_t);                           \
  template ShiftedAlgebra<F> endomorphism_algebra(const std::vector<ModulePtr<F>>&);                         \
  template GldimReport shift_gldim_report(const AlgebraPtr<F>&, std::size_t, std::size_t, std::uint64_t);    \
  template InjdimReport shifted_injdim_check(const AlgebraPtr<F>&, std::size_t, std::size_t, std::uint64_t); \
  template EndcheckReport generator_cogenerator_check(const ModulePtr<F>&, std::size_t, std::uint64_t);      \
  template ComplexOfModules<F> minimize(const ComplexOfModules<F>&);                                         \
  template ComplexOfModules<F> transport_resolution(const ShiftedAlgebra<F>&, const Resolution<F>&);         \
  template MechanismReport mechanism_check(const AlgebraPtr<F>&, std::size_t, std::optional<std::size_t>,   \
                                           std::size_t, std::uint64_t);

SHIFTKIT_INSTANTIATE_TILTING(PrimeField)
SHIFTKIT_INSTANTIATE_TILTING(Rationals)

}  // namespace shiftkit
