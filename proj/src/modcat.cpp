#include "shiftkit/modcat.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "shiftkit/poly.hpp"

namespace shiftkit {

template <class F>
std::vector<std::size_t> ModuleRep<F>::dimension_vector() const {
  std::vector<std::size_t> d(algebra->num_vertices(), 0);
  for (auto v : vertex) ++d[v];
  return d;
}

template <class F>
std::vector<std::vector<std::size_t>> ModuleRep<F>::vertex_indices() const {
  std::vector<std::vector<std::size_t>> idx(algebra->num_vertices());
  for (std::size_t i = 0; i < vertex.size(); ++i) idx[vertex[i]].push_back(i);
  return idx;
}

template <class F>
Mat<F> ModuleRep<F>::action_of(const Mat<F>& element) const {
  Mat<F> r(field(), dim(), dim());
  for (std::size_t j = 0; j < action.size(); ++j)
    if (!field().is_zero(element(0, j))) r.add_scaled(action[j], element(0, j));
  return r;
}

template <class F>
Morphism<F> Morphism<F>::compose(const Morphism& then) const {
  if (tgt->dim() != then.src->dim()) throw std::invalid_argument("compose: shape mismatch");
  return {src, then.tgt, matrix * then.matrix};
}

template <class F>
Morphism<F> identity_morphism(const ModulePtr<F>& m) {
  return {m, m, Mat<F>::identity(m->field(), m->dim())};
}

template <class F>
Morphism<F> zero_morphism(const ModulePtr<F>& m, const ModulePtr<F>& n) {
  return {m, n, Mat<F>(m->field(), m->dim(), n->dim())};
}

template <class F>
void check_module(const ModuleRep<F>& m) {
  const auto& a = *m.algebra;
  const F& f = a.field();
  if (m.action.size() != a.dim()) throw MathError("module: one action matrix per basis element required");
  for (const auto& x : m.action)
    if (x.rows() != m.dim() || x.cols() != m.dim()) throw MathError("module: action matrix has wrong shape");
  for (auto v : m.vertex)
    if (v >= a.num_vertices()) throw MathError("module: vertex label out of range");
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    Mat<F> e = m.action_of(a.idempotents()[v]);
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) {
        bool expect = i == j && m.vertex[i] == v;
        if (!f.eq(e(i, j), expect ? f.one() : f.zero()))
          throw MathError("module: idempotent action does not match vertex labels");
      }
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat<F> prod(f, m.dim(), m.dim());
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!f.is_zero(a.right_mult(j)(i, k))) prod.add_scaled(m.action[k], a.right_mult(j)(i, k));
      if (!(m.action[i] * m.action[j] == prod)) throw MathError("module: action is not multiplicative");
    }
}

template <class F>
bool is_morphism(const Morphism<F>& f) {
  const auto& m = *f.src;
  const auto& n = *f.tgt;
  if (m.algebra != n.algebra || f.matrix.rows() != m.dim() || f.matrix.cols() != n.dim()) return false;
  for (std::size_t b = 0; b < m.action.size(); ++b)
    if (!(m.action[b] * f.matrix == f.matrix * n.action[b])) return false;
  return true;
}

template <class F>
ModulePtr<F> regular_module(const AlgebraPtr<F>& a) {
  auto m = std::make_shared<ModuleRep<F>>();
  m->algebra = a;
  for (std::size_t b = 0; b < a->dim(); ++b) m->vertex.push_back(a->tgt(b));
  m->action = a->right_mult_all();
  return m;
}

template <class F>
ModulePtr<F> zero_module(const AlgebraPtr<F>& a) {
  auto m = std::make_shared<ModuleRep<F>>();
  m->algebra = a;
  m->action.assign(a->dim(), Mat<F>(a->field(), 0, 0));
  return m;
}

namespace {

template <class F>
std::pair<std::size_t, std::size_t> peirce_type(const BasedAlgebra<F>& a, const Mat<F>& g) {
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (!a.field().is_zero(g(0, b))) return {a.src(b), a.tgt(b)};
  throw MathError("zero generator (internal)");
}

/// Rows of u split by vertex and echelonized per vertex; row pivots returned alongside.
template <class F>
Mat<F> vertexwise_basis(const ModuleRep<F>& m, const Mat<F>& u) {
  const F& f = m.field();
  Mat<F> out(f, 0, m.dim());
  if (u.rows() == 0) return out;
  auto idx = m.vertex_indices();
  for (const auto& ids : idx) {
    if (ids.empty()) continue;
    Mat<F> local = row_basis(u.select_cols(ids));
    for (std::size_t r = 0; r < local.rows(); ++r) {
      Mat<F> row(f, 1, m.dim());
      for (std::size_t c = 0; c < ids.size(); ++c) row(0, ids[c]) = local(r, c);
      out = Mat<F>::vstack(out, row);
    }
  }
  return out;
}

template <class F>
Mat<F> kernel_rows_of(const ModuleRep<F>& m, const ModuleRep<F>& n, const Mat<F>& fm) {
  const F& f = m.field();
  auto im = m.vertex_indices();
  auto in = n.vertex_indices();
  Mat<F> out(f, 0, m.dim());
  for (std::size_t v = 0; v < im.size(); ++v) {
    if (im[v].empty()) continue;
    Mat<F> local = fm.select_rows(im[v]).select_cols(in[v]);
    Mat<F> lk = in[v].empty() ? Mat<F>::identity(f, im[v].size()) : left_kernel(local);
    for (std::size_t r = 0; r < lk.rows(); ++r) {
      Mat<F> row(f, 1, m.dim());
      for (std::size_t c = 0; c < im[v].size(); ++c) row(0, im[v][c]) = lk(r, c);
      out = Mat<F>::vstack(out, row);
    }
  }
  return out;
}

}  // namespace

template <class F>
Mat<F> HomSpace<F>::coordinates(const Mat<F>& f) const {
  Mat<F> c(f.field(), 1, free_positions.size());
  for (std::size_t i = 0; i < free_positions.size(); ++i) c(0, i) = f(free_positions[i].first, free_positions[i].second);
  return c;
}

template <class F>
Mat<F> HomSpace<F>::element(const Mat<F>& coords) const {
  Mat<F> out(src->field(), src->dim(), tgt->dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!src->field().is_zero(coords(0, i))) out.add_scaled(basis[i], coords(0, i));
  return out;
}

template <class F>
std::vector<Morphism<F>> HomSpace<F>::morphisms() const {
  std::vector<Morphism<F>> out;
  for (const auto& b : basis) out.push_back({src, tgt, b});
  return out;
}

template <class F>
HomSpace<F> hom_space(const ModulePtr<F>& m, const ModulePtr<F>& n) {
  if (m->algebra != n->algebra) throw std::invalid_argument("hom_space: algebra mismatch");
  const auto& a = *m->algebra;
  const F& f = a.field();
  auto im = m->vertex_indices();
  auto in = n->vertex_indices();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> unknown(m->dim() * n->dim(), none);
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < m->dim(); ++r)
    for (std::size_t s : in[m->vertex[r]]) {
      unknown[r * n->dim() + s] = positions.size();
      positions.emplace_back(r, s);
    }
  const std::size_t u = positions.size();

  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& g : a.radical_generators()) {
    auto [sa, tb] = peirce_type(a, g);
    Mat<F> am = m->action_of(g);
    Mat<F> an = n->action_of(g);
    for (std::size_t r : im[sa])
      for (std::size_t s : in[tb]) {
        std::vector<typename F::Elem> row(u, f.zero());
        bool nonzero = false;
        // (A^M X)_{rs} - (X A^N)_{rs}
        for (std::size_t t : im[tb])
          if (!f.is_zero(am(r, t))) {
            auto& e = row[unknown[t * n->dim() + s]];
            e = f.add(e, am(r, t));
            nonzero = true;
          }
        for (std::size_t t : in[sa])
          if (!f.is_zero(an(t, s))) {
            auto& e = row[unknown[r * n->dim() + t]];
            e = f.sub(e, an(t, s));
            nonzero = true;
          }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  Mat<F> eqs = Mat<F>::from_rows(f, u, rows);
  auto red = rref(eqs);
  std::vector<bool> is_pivot(u, false);
  for (auto c : red.pivots) is_pivot[c] = true;

  HomSpace<F> hs{m, n, {}, {}};
  for (std::size_t c = 0; c < u; ++c) {
    if (is_pivot[c]) continue;
    Mat<F> x(f, m->dim(), n->dim());
    x(positions[c].first, positions[c].second) = f.one();
    for (std::size_t i = 0; i < red.rank(); ++i) {
      auto val = f.neg(red.mat(i, c));
      if (!f.is_zero(val)) x(positions[red.pivots[i]].first, positions[red.pivots[i]].second) = val;
    }
    hs.basis.push_back(std::move(x));
    hs.free_positions.push_back(positions[c]);
  }
  return hs;
}

template <class F>
Submodule<F> submodule(const ModulePtr<F>& m, const Mat<F>& u) {
  const F& f = m->field();
  Mat<F> b = vertexwise_basis(*m, u);
  auto piv = pivot_columns(b);
  auto sub = std::make_shared<ModuleRep<F>>();
  sub->algebra = m->algebra;
  for (auto p : piv) sub->vertex.push_back(m->vertex[p]);
  sub->action.reserve(m->action.size());
  for (const auto& act : m->action) {
    if (b.rows() == 0) {
      sub->action.emplace_back(f, 0, 0);
      continue;
    }
    sub->action.push_back(coordinates_in(b, piv, b * act));
  }
  return {sub, b};
}

template <class F>
QuotientModule<F> quotient(const ModulePtr<F>& m, const Mat<F>& u) {
  const F& f = m->field();
  Mat<F> b = vertexwise_basis(*m, u);
  auto piv = pivot_columns(b);
  std::vector<std::size_t> row_of(m->dim(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < piv.size(); ++k) row_of[piv[k]] = k;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < m->dim(); ++i)
    if (row_of[i] == static_cast<std::size_t>(-1)) comp.push_back(i);
  Mat<F> proj(f, m->dim(), comp.size());
  for (std::size_t c = 0; c < comp.size(); ++c) proj(comp[c], c) = f.one();
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t c = 0; c < comp.size(); ++c) proj(piv[k], c) = f.neg(b(k, comp[c]));
  auto q = std::make_shared<ModuleRep<F>>();
  q->algebra = m->algebra;
  for (auto c : comp) q->vertex.push_back(m->vertex[c]);
  for (const auto& act : m->action) q->action.push_back(act.select_rows(comp) * proj);
  return {q, proj};
}

template <class F>
Submodule<F> kernel_of(const Morphism<F>& fm) {
  return submodule(fm.src, kernel_rows_of(*fm.src, *fm.tgt, fm.matrix));
}

template <class F>
Factorization<F> morphism_factor(const Morphism<F>& fm) {
  Factorization<F> out;
  out.kernel = kernel_of(fm);
  out.image = submodule(fm.tgt, fm.matrix);
  out.coimage = out.image.inclusion.rows() == 0
                    ? Mat<F>(fm.src->field(), fm.src->dim(), 0)
                    : coordinates_in(out.image.inclusion, pivot_columns(out.image.inclusion), fm.matrix);
  out.cokernel = quotient(fm.tgt, fm.matrix);
  return out;
}

template <class F>
DirectSum<F> direct_sum(const std::vector<ModulePtr<F>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
  const auto& alg = parts[0]->algebra;
  const F& f = alg->field();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p->algebra != alg) throw std::invalid_argument("direct_sum: algebra mismatch");
    total += p->dim();
  }
  auto sum = std::make_shared<ModuleRep<F>>();
  sum->algebra = alg;
  sum->action.assign(alg->dim(), Mat<F>(f, total, total));
  DirectSum<F> ds;
  std::size_t off = 0;
  for (const auto& p : parts) {
    sum->vertex.insert(sum->vertex.end(), p->vertex.begin(), p->vertex.end());
    for (std::size_t b = 0; b < alg->dim(); ++b) sum->action[b].set_block(off, off, p->action[b]);
    Mat<F> inc(f, p->dim(), total), proj(f, total, p->dim());
    for (std::size_t i = 0; i < p->dim(); ++i) {
      inc(i, off + i) = f.one();
      proj(off + i, i) = f.one();
    }
    ds.inclusions.push_back(std::move(inc));
    ds.projections.push_back(std::move(proj));
    off += p->dim();
  }
  ds.module = sum;
  return ds;
}

template <class F>
Submodule<F> radical_of(const ModulePtr<F>& m) {
  Mat<F> rows(m->field(), 0, m->dim());
  for (const auto& g : m->algebra->radical_generators()) rows = Mat<F>::vstack(rows, m->action_of(g));
  return submodule(m, rows);
}

template <class F>
Submodule<F> socle_of(const ModulePtr<F>& m) {
  const F& f = m->field();
  const auto& gens = m->algebra->radical_generators();
  if (gens.empty() || m->dim() == 0) return submodule(m, Mat<F>::identity(f, m->dim()));
  Mat<F> all(f, m->dim(), 0);
  for (const auto& g : gens) all = Mat<F>::hstack(all, m->action_of(g));
  return submodule(m, left_kernel(all));
}

template <class F>
std::vector<std::size_t> top_vector(const ModulePtr<F>& m) {
  auto d = m->dimension_vector();
  auto r = radical_of(m).module->dimension_vector();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= r[i];
  return d;
}

template <class F>
std::vector<std::size_t> socle_vector(const ModulePtr<F>& m) {
  return socle_of(m).module->dimension_vector();
}

template <class F>
const std::vector<ModulePtr<F>>& projectives(const AlgebraPtr<F>& a) {
  auto& cache = a->catalog_cache();
  std::call_once(cache.proj_once, [&] {
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      const auto& rows = a->starting_at(v);
      auto p = std::make_shared<ModuleRep<F>>();
      p->algebra = a;
      for (auto b : rows) p->vertex.push_back(a->tgt(b));
      for (std::size_t j = 0; j < a->dim(); ++j) p->action.push_back(a->right_mult(j).select_rows(rows).select_cols(rows));
      cache.projectives.push_back(p);
    }
  });
  return cache.projectives;
}

template <class F>
const std::vector<ModulePtr<F>>& simples(const AlgebraPtr<F>& a) {
  auto& cache = a->catalog_cache();
  std::call_once(cache.simple_once, [&] {
    for (const auto& p : projectives(a)) cache.simples.push_back(quotient(p, radical_of(p).inclusion).module);
  });
  return cache.simples;
}

template <class F>
const std::vector<ModulePtr<F>>& injectives(const AlgebraPtr<F>& a) {
  auto& cache = a->catalog_cache();
  std::call_once(cache.inj_once, [&] {
    for (const auto& p : projectives(a->opposite())) cache.injectives.push_back(dualize(p));
  });
  return cache.injectives;
}

template <class F>
Catalog<F> catalog(const AlgebraPtr<F>& a) {
  return {simples(a), projectives(a), injectives(a)};
}

template <class F>
DirectSum<F> free_module(const AlgebraPtr<F>& a, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return {zero_module(a), {}, {}};
  std::vector<ModulePtr<F>> parts;
  for (auto v : vertices) parts.push_back(projectives(a)[v]);
  return direct_sum(parts);
}

template <class F>
DirectSum<F> cofree_module(const AlgebraPtr<F>& a, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return {zero_module(a), {}, {}};
  std::vector<ModulePtr<F>> parts;
  for (auto v : vertices) parts.push_back(injectives(a)[v]);
  return direct_sum(parts);
}

template <class F>
Cover<F> projective_cover(const ModulePtr<F>& m) {
  const auto& a = m->algebra;
  const F& f = a->field();
  Mat<F> rad = radical_of(m).inclusion;
  auto idx = m->vertex_indices();
  std::vector<std::size_t> vertices, gens;
  for (std::size_t v = 0; v < idx.size(); ++v) {
    if (idx[v].empty()) continue;
    Mat<F> local = rad.rows() ? row_basis(rad.select_cols(idx[v])) : Mat<F>(f, 0, idx[v].size());
    auto piv = pivot_columns(local);
    std::vector<bool> is_piv(idx[v].size(), false);
    for (auto p : piv) is_piv[p] = true;
    for (std::size_t c = 0; c < idx[v].size(); ++c)
      if (!is_piv[c]) {
        vertices.push_back(v);
        gens.push_back(idx[v][c]);
      }
  }
  Cover<F> cov{free_module(a, vertices), vertices, {}};
  Mat<F> epi(f, cov.projective.module->dim(), m->dim());
  std::size_t row = 0;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (auto x : a->starting_at(vertices[g])) epi.set_block(row++, 0, m->action[x].block(gens[g], 0, 1, m->dim()));
  cov.epi = {cov.projective.module, m, std::move(epi)};
  return cov;
}

template <class F>
Envelope<F> injective_envelope(const ModulePtr<F>& m) {
  auto cov = projective_cover(dualize(m));
  Envelope<F> env{cofree_module(m->algebra, cov.vertices), cov.vertices, {}};
  env.mono = {m, env.injective.module, cov.epi.matrix.transpose()};
  return env;
}

template <class F>
ModulePtr<F> dualize(const ModulePtr<F>& m) {
  auto d = std::make_shared<ModuleRep<F>>();
  d->algebra = m->algebra->opposite();
  d->vertex = m->vertex;
  for (const auto& x : m->action) d->action.push_back(x.transpose());
  return d;
}

template <class F>
Morphism<F> dualize(const Morphism<F>& fm, const ModulePtr<F>& dual_src, const ModulePtr<F>& dual_tgt) {
  return {dual_src, dual_tgt, fm.matrix.transpose()};
}

template <class F>
EndomorphismRing<F> endomorphism_ring(const ModulePtr<F>& m) {
  EndomorphismRing<F> out{hom_space(m, m), {}, {}};
  const auto& basis = out.hom.basis;
  const std::size_t r = basis.size();
  const F& f = m->field();
  for (std::size_t j = 0; j < r; ++j) {
    Mat<F> rm(f, r, r);
    for (std::size_t x = 0; x < r; ++x) rm.set_block(x, 0, out.hom.coordinates(basis[j] * basis[x]));
    out.right_mult.push_back(std::move(rm));
  }
  out.radical = r ? matrix_algebra_radical(basis) : Mat<F>(f, 0, 0);
  if (out.radical.rows() == 0) out.radical = Mat<F>(f, 0, r);
  return out;
}

namespace {

template <class F>
Mat<F> radical_of_end(const HomSpace<F>& h) {
  Mat<F> rad = h.dim() ? matrix_algebra_radical(h.basis) : Mat<F>(h.src->field(), 0, 0);
  if (rad.rows() == 0) rad = Mat<F>(h.src->field(), 0, h.dim());
  return rad;
}

template <class F>
bool in_span(const Mat<F>& basis, const Mat<F>& v) {
  if (v.is_zero()) return true;
  if (basis.rows() == 0) return false;
  return rank(Mat<F>::vstack(basis, v)) == rank(basis);
}

/// A non-nilpotent, non-invertible endomorphism if one is found.
template <class F>
std::optional<Mat<F>> fitting_candidate(const Mat<F>& z, std::mt19937_64& rng) {
  const F& f = z.field();
  if (is_nilpotent(z)) return std::nullopt;
  Poly<F> mp = minimal_polynomial(z);
  if (!f.is_zero(mp.coeffs[0])) {
    // invertible: shift by an eigenvalue if that leaves a non-nilpotent part
    auto roots = poly_roots(mp, rng);
    for (const auto& lam : roots) {
      Mat<F> w = z - Mat<F>::identity(f, z.rows()).scaled(lam);
      if (!is_nilpotent(w)) return w;
    }
    return std::nullopt;
  }
  return z;
}

template <class F>
bool dimvec_less(const ModulePtr<F>& a, const ModulePtr<F>& b) {
  return a->dimension_vector() < b->dimension_vector();
}

}  // namespace

template <class F>
bool is_split_local(const ModulePtr<F>& m) {
  if (m->dim() == 0) return false;
  auto h = hom_space(m, m);
  return h.dim() - radical_of_end(h).rows() == 1;
}

template <class F>
DecompositionCert<F> decompose(const ModulePtr<F>& m, std::uint64_t seed) {
  const F& f = m->field();
  DecompositionCert<F> cert;
  cert.module = m;
  if (m->dim() == 0) return cert;
  std::mt19937_64 rng(seed);
  constexpr int kBudget = 64;

  struct Piece {
    ModulePtr<F> module;
    Mat<F> inclusion, projection;
  };
  std::vector<Piece> pending{{m, Mat<F>::identity(f, m->dim()), Mat<F>::identity(f, m->dim())}};
  std::vector<Piece> done;
  while (!pending.empty()) {
    Piece piece = std::move(pending.back());
    pending.pop_back();
    auto h = hom_space(piece.module, piece.module);
    if (h.dim() - radical_of_end(h).rows() == 1) {
      done.push_back(std::move(piece));
      continue;
    }
    std::optional<Mat<F>> z;
    for (std::size_t i = 0; i < h.dim() && !z; ++i) z = fitting_candidate(h.basis[i], rng);
    for (int attempt = 0; attempt < kBudget && !z; ++attempt) {
      Mat<F> c(f, 1, h.dim());
      for (std::size_t i = 0; i < h.dim(); ++i) c(0, i) = f.random(rng);
      z = fitting_candidate(h.element(c), rng);
    }
    if (!z) throw MathError("decomposition not found within retry budget");
    Mat<F> zm = power(*z, piece.module->dim());
    auto image = submodule(piece.module, row_basis(zm));
    auto kernel = submodule(piece.module, left_kernel(zm));
    Mat<F> change = Mat<F>::vstack(image.inclusion, kernel.inclusion);
    auto inv = inverse(change);
    if (!inv) throw MathError("Fitting splitting failed (internal)");
    const std::size_t k1 = image.inclusion.rows();
    const std::size_t k2 = kernel.inclusion.rows();
    Mat<F> p1 = inv->block(0, 0, inv->rows(), k1);
    Mat<F> p2 = inv->block(0, k1, inv->rows(), k2);
    pending.push_back({image.module, image.inclusion * piece.inclusion, piece.projection * p1});
    pending.push_back({kernel.module, kernel.inclusion * piece.inclusion, piece.projection * p2});
  }
  std::stable_sort(done.begin(), done.end(), [](const Piece& a, const Piece& b) {
    return dimvec_less(a.module, b.module);
  });
  for (auto& p : done) {
    cert.summands.push_back(p.module);
    cert.inclusions.push_back(std::move(p.inclusion));
    cert.projections.push_back(std::move(p.projection));
  }
  return cert;
}

namespace {

/// For split-local X and Y: an isomorphism X -> Y, decided by the composition pairing into
/// End(X) / rad End(X).
template <class F>
std::optional<Mat<F>> indecomposable_iso(const ModulePtr<F>& x, const ModulePtr<F>& y) {
  if (x->dimension_vector() != y->dimension_vector()) return std::nullopt;
  auto hxy = hom_space(x, y);
  auto hyx = hom_space(y, x);
  if (hxy.dim() == 0 || hyx.dim() == 0) return std::nullopt;
  auto hxx = hom_space(x, x);
  Mat<F> rad = radical_of_end(hxx);
  for (const auto& fxy : hxy.basis)
    for (const auto& gyx : hyx.basis)
      if (!in_span(rad, hxx.coordinates(fxy * gyx))) return fxy;
  return std::nullopt;
}

}  // namespace

template <class F>
std::optional<Mat<F>> find_isomorphism(const ModulePtr<F>& m, const ModulePtr<F>& n, std::uint64_t seed) {
  if (m->algebra != n->algebra) throw std::invalid_argument("isomorphic: algebra mismatch");
  if (m->dimension_vector() != n->dimension_vector()) return std::nullopt;
  const F& f = m->field();
  if (m->dim() == 0) return Mat<F>(f, 0, 0);
  auto hmn = hom_space(m, n);
  if (hmn.dim() != hom_space(n, m).dim() || hmn.dim() != hom_space(m, m).dim()) return std::nullopt;
  for (const auto& b : hmn.basis)
    if (inverse(b)) return b;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat<F> c(f, 1, hmn.dim());
    for (std::size_t i = 0; i < hmn.dim(); ++i) c(0, i) = f.random(rng);
    Mat<F> x = hmn.element(c);
    if (inverse(x)) return x;
  }
  // Deterministic fallback: match indecomposable summands.
  auto dm = decompose(m, seed);
  auto dn = decompose(n, seed);
  if (dm.summands.size() != dn.summands.size()) return std::nullopt;
  std::vector<bool> used(dn.summands.size(), false);
  Mat<F> iso(f, m->dim(), n->dim());
  for (std::size_t i = 0; i < dm.summands.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      auto local = indecomposable_iso(dm.summands[i], dn.summands[j]);
      if (!local) continue;
      used[j] = matched = true;
      iso = iso + dm.projections[i] * *local * dn.inclusions[j];
    }
    if (!matched) return std::nullopt;
  }
  return iso;
}

template <class F>
bool isomorphic(const ModulePtr<F>& m, const ModulePtr<F>& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

template <class F>
std::vector<ModulePtr<F>> basic_representatives(const std::vector<ModulePtr<F>>& parts, std::uint64_t seed) {
  std::vector<ModulePtr<F>> out;
  for (const auto& p : parts) {
    bool seen = false;
    for (const auto& q : out)
      if (isomorphic(p, q, seed)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

template <class F>
std::vector<std::size_t> ext1_against_simples(const ModulePtr<F>& m) {
  if (m->dim() == 0) return std::vector<std::size_t>(m->algebra->num_vertices(), 0);
  auto cov = projective_cover(m);
  return top_vector(kernel_of(cov.epi).module);
}

template <class F>
std::vector<std::size_t> ext1_from_simples(const ModulePtr<F>& m) {
  return ext1_against_simples(dualize(m));
}

template <class F>
bool is_projective(const ModulePtr<F>& m) {
  auto e = ext1_against_simples(m);
  return std::all_of(e.begin(), e.end(), [](std::size_t x) { return x == 0; });
}

template <class F>
bool is_injective(const ModulePtr<F>& m) {
  auto e = ext1_from_simples(m);
  return std::all_of(e.begin(), e.end(), [](std::size_t x) { return x == 0; });
}

#define SHIFTKIT_INSTANTIATE_MODCAT(F)                                                                    \
  template struct ModuleRep<F>;                                                                           \
  template struct Morphism<F>;                                                                            \
  template struct HomSpace<F>;                                                                            \
  template Morphism<F> identity_morphism(const ModulePtr<F>&);                                            \
  template Morphism<F> zero_morphism(const ModulePtr<F>&, const ModulePtr<F>&);                           \
  template void check_module(const ModuleRep<F>&);                                                        \
  template bool is_morphism(const Morphism<F>&);                                                          \
  template ModulePtr<F> regular_module(const AlgebraPtr<F>&);                                             \
  template ModulePtr<F> zero_module(const AlgebraPtr<F>&);                                                \
  template HomSpace<F> hom_space(const ModulePtr<F>&, const ModulePtr<F>&);                               \
  template Submodule<F> submodule(const ModulePtr<F>&, const Mat<F>&);                                    \
  template QuotientModule<F> quotient(const ModulePtr<F>&, const Mat<F>&);                                \
  template Factorization<F> morphism_factor(const Morphism<F>&);                                          \
  template Submodule<F> kernel_of(const Morphism<F>&);                                                    \
  template DirectSum<F> cofree_module(const AlgebraPtr<F>&, const std::vector<std::size_t>&);             \
  template DirectSum<F> direct_sum(const std::vector<ModulePtr<F>>&);                                     \
  template Submodule<F> radical_of(const ModulePtr<F>&);                                                  \
  template Submodule<F> socle_of(const ModulePtr<F>&);                                                    \
  template std::vector<std::size_t> top_vector(const ModulePtr<F>&);                                      \
  template std::vector<std::size_t> socle_vector(const ModulePtr<F>&);                                    \
  template const std::vector<ModulePtr<F>>& projectives(const AlgebraPtr<F>&);                            \
  template const std::vector<ModulePtr<F>>& simples(const AlgebraPtr<F>&);                                \
  template const std::vector<ModulePtr<F>>& injectives(const AlgebraPtr<F>&);                             \
  template Catalog<F> catalog(const AlgebraPtr<F>&);                                                      \
  template DirectSum<F> free_module(const AlgebraPtr<F>&, const std::vector<std::size_t>&);               \
  template Cover<F> projective_cover(const ModulePtr<F>&);                                                \
  template Envelope<F> injective_envelope(const ModulePtr<F>&);                                           \
  template ModulePtr<F> dualize(const ModulePtr<F>&);                                                     \
  template Morphism<F> dualize(const Morphism<F>&, const ModulePtr<F>&, const ModulePtr<F>&);             \
  template EndomorphismRing<F> endomorphism_ring(const ModulePtr<F>&);                                    \
  template DecompositionCert<F> decompose(const ModulePtr<F>&, std::uint64_t);                            \
  template bool is_split_local(const ModulePtr<F>&);                                                      \
  template bool isomorphic(const ModulePtr<F>&, const ModulePtr<F>&, std::uint64_t);                      \
  template std::optional<Mat<F>> find_isomorphism(const ModulePtr<F>&, const ModulePtr<F>&, std::uint64_t); \
  template std::vector<ModulePtr<F>> basic_representatives(const std::vector<ModulePtr<F>>&, std::uint64_t); \
  template std::vector<std::size_t> ext1_against_simples(const ModulePtr<F>&);                            \
  template std::vector<std::size_t> ext1_from_simples(const ModulePtr<F>&);                               \
  template bool is_projective(const ModulePtr<F>&);                                                       \
  template bool is_injective(const ModulePtr<F>&);

SHIFTKIT_INSTANTIATE_MODCAT(PrimeField)
SHIFTKIT_INSTANTIATE_MODCAT(Rationals)

}  // namespace shiftkit
