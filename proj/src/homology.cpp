#include "shiftkit/homology.hpp"

#include <algorithm>

namespace shiftkit {

std::string Capped::text() const {
  return at_least ? "≥ " + std::to_string(value) : std::to_string(value);
}

std::string Capped::json_token() const {
  return at_least ? "geq:" + std::to_string(value) : std::to_string(value);
}

Capped capped_max(const std::vector<Capped>& xs, std::size_t cap) {
  std::size_t best = 0;
  for (const auto& x : xs) {
    if (x.at_least) return Capped::geq(cap);
    best = std::max(best, x.value);
  }
  return Capped::exact(best);
}

template <class F>
Capped Resolution<F>::length() const {
  if (capped) return Capped::geq(cap);
  return Capped::exact(terms.empty() ? 0 : terms.size() - 1);
}

namespace {

template <class F>
Resolution<F> projective_resolution(const ModulePtr<F>& m, std::size_t cap) {
  Resolution<F> r;
  r.direction = Direction::projective;
  r.module = m;
  r.cap = cap;
  if (m->dim() == 0) {
    r.augmentation = zero_morphism(m, m);
    return r;
  }
  ModulePtr<F> omega = m;
  Mat<F> prev_incl;
  for (std::size_t i = 0;; ++i) {
    auto cov = projective_cover(omega);
    const auto& p = cov.projective.module;
    r.terms.push_back(p);
    r.vertices.push_back(cov.vertices);
    if (i == 0)
      r.augmentation = cov.epi;
    else
      r.differentials.push_back({p, r.terms[i - 1], cov.epi.matrix * prev_incl});
    auto ker = kernel_of(cov.epi);
    r.syzygies.push_back(ker.module);
    r.syzygy_maps.push_back({ker.module, p, ker.inclusion});
    if (ker.module->dim() == 0) break;
    if (i == cap) {
      r.capped = true;
      break;
    }
    omega = ker.module;
    prev_incl = ker.inclusion;
  }
  return r;
}

}  // namespace

template <class F>
Resolution<F> minimal_resolution(const ModulePtr<F>& m, Direction direction, std::size_t cap) {
  if (direction == Direction::projective) return projective_resolution(m, cap);
  const auto& a = m->algebra;
  auto pr = projective_resolution(dualize(m), cap);
  Resolution<F> r;
  r.direction = Direction::injective;
  r.module = m;
  r.cap = cap;
  r.capped = pr.capped;
  r.vertices = pr.vertices;
  for (const auto& vs : pr.vertices) r.terms.push_back(cofree_module(a, vs).module);
  if (m->dim() == 0) {
    r.augmentation = zero_morphism(m, m);
    return r;
  }
  r.augmentation = {m, r.terms[0], pr.augmentation.matrix.transpose()};
  for (std::size_t i = 0; i < pr.differentials.size(); ++i)
    r.differentials.push_back({r.terms[i], r.terms[i + 1], pr.differentials[i].matrix.transpose()});
  for (std::size_t i = 0; i < pr.syzygies.size(); ++i) {
    auto cosyz = dualize(pr.syzygies[i]);
    r.syzygies.push_back(cosyz);
    r.syzygy_maps.push_back({r.terms[i], cosyz, pr.syzygy_maps[i].matrix.transpose()});
  }
  return r;
}

template <class F>
std::string check_resolution(const Resolution<F>& r) {
  if (r.terms.empty()) return r.module->dim() == 0 ? "" : "empty resolution of a nonzero module";
  const bool proj = r.direction == Direction::projective;
  if (!is_morphism(r.augmentation)) return "augmentation is not a module map";
  for (const auto& d : r.differentials)
    if (!is_morphism(d)) return "differential is not a module map";
  const std::size_t aug_rank = rank(r.augmentation.matrix);
  if (aug_rank != r.module->dim()) return proj ? "augmentation is not onto" : "coaugmentation is not injective";
  // ranks[i] = rank of the map between terms i and i+1
  std::vector<std::size_t> ranks;
  for (const auto& d : r.differentials) ranks.push_back(rank(d.matrix));
  if (!r.differentials.empty()) {
    Mat<F> c = proj ? r.differentials[0].matrix * r.augmentation.matrix : r.augmentation.matrix * r.differentials[0].matrix;
    if (!c.is_zero()) return "augmentation composite is nonzero";
  }
  for (std::size_t i = 0; i + 1 < r.differentials.size(); ++i) {
    Mat<F> c = proj ? r.differentials[i + 1].matrix * r.differentials[i].matrix
                    : r.differentials[i].matrix * r.differentials[i + 1].matrix;
    if (!c.is_zero()) return "d o d != 0 at term " + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    std::size_t before = i == 0 ? aug_rank : ranks[i - 1];
    std::size_t after = i < ranks.size() ? ranks[i] : 0;
    bool last = i + 1 == r.terms.size();
    if (last && r.capped) continue;
    if (before + after != r.terms[i]->dim()) return "not exact at term " + std::to_string(i);
  }
  if (proj) {
    for (std::size_t i = 0; i < r.differentials.size(); ++i) {
      Mat<F> rad = radical_of(r.terms[i]).inclusion;
      Mat<F> img = r.differentials[i].matrix;
      if (rank(Mat<F>::vstack(rad, img)) != rad.rows()) return "differential not radical at term " + std::to_string(i);
    }
  } else {
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      Mat<F> soc = socle_of(r.terms[i]).inclusion;
      Mat<F> incoming = i == 0 ? r.augmentation.matrix : r.differentials[i - 1].matrix;
      if (rank(Mat<F>::vstack(incoming, soc)) != rank(incoming))
        return "socle not in image at term " + std::to_string(i);
    }
  }
  return "";
}

template <class F>
std::vector<std::size_t> ext_dims(const ModulePtr<F>& m, const ModulePtr<F>& n, std::size_t max_i) {
  std::vector<std::size_t> out(max_i + 1, 0);
  if (m->dim() == 0 || n->dim() == 0) return out;
  auto r = projective_resolution(m, max_i + 1);
  std::vector<HomSpace<F>> h;
  for (std::size_t i = 0; i < r.terms.size() && i <= max_i + 1; ++i) h.push_back(hom_space(r.terms[i], n));
  std::vector<std::size_t> rk;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    Mat<F> delta(m->field(), 0, h[i + 1].dim());
    for (const auto& f : h[i].basis)
      delta = Mat<F>::vstack(delta, h[i + 1].coordinates(r.differentials[i].matrix * f));
    rk.push_back(rank(delta));
  }
  for (std::size_t i = 0; i <= max_i && i < h.size(); ++i) {
    std::size_t in = i == 0 ? 0 : rk[i - 1];
    std::size_t outr = i < rk.size() ? rk[i] : 0;
    out[i] = h[i].dim() - in - outr;
  }
  return out;
}

namespace {

template <class F>
Capped leading_projective_terms(const AlgebraPtr<F>& a, const Resolution<F>& r, std::size_t cap) {
  std::vector<int> proj(a->num_vertices(), -1);
  for (std::size_t i = 0; i < r.vertices.size(); ++i)
    for (auto v : r.vertices[i]) {
      if (proj[v] < 0) proj[v] = is_projective(injectives(a)[v]) ? 1 : 0;
      if (proj[v] == 0) return Capped::exact(i);
    }
  return Capped::geq(cap);
}

}  // namespace

template <class F>
Capped dominant_dimension(const AlgebraPtr<F>& a, std::size_t cap) {
  return leading_projective_terms(a, minimal_resolution(regular_module(a), Direction::injective, cap), cap);
}

template <class F>
HomologicalProfile profile(const AlgebraPtr<F>& a, std::size_t cap) {
  HomologicalProfile p;
  p.cap = cap;
  for (const auto& s : simples(a)) p.simple_pd.push_back(minimal_resolution(s, Direction::projective, cap).length());
  p.gldim = capped_max(p.simple_pd, cap);
  auto co = minimal_resolution(regular_module(a), Direction::injective, cap);
  p.injdim = co.length();
  p.domdim = leading_projective_terms(a, co, cap);
  auto omega = dualize(regular_module(a->opposite()));
  p.n = minimal_resolution(omega, Direction::projective, cap).length();
  return p;
}

#define SHIFTKIT_INSTANTIATE_HOMOLOGY(F)                                                          \
  template struct Resolution<F>;                                                                  \
  template Resolution<F> minimal_resolution(const ModulePtr<F>&, Direction, std::size_t);         \
  template std::string check_resolution(const Resolution<F>&);                                    \
  template std::vector<std::size_t> ext_dims(const ModulePtr<F>&, const ModulePtr<F>&, std::size_t); \
  template Capped dominant_dimension(const AlgebraPtr<F>&, std::size_t);                          \
  template HomologicalProfile profile(const AlgebraPtr<F>&, std::size_t);

SHIFTKIT_INSTANTIATE_HOMOLOGY(PrimeField)
SHIFTKIT_INSTANTIATE_HOMOLOGY(Rationals)

}  // namespace shiftkit
