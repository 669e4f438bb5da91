#include "shiftkit/algebra.hpp"

#include <algorithm>
#include <random>
#include <type_traits>

#include "shiftkit/poly.hpp"

namespace shiftkit {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::quiver_built: return "quiver-built";
    case Provenance::endomorphism_built: return "endomorphism-built";
    case Provenance::opposite: return "opposite";
    case Provenance::rebased: return "rebased";
  }
  return "unknown";
}

template <class F>
BasedAlgebra<F>::BasedAlgebra(Init init)
    : field_(init.field),
      right_mult_(std::move(init.right_mult)),
      idempotents_(std::move(init.idempotents)),
      src_(std::move(init.src)),
      tgt_(std::move(init.tgt)),
      provenance_(init.provenance),
      labels_(std::move(init.labels)) {
  const std::size_t n = right_mult_.size();
  for (const auto& r : right_mult_)
    if (r.rows() != n || r.cols() != n) throw std::invalid_argument("structure constants must be dim x dim");
  if (src_.size() != n || tgt_.size() != n) throw std::invalid_argument("src/tgt labels must cover the basis");
  const std::size_t v = idempotents_.size();
  if (v == 0 && n > 0) throw std::invalid_argument("algebra needs at least one idempotent");
  starting_at_.assign(v, {});
  ending_at_.assign(v, {});
  for (std::size_t b = 0; b < n; ++b) {
    if (src_[b] >= v || tgt_[b] >= v) throw std::invalid_argument("basis element labelled with unknown vertex");
    starting_at_[src_[b]].push_back(b);
    ending_at_[tgt_[b]].push_back(b);
  }
  unit_ = Mat<F>(field_, 1, n);
  for (std::size_t i = 0; i < v; ++i) {
    const auto& e = idempotents_[i];
    if (e.rows() != 1 || e.cols() != n) throw std::invalid_argument("idempotent must be a 1 x dim row");
    for (std::size_t b = 0; b < n; ++b)
      if (!field_.is_zero(e(0, b)) && (src_[b] != i || tgt_[b] != i))
        throw std::invalid_argument("idempotent " + std::to_string(i) + " is not in its own corner");
    unit_ = unit_ + e;
  }
  if (labels_.empty())
    for (std::size_t b = 0; b < n; ++b) labels_.push_back("b" + std::to_string(b));
  if (labels_.size() != n) throw std::invalid_argument("label count must equal dim");
  if (!init.radical_generators.empty()) {
    radical_generators_ = std::move(init.radical_generators);
    generators_given_ = true;
  }
}

template <class F>
typename BasedAlgebra<F>::Ptr BasedAlgebra<F>::create(Init init) {
  return std::make_shared<const BasedAlgebra<F>>(std::move(init));
}

template <class F>
Mat<F> BasedAlgebra<F>::right_mult_of(const Mat<F>& y) const {
  Mat<F> r(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!field_.is_zero(y(0, j))) r.add_scaled(right_mult_[j], y(0, j));
  return r;
}

template <class F>
Mat<F> BasedAlgebra<F>::product(const Mat<F>& x, const Mat<F>& y) const {
  Mat<F> out(field_, x.rows(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!field_.is_zero(y(0, j))) out.add_scaled(x * right_mult_[j], y(0, j));
  return out;
}

template <class F>
Mat<F> BasedAlgebra<F>::basis_vector(std::size_t i) const {
  Mat<F> e(field_, 1, dim());
  e(0, i) = field_.one();
  return e;
}

template <class F>
void BasedAlgebra<F>::check_axioms() const {
  const std::size_t n = dim();
  if (!right_mult_of(unit_).is_identity()) throw MathError("unit is not a right identity");
  for (std::size_t j = 0; j < n; ++j)
    if (!(unit_ * right_mult_[j] == basis_vector(j))) throw MathError("unit is not a left identity");
  for (std::size_t i = 0; i < num_vertices(); ++i)
    for (std::size_t j = 0; j < num_vertices(); ++j) {
      auto p = product(idempotents_[i], idempotents_[j]);
      if (i == j ? !(p == idempotents_[i]) : !p.is_zero())
        throw MathError("idempotents are not orthogonal idempotents");
    }
  // (b_i b_j) b_k = b_i (b_j b_k) for all i at once: R_j R_k = sum_l c_jk^l R_l
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Mat<F> lhs = right_mult_[j] * right_mult_[k];
      Mat<F> rhs(field_, n, n);
      for (std::size_t l = 0; l < n; ++l)
        if (!field_.is_zero(right_mult_[k](j, l))) rhs.add_scaled(right_mult_[l], right_mult_[k](j, l));
      if (!(lhs == rhs))
        throw MathError("multiplication is not associative at basis pair (" + labels_[j] + ", " + labels_[k] + ")");
    }
}

template <class F>
const RadicalData<F>& BasedAlgebra<F>::radical() const {
  std::call_once(radical_once_, [&] { radical_ = radical_series(*this); });
  return radical_;
}

template <class F>
const std::vector<Mat<F>>& BasedAlgebra<F>::radical_generators() const {
  std::call_once(generators_once_, [&] {
    if (generators_given_) return;
    const auto& rad = radical();
    const std::size_t n = dim();
    Mat<F> current = rad.powers.size() >= 2 ? rad.powers[1] : Mat<F>(field_, 0, n);
    std::size_t current_rank = current.rows();
    for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
      for (std::size_t s = 0; s < num_vertices(); ++s)
        for (std::size_t t = 0; t < num_vertices(); ++t) {
          Mat<F> piece(field_, 1, n);
          bool nonzero = false;
          for (std::size_t b = 0; b < n; ++b)
            if (src_[b] == s && tgt_[b] == t && !field_.is_zero(rad.basis(r, b))) {
              piece(0, b) = rad.basis(r, b);
              nonzero = true;
            }
          if (!nonzero) continue;
          Mat<F> trial = row_basis(Mat<F>::vstack(current, piece));
          if (trial.rows() > current_rank) {
            current = std::move(trial);
            current_rank = current.rows();
            radical_generators_.push_back(piece);
          }
        }
    }
  });
  return radical_generators_;
}

template <class F>
bool BasedAlgebra<F>::is_basic() const {
  return dim() - radical().basis.rows() == num_vertices();
}

template <class F>
typename BasedAlgebra<F>::Ptr BasedAlgebra<F>::opposite() const {
  if (auto back = opposite_of_.lock()) return back;
  std::call_once(opposite_once_, [&] {
    const std::size_t n = dim();
    Init init{field_, {}, idempotents_, tgt_, src_, Provenance::opposite, labels_, {}};
    init.right_mult.assign(n, Mat<F>(field_, n, n));
    // c'_{ij}^k = c_{ji}^k: row i of R'_j is row j of R_i
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) init.right_mult[j](i, k) = right_mult_[i](j, k);
    if (generators_given_) init.radical_generators = radical_generators_;
    auto op = std::make_shared<BasedAlgebra<F>>(std::move(init));
    op->opposite_of_ = this->shared_from_this();
    opposite_ = std::move(op);
  });
  return opposite_;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

using IntMat = std::vector<std::uint64_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t m, std::uint64_t q) {
  IntMat c(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      std::uint64_t x = a[i * m + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i * m + j] = (c[i * m + j] + mulmod(x, b[k * m + j], q)) % q;
    }
  return c;
}

IntMat int_pow(IntMat base, std::uint64_t e, std::size_t m, std::uint64_t q) {
  IntMat r(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) r[i * m + i] = 1 % q;
  while (e > 0) {
    if (e & 1) r = int_mul(r, base, m, q);
    e >>= 1;
    if (e) base = int_mul(base, base, m, q);
  }
  return r;
}

template <class F>
typename F::Elem trace_of_product(const Mat<F>& x, const Mat<F>& y) {
  const F& f = x.field();
  auto t = f.zero();
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b)
      if (!f.is_zero(x(a, b))) t = f.add(t, f.mul(x(a, b), y(b, a)));
  return t;
}

}  // namespace

template <class F>
Mat<F> matrix_algebra_radical(const std::vector<Mat<F>>& basis) {
  if (basis.empty()) return Mat<F>();
  const F& f = basis[0].field();
  const std::size_t r = basis.size();
  const std::size_t m = basis[0].rows();
  const std::uint64_t p = f.characteristic();

  if (p == 0 || p > m) {
    Mat<F> gram(f, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) gram(i, j) = gram(j, i) = trace_of_product(basis[i], basis[j]);
    return row_basis(left_kernel(gram));
  }

  if constexpr (std::is_same_v<F, PrimeField>) {
    std::size_t l = 0;
    for (std::uint64_t pw = p; pw <= m; pw *= p) ++l;
    Mat<F> current = Mat<F>::identity(f, r);
    std::uint64_t pi = 1;  // p^i
    for (std::size_t i = 0; i <= l && current.rows() > 0; ++i, pi *= p) {
      const std::uint64_t q = pi * p;
      Mat<F> g(f, current.rows(), r);
      std::vector<IntMat> lifted_basis(r, IntMat(m * m));
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t e = 0; e < m * m; ++e) lifted_basis[j][e] = basis[j](e / m, e % m);
      for (std::size_t u = 0; u < current.rows(); ++u) {
        Mat<F> x(f, m, m);
        for (std::size_t k = 0; k < r; ++k)
          if (current(u, k) != 0) x.add_scaled(basis[k], current(u, k));
        if (i == 0) {
          for (std::size_t j = 0; j < r; ++j) g(u, j) = trace_of_product(x, basis[j]);
          continue;
        }
        IntMat xl(m * m);
        for (std::size_t e = 0; e < m * m; ++e) xl[e] = x(e / m, e % m);
        for (std::size_t j = 0; j < r; ++j) {
          IntMat z = int_pow(int_mul(xl, lifted_basis[j], m, q), pi, m, q);
          std::uint64_t tr = 0;
          for (std::size_t a = 0; a < m; ++a) tr = (tr + z[a * m + a]) % q;
          if (tr % pi != 0) throw MathError("trace criterion: non-divisible trace (internal)");
          g(u, j) = static_cast<typename F::Elem>((tr / pi) % p);
        }
      }
      Mat<F> c = left_kernel(g);
      current = row_basis(c * current);
    }
    return current;
  } else {
    throw MathError("positive characteristic radical requested over Q");
  }
}

template <class F>
RadicalData<F> radical_series(const BasedAlgebra<F>& a) {
  RadicalData<F> out;
  const F& f = a.field();
  out.basis = matrix_algebra_radical(a.right_mult_all());
  if (out.basis.rows() == 0) out.basis = Mat<F>(f, 0, a.dim());
  std::vector<Mat<F>> rj;
  for (std::size_t i = 0; i < out.basis.rows(); ++i)
    rj.push_back(a.right_mult_of(out.basis.block(i, 0, 1, a.dim())));
  Mat<F> power = out.basis;
  out.powers.push_back(power);
  std::size_t guard = 0;
  while (power.rows() > 0) {
    if (++guard > a.dim() + 1) throw MathError("radical is not nilpotent (internal)");
    Mat<F> next(f, 0, a.dim());
    for (const auto& r : rj) next = Mat<F>::vstack(next, power * r);
    power = row_basis(next);
    if (power.rows() == 0) power = Mat<F>(f, 0, a.dim());
    out.powers.push_back(power);
  }
  out.loewy_length = out.powers.size();
  return out;
}

namespace {

/// The semisimple quotient B = A/J with basis given by the non-pivot coordinates of J.
template <class F>
struct Quotient {
  const BasedAlgebra<F>* alg;
  Mat<F> j_basis;
  std::vector<std::size_t> j_pivots;
  std::vector<std::size_t> complement;
  std::vector<Mat<F>> right_mult;  // s x s
  Mat<F> unit;

  Mat<F> project(Mat<F> v) const {
    const F& f = alg->field();
    for (std::size_t k = 0; k < j_pivots.size(); ++k) {
      auto c = v(0, j_pivots[k]);
      if (!f.is_zero(c)) v.add_scaled(j_basis.block(k, 0, 1, j_basis.cols()), f.neg(c));
    }
    Mat<F> out(f, 1, complement.size());
    for (std::size_t i = 0; i < complement.size(); ++i) out(0, i) = v(0, complement[i]);
    return out;
  }
  Mat<F> embed(const Mat<F>& b) const {
    Mat<F> out(alg->field(), 1, alg->dim());
    for (std::size_t i = 0; i < complement.size(); ++i) out(0, complement[i]) = b(0, i);
    return out;
  }
  Mat<F> mult_of(const Mat<F>& y) const {
    Mat<F> r(alg->field(), complement.size(), complement.size());
    for (std::size_t j = 0; j < complement.size(); ++j)
      if (!alg->field().is_zero(y(0, j))) r.add_scaled(right_mult[j], y(0, j));
    return r;
  }
  Mat<F> mul(const Mat<F>& x, const Mat<F>& y) const { return x * mult_of(y); }
};

template <class F>
Quotient<F> semisimple_quotient(const BasedAlgebra<F>& a) {
  Quotient<F> q{&a, a.radical().basis, {}, {}, {}, {}};
  q.j_pivots = pivot_columns(q.j_basis);
  std::vector<bool> piv(a.dim(), false);
  for (auto c : q.j_pivots) piv[c] = true;
  for (std::size_t c = 0; c < a.dim(); ++c)
    if (!piv[c]) q.complement.push_back(c);
  const std::size_t s = q.complement.size();
  for (std::size_t j = 0; j < s; ++j) {
    Mat<F> m(a.field(), s, s);
    for (std::size_t i = 0; i < s; ++i) {
      Mat<F> row = a.right_mult(q.complement[j]).block(q.complement[i], 0, 1, a.dim());
      m.set_block(i, 0, q.project(row));
    }
    q.right_mult.push_back(std::move(m));
  }
  q.unit = q.project(a.unit());
  return q;
}

/// Minimal polynomial of z inside the corner algebra with identity eps.
template <class F>
Poly<F> relative_minpoly(const Quotient<F>& q, const Mat<F>& eps, const Mat<F>& z) {
  const F& f = eps.field();
  Mat<F> rz = q.mult_of(z);
  Mat<F> powers = eps;
  Mat<F> cur = eps;
  for (std::size_t k = 1;; ++k) {
    cur = cur * rz;
    auto sol = linear_solve(powers.transpose(), cur.transpose());
    if (sol) {
      Poly<F> mp{f, std::vector<typename F::Elem>(k + 1, f.zero())};
      for (std::size_t i = 0; i < k; ++i) mp.coeffs[i] = f.neg((*sol)(i, 0));
      mp.coeffs[k] = f.one();
      return mp;
    }
    powers = Mat<F>::vstack(powers, cur);
  }
}

template <class F>
Mat<F> relative_eval(const Quotient<F>& q, const Poly<F>& p, const Mat<F>& eps, const Mat<F>& z) {
  Mat<F> rz = q.mult_of(z);
  Mat<F> acc(eps.field(), 1, eps.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * rz;
    acc.add_scaled(eps, p.coeffs[static_cast<std::size_t>(i)]);
  }
  return acc;
}

template <class F>
Mat<F> corner_basis(const Quotient<F>& q, const Mat<F>& eps) {
  const std::size_t s = q.complement.size();
  Mat<F> re = q.mult_of(eps);
  Mat<F> rows(eps.field(), 0, s);
  for (std::size_t i = 0; i < s; ++i) rows = Mat<F>::vstack(rows, (eps * q.right_mult[i]) * re);
  return row_basis(rows);
}

/// Try to split eps with z; returns the idempotent e (0 != e != eps) or nothing.
template <class F>
std::optional<Mat<F>> split_with(const Quotient<F>& q, const Mat<F>& eps, const Mat<F>& z, std::mt19937_64& rng,
                                 bool& saw_irreducible, std::size_t corner_dim) {
  const F& f = eps.field();
  Poly<F> mp = relative_minpoly(q, eps, z);
  if (mp.degree() <= 1) return std::nullopt;
  auto roots = poly_roots(mp, rng);
  if (roots.empty()) {
    if (static_cast<std::size_t>(mp.degree()) == corner_dim) saw_irreducible = true;
    return std::nullopt;
  }
  Poly<F> g = Poly<F>::constant(f, f.one());
  Poly<F> h = mp;
  Poly<F> lin = Poly<F>::x_minus(f, roots[0]);
  for (;;) {
    Poly<F> quo, rem;
    poly_divmod(h, lin, quo, rem);
    if (!rem.is_zero()) break;
    h = quo;
    g = poly_mul(g, lin);
  }
  if (h.degree() < 1) return std::nullopt;
  Poly<F> d, s, t;
  poly_xgcd(g, h, d, s, t);
  Mat<F> e = relative_eval(q, poly_mul(t, h), eps, z);
  if (e.is_zero() || e == eps) return std::nullopt;
  return e;
}

template <class F>
bool lex_greater(const Mat<F>& a, const Mat<F>& b) {
  const F& f = a.field();
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (f.eq(a(0, i), b(0, i))) continue;
    return f.less(b(0, i), a(0, i));
  }
  return false;
}

}  // namespace

template <class F>
std::vector<Mat<F>> primitive_idempotents(const BasedAlgebra<F>& a, std::uint64_t seed) {
  const F& f = a.field();
  if (a.dim() == 0) return {};
  Quotient<F> q = semisimple_quotient(a);
  std::mt19937_64 rng(seed);
  constexpr int kBudget = 64;

  std::vector<Mat<F>> pending{q.unit}, primitive;
  while (!pending.empty()) {
    Mat<F> eps = pending.back();
    pending.pop_back();
    Mat<F> corner = corner_basis(q, eps);
    if (corner.rows() <= 1) {
      primitive.push_back(eps);
      continue;
    }
    bool saw_irreducible = false;
    std::optional<Mat<F>> e;
    for (std::size_t i = 0; i < corner.rows() && !e; ++i)
      e = split_with(q, eps, corner.block(i, 0, 1, corner.cols()), rng, saw_irreducible, corner.rows());
    for (int attempt = 0; attempt < kBudget && !e; ++attempt) {
      Mat<F> z(f, 1, corner.cols());
      for (std::size_t i = 0; i < corner.rows(); ++i)
        z.add_scaled(corner.block(i, 0, 1, corner.cols()), f.random(rng));
      e = split_with(q, eps, z, rng, saw_irreducible, corner.rows());
    }
    if (!e) {
      if (saw_irreducible) throw MathError("non-split simple quotient component");
      throw MathError("lifting failed at seed " + std::to_string(seed));
    }
    pending.push_back(*e);
    pending.push_back(eps - *e);
  }
  std::sort(primitive.begin(), primitive.end(), [](const Mat<F>& x, const Mat<F>& y) { return lex_greater(x, y); });

  std::vector<Mat<F>> lifted;
  Mat<F> rest = a.unit();
  for (std::size_t i = 0; i < primitive.size(); ++i) {
    if (i + 1 == primitive.size()) {
      lifted.push_back(rest);
      break;
    }
    Mat<F> x = a.product(a.product(rest, q.embed(primitive[i])), rest);
    bool done = false;
    for (int it = 0; it < 64; ++it) {
      Mat<F> x2 = a.product(x, x);
      if (x2 == x) {
        done = true;
        break;
      }
      x = x2.scaled(f.from_int(3)) - a.product(x2, x).scaled(f.from_int(2));
    }
    if (!done) throw MathError("lifting failed at seed " + std::to_string(seed));
    lifted.push_back(x);
    rest = rest - x;
  }
  return lifted;
}

template <class F>
std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra<F>& a) {
  std::vector<std::vector<std::size_t>> c(a.num_vertices(), std::vector<std::size_t>(a.num_vertices(), 0));
  for (std::size_t b = 0; b < a.dim(); ++b) ++c[a.src(b)][a.tgt(b)];
  return c;
}

template <class F>
std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra<F>& a, const std::vector<Mat<F>>& idempotents) {
  const std::size_t v = idempotents.size();
  std::vector<std::vector<std::size_t>> c(v, std::vector<std::size_t>(v, 0));
  for (std::size_t i = 0; i < v; ++i) {
    Mat<F> left(a.field(), a.dim(), a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) left.set_block(k, 0, idempotents[i] * a.right_mult(k));
    for (std::size_t j = 0; j < v; ++j) c[i][j] = rank(left * a.right_mult_of(idempotents[j]));
  }
  return c;
}

template <class F>
AlgebraPtr<F> rebase_on_idempotents(const BasedAlgebra<F>& a, const std::vector<Mat<F>>& idempotents) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t v = idempotents.size();
  typename BasedAlgebra<F>::Init init{f, {}, {}, {}, {}, Provenance::rebased, {}, {}};
  Mat<F> p(f, 0, n);
  for (std::size_t i = 0; i < v; ++i) {
    Mat<F> left(f, n, n);
    for (std::size_t k = 0; k < n; ++k) left.set_block(k, 0, idempotents[i] * a.right_mult(k));
    for (std::size_t j = 0; j < v; ++j) {
      Mat<F> corner = row_basis(left * a.right_mult_of(idempotents[j]));
      for (std::size_t r = 0; r < corner.rows(); ++r) {
        init.src.push_back(i);
        init.tgt.push_back(j);
      }
      p = Mat<F>::vstack(p, corner);
    }
  }
  auto pinv = inverse(p);
  if (p.rows() != n || !pinv) throw MathError("idempotents do not give a Peirce decomposition");
  for (std::size_t j = 0; j < n; ++j) init.right_mult.push_back(p * a.right_mult_of(p.block(j, 0, 1, n)) * *pinv);
  for (const auto& e : idempotents) init.idempotents.push_back(e * *pinv);
  return BasedAlgebra<F>::create(std::move(init));
}

template <class F>
bool same_algebra(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b) {
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices() || !(a.field() == b.field())) return false;
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (!(a.right_mult(j) == b.right_mult(j)) || a.src(j) != b.src(j) || a.tgt(j) != b.tgt(j)) return false;
  for (std::size_t i = 0; i < a.num_vertices(); ++i)
    if (!(a.idempotents()[i] == b.idempotents()[i])) return false;
  return true;
}

#define SHIFTKIT_INSTANTIATE_ALGEBRA(F)                                                                     \
  template class BasedAlgebra<F>;                                                                           \
  template Mat<F> matrix_algebra_radical(const std::vector<Mat<F>>&);                                       \
  template RadicalData<F> radical_series(const BasedAlgebra<F>&);                                           \
  template std::vector<Mat<F>> primitive_idempotents(const BasedAlgebra<F>&, std::uint64_t);                \
  template std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra<F>&);                     \
  template std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra<F>&,                      \
                                                               const std::vector<Mat<F>>&);                 \
  template AlgebraPtr<F> rebase_on_idempotents(const BasedAlgebra<F>&, const std::vector<Mat<F>>&);          \
  template bool same_algebra(const BasedAlgebra<F>&, const BasedAlgebra<F>&);

SHIFTKIT_INSTANTIATE_ALGEBRA(PrimeField)
SHIFTKIT_INSTANTIATE_ALGEBRA(Rationals)

}  // namespace shiftkit
