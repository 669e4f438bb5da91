#include "shiftkit/poly.hpp"

#include <algorithm>
#include <type_traits>

namespace shiftkit {

template <class F>
void Poly<F>::trim() {
  while (!coeffs.empty() && field.is_zero(coeffs.back())) coeffs.pop_back();
}

template <class F>
Poly<F> Poly<F>::constant(const F& f, const typename F::Elem& c) {
  Poly p{f, {c}};
  p.trim();
  return p;
}

template <class F>
Poly<F> Poly<F>::x_minus(const F& f, const typename F::Elem& root) {
  return Poly{f, {f.neg(root), f.one()}};
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field;
  Poly<F> r{f, {}};
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = f.add(r.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
  r.trim();
  return r;
}

template <class F>
Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field;
  Poly<F> r{f, a.coeffs};
  if (r.coeffs.size() < b.coeffs.size()) r.coeffs.resize(b.coeffs.size(), f.zero());
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = f.sub(r.coeffs[i], b.coeffs[i]);
  r.trim();
  return r;
}

template <class F>
void poly_divmod(const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r) {
  const F& f = a.field;
  if (b.is_zero()) throw MathError("polynomial division by zero");
  r = a;
  q = Poly<F>{f, {}};
  if (r.degree() < b.degree()) return;
  q.coeffs.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), f.zero());
  auto lead_inv = f.inv(b.coeffs.back());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    auto c = f.mul(r.coeffs.back(), lead_inv);
    q.coeffs[shift] = c;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      r.coeffs[shift + i] = f.sub_mul(r.coeffs[shift + i], c, b.coeffs[i]);
    r.trim();
  }
  q.trim();
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& m) {
  Poly<F> q, r;
  poly_divmod(a, m, q, r);
  return r;
}

namespace {

template <class F>
Poly<F> make_monic(Poly<F> p) {
  if (p.is_zero()) return p;
  auto inv = p.field.inv(p.coeffs.back());
  for (auto& c : p.coeffs) c = p.field.mul(c, inv);
  return p;
}

}  // namespace

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

template <class F>
void poly_xgcd(const Poly<F>& a, const Poly<F>& b, Poly<F>& g, Poly<F>& s, Poly<F>& t) {
  const F& f = a.field;
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(f, f.one()), s1{f, {}};
  Poly<F> t0{f, {}}, t1 = Poly<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    Poly<F> q, r;
    poly_divmod(r0, r1, q, r);
    Poly<F> s2 = poly_sub(s0, poly_mul(q, s1));
    Poly<F> t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  auto inv = f.inv(r0.coeffs.back());
  auto scale = [&](Poly<F> p) {
    for (auto& c : p.coeffs) c = f.mul(c, inv);
    p.trim();
    return p;
  };
  g = scale(r0);
  s = scale(s0);
  t = scale(t0);
}

template <class F>
Poly<F> minimal_polynomial(const Mat<F>& m) {
  const F& f = m.field();
  const std::size_t n = m.rows();
  // Rows: flattened powers I, m, m^2, ...; stop at the first dependent power.
  Mat<F> powers(f, 0, n * n);
  Mat<F> cur = Mat<F>::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Mat<F> candidate = Mat<F>::vstack(powers, cur.flatten());
    // Solve sum_{i<k} c_i powers_i = cur.
    if (k > 0) {
      auto sol = linear_solve(powers.transpose(), cur.flatten().transpose());
      if (sol) {
        Poly<F> p{f, std::vector<typename F::Elem>(k + 1, f.zero())};
        for (std::size_t i = 0; i < k; ++i) p.coeffs[i] = f.neg((*sol)(i, 0));
        p.coeffs[k] = f.one();
        return p;
      }
    } else if (n == 0) {
      return Poly<F>::constant(f, f.one());
    }
    powers = std::move(candidate);
    cur = cur * m;
  }
  throw MathError("minimal_polynomial: no dependence found (impossible)");
}

template <class F>
Mat<F> poly_eval(const Poly<F>& p, const Mat<F>& m) {
  const F& f = m.field();
  Mat<F> r(f, m.rows(), m.cols());
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t d = 0; d < m.rows(); ++d) r(d, d) = f.add(r(d, d), p.coeffs[i]);
  }
  return r;
}

namespace {

// x^e mod m over F_p.
Poly<PrimeField> powmod_x_plus(const PrimeField& f, PrimeField::Elem shift, std::uint64_t e,
                               const Poly<PrimeField>& m) {
  Poly<PrimeField> result = Poly<PrimeField>::constant(f, f.one());
  Poly<PrimeField> base = poly_mod(Poly<PrimeField>{f, {shift, f.one()}}, m);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base), m);
    e >>= 1;
    if (e) base = poly_mod(poly_mul(base, base), m);
  }
  return result;
}

void split_linear_factors(const Poly<PrimeField>& g, std::mt19937_64& rng,
                          std::vector<PrimeField::Elem>& roots) {
  const PrimeField& f = g.field;
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    roots.push_back(f.neg(f.div(g.coeffs[0], g.coeffs[1])));
    return;
  }
  const std::uint32_t p = f.characteristic();
  if (p < 64) {
    for (std::uint32_t x = 0; x < p; ++x) {
      PrimeField::Elem v = f.zero();
      for (std::size_t i = g.coeffs.size(); i-- > 0;) v = f.add(f.mul(v, x), g.coeffs[i]);
      if (f.is_zero(v)) roots.push_back(x);
    }
    return;
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    auto a = f.random(rng);
    Poly<PrimeField> h = powmod_x_plus(f, a, (p - 1) / 2, g);
    h = poly_sub(h, Poly<PrimeField>::constant(f, f.one()));
    Poly<PrimeField> d = poly_gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      Poly<PrimeField> q, r;
      poly_divmod(g, d, q, r);
      split_linear_factors(d, rng, roots);
      split_linear_factors(q, rng, roots);
      return;
    }
  }
  throw MathError("poly_roots: equal-degree splitting did not converge");
}

std::vector<mpz_class> divisors(mpz_class n, bool& gave_up) {
  std::vector<mpz_class> primes_pows;
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> fac;
  mpz_class d = 2;
  unsigned long steps = 0;
  while (d * d <= n) {
    if (++steps > 200000) {
      gave_up = true;
      return {};
    }
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
    d += (d == 2 ? 1 : 2);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [pr, e] : fac) {
    std::size_t cur = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= pr;
      for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

std::vector<mpq_class> rational_roots(const Poly<Rationals>& f0) {
  Poly<Rationals> f = f0;
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < f.coeffs.size() && sgn(f.coeffs[low]) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<mpz_class> ints;
  mpz_class l = 1;
  for (std::size_t i = low; i < f.coeffs.size(); ++i)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.coeffs[i].get_den_mpz_t());
  for (std::size_t i = low; i < f.coeffs.size(); ++i)
    ints.push_back(f.coeffs[i].get_num() * (l / f.coeffs[i].get_den()));
  if (ints.size() <= 1) return roots;
  bool gave_up = false;
  auto num_divs = divisors(ints.front(), gave_up);
  auto den_divs = divisors(ints.back(), gave_up);
  if (gave_up) return roots;
  auto eval = [&](const mpq_class& x) {
    mpq_class v = 0;
    for (std::size_t i = ints.size(); i-- > 0;) v = v * x + mpq_class(ints[i]);
    return v;
  };
  std::vector<mpq_class> found;
  for (const auto& u : num_divs)
    for (const auto& v : den_divs)
      for (int sign : {1, -1}) {
        mpq_class c(u * sign, v);
        c.canonicalize();
        if (std::find(found.begin(), found.end(), c) != found.end()) continue;
        if (sgn(eval(c)) == 0) found.push_back(c);
      }
  std::sort(found.begin(), found.end());
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace

template <class F>
std::vector<typename F::Elem> poly_roots(const Poly<F>& f, std::mt19937_64& rng) {
  if (f.degree() <= 0) return {};
  if constexpr (std::is_same_v<F, PrimeField>) {
    const PrimeField& fld = f.field;
    Poly<PrimeField> g = f;
    const std::uint32_t p = fld.characteristic();
    if (p >= 64) {
      Poly<PrimeField> xp = powmod_x_plus(fld, fld.zero(), p, f);
      g = poly_gcd(f, poly_sub(xp, Poly<PrimeField>{fld, {fld.zero(), fld.one()}}));
    }
    std::vector<PrimeField::Elem> roots;
    split_linear_factors(g, rng, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  } else {
    (void)rng;
    return rational_roots(f);
  }
}

#define SHIFTKIT_INSTANTIATE_POLY(F)                                                             \
  template struct Poly<F>;                                                                       \
  template Poly<F> poly_mul(const Poly<F>&, const Poly<F>&);                                     \
  template Poly<F> poly_sub(const Poly<F>&, const Poly<F>&);                                     \
  template void poly_divmod(const Poly<F>&, const Poly<F>&, Poly<F>&, Poly<F>&);                 \
  template Poly<F> poly_mod(const Poly<F>&, const Poly<F>&);                                     \
  template Poly<F> poly_gcd(Poly<F>, Poly<F>);                                                   \
  template void poly_xgcd(const Poly<F>&, const Poly<F>&, Poly<F>&, Poly<F>&, Poly<F>&);         \
  template Poly<F> minimal_polynomial(const Mat<F>&);                                            \
  template std::vector<typename F::Elem> poly_roots(const Poly<F>&, std::mt19937_64&);           \
  template Mat<F> poly_eval(const Poly<F>&, const Mat<F>&);

SHIFTKIT_INSTANTIATE_POLY(PrimeField)
SHIFTKIT_INSTANTIATE_POLY(Rationals)

}  // namespace shiftkit
