#pragma once

#include <random>
#include <vector>

#include "shiftkit/matrix.hpp"

namespace shiftkit {

/// Univariate polynomial, coefficients low degree first, no trailing zeros.
template <class F>
struct Poly {
  F field{};
  std::vector<typename F::Elem> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  void trim();

  static Poly constant(const F& f, const typename F::Elem& c);
  static Poly x_minus(const F& f, const typename F::Elem& root);
};

template <class F> Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b);
template <class F> Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b);
template <class F> void poly_divmod(const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r);
template <class F> Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& m);
/// Monic gcd.
template <class F> Poly<F> poly_gcd(Poly<F> a, Poly<F> b);
/// Bezout: returns (g, s, t) with s a + t b = g monic.
template <class F> void poly_xgcd(const Poly<F>& a, const Poly<F>& b, Poly<F>& g, Poly<F>& s, Poly<F>& t);

/// Minimal polynomial of a square matrix (monic), via dependence of successive powers.
template <class F>
Poly<F> minimal_polynomial(const Mat<F>& m);

/// Distinct roots in the base field. Over F_p by Cantor-Zassenhaus splitting of gcd(f, x^p - x);
/// over Q by the rational root test (may give up on huge coefficients and return a subset).
template <class F>
std::vector<typename F::Elem> poly_roots(const Poly<F>& f, std::mt19937_64& rng);

/// Evaluate p at a square matrix.
template <class F>
Mat<F> poly_eval(const Poly<F>& p, const Mat<F>& m);

}  // namespace shiftkit
