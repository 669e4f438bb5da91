#include <random>

#include "doctest.h"
#include "shiftkit/matrix.hpp"
#include "shiftkit/poly.hpp"

using namespace shiftkit;

namespace {

template <class F>
Mat<F> random_mat(const F& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Mat<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (zero_bias == 0 || rng() % 3 != 0) m(i, j) = f.random(rng);
  return m;
}

/// Low-rank matrices make the kernel and solve paths nontrivial.
template <class F>
Mat<F> random_low_rank(const F& f, std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_mat(f, r, k, rng) * random_mat(f, k, c, rng);
}

template <class F>
void check_rref_shape(const Rref<F>& r) {
  const auto& m = r.mat;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (i > 0) CHECK(r.pivots[i] > r.pivots[i - 1]);
    CHECK(m.field().is_one(m(i, r.pivots[i])));
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != i) CHECK(m.field().is_zero(m(k, r.pivots[i])));
    for (std::size_t j = 0; j < r.pivots[i]; ++j) CHECK(m.field().is_zero(m(i, j)));
  }
  for (std::size_t i = r.pivots.size(); i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m.field().is_zero(m(i, j)));
}

template <class F>
void rref_properties(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6, k = rng() % 5;
    auto m = t % 2 ? random_mat(f, r, c, rng, 1) : random_low_rank(f, r, c, k, rng);
    auto e = rref(m);
    check_rref_shape(e);
    CHECK(rref(e.mat).mat == e.mat);
    auto ki = kernel_image(m);
    CHECK(ki.kernel.cols() + e.rank() == c);
    CHECK(ki.image.cols() == e.rank());
    CHECK((m * ki.kernel).is_zero());
    CHECK(rank(ki.kernel) == ki.kernel.cols());
    auto b = m * random_mat(f, c, 2, rng);
    auto x = linear_solve(m, b);
    REQUIRE(x.has_value());
    CHECK((m * *x - b).is_zero());
    CHECK(left_kernel(m).rows() + e.rank() == r);
    CHECK((left_kernel(m) * m).is_zero());
  }
}

}  // namespace

TEST_CASE("rref examples") {
  PrimeField f2(2);
  Rationals q;
  PrimeField f(101);

  auto id = rref(Mat<PrimeField>::identity(f, 3));
  CHECK(id.mat.is_identity());
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto ones = rref(Mat<PrimeField>::from_ints(f2, {{1, 1}, {1, 1}}));
  CHECK(ones.mat == Mat<PrimeField>::from_ints(f2, {{1, 1}, {0, 0}}));
  CHECK(ones.pivots == std::vector<std::size_t>{0});

  auto prop = rref(Mat<Rationals>::from_ints(q, {{2, 4}, {1, 2}}));
  CHECK(prop.mat == Mat<Rationals>::from_ints(q, {{1, 2}, {0, 0}}));
  CHECK(prop.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel and image examples") {
  Rationals q;
  auto zero = kernel_image(Mat<Rationals>(q, 2, 2));
  CHECK(zero.kernel.cols() == 2);
  CHECK(zero.image.cols() == 0);

  auto id = kernel_image(Mat<Rationals>::identity(q, 4));
  CHECK(id.kernel.cols() == 0);
  CHECK(id.image.cols() == 4);

  auto ones = kernel_image(Mat<Rationals>::from_ints(q, {{1, 1}, {1, 1}}));
  REQUIRE(ones.kernel.cols() == 1);
  CHECK(ones.kernel(0, 0) == -ones.kernel(1, 0));
  CHECK(ones.kernel(0, 0) != 0);
}

TEST_CASE("linear solve examples") {
  Rationals q;
  std::mt19937_64 rng(7);
  auto b = random_mat(q, 3, 2, rng);
  auto x = linear_solve(Mat<Rationals>::identity(q, 3), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto x2 = linear_solve(Mat<Rationals>::from_ints(q, {{1, 1}}), Mat<Rationals>::from_ints(q, {{2}}));
  REQUIRE(x2);
  CHECK(*x2 == Mat<Rationals>::from_ints(q, {{2}, {0}}));

  CHECK_FALSE(linear_solve(Mat<Rationals>::from_ints(q, {{1, 1}, {1, 1}}), Mat<Rationals>::from_ints(q, {{1}, {2}})));
}

TEST_CASE("rref, rank-nullity and solve properties over F_101") { rref_properties(PrimeField(101), 11); }
TEST_CASE("rref, rank-nullity and solve properties over F_2") { rref_properties(PrimeField(2), 12); }
TEST_CASE("rref, rank-nullity and solve properties over F_65537") { rref_properties(PrimeField(65537), 13); }
TEST_CASE("rref, rank-nullity and solve properties over a prime above 2^16") { rref_properties(PrimeField(2147483647u), 14); }
TEST_CASE("rref, rank-nullity and solve properties over Q") { rref_properties(Rationals(), 15); }

TEST_CASE("field arithmetic is canonical") {
  PrimeField f(101);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.from_string("1/2") == 51);
  CHECK(f.mul(f.inv(37), 37) == 1);
  PrimeField big(2147483647u);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
  Rationals q;
  CHECK(q.from_string("6/4") == mpq_class(3, 2));
  CHECK(q.from_string("-3") == -3);
  CHECK_THROWS_AS(PrimeField(100), std::invalid_argument);
  CHECK(FieldSpec::parse("q").kind == FieldKind::rationals);
  CHECK(FieldSpec::parse("p7").p == 7u);
  CHECK(FieldSpec::parse("p101").to_string() == "p101");
  CHECK_THROWS(FieldSpec::parse("p4"));
  CHECK_THROWS(FieldSpec::parse("r"));
}

TEST_CASE("inverse and power") {
  Rationals q;
  auto m = Mat<Rationals>::from_ints(q, {{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  CHECK_FALSE(inverse(Mat<Rationals>::from_ints(q, {{1, 2}, {2, 4}})));
  auto n = Mat<Rationals>::from_ints(q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(is_nilpotent(n));
  CHECK(power(n, 3).is_zero());
  CHECK_FALSE(power(n, 2).is_zero());
}

TEST_CASE("minimal polynomial and roots") {
  PrimeField f(101);
  std::mt19937_64 rng(3);
  auto m = Mat<PrimeField>::from_ints(f, {{2, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  auto mp = minimal_polynomial(m);
  CHECK(mp.degree() == 2);
  CHECK(poly_eval(mp, m).is_zero());
  auto roots = poly_roots(mp, rng);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<PrimeField::Elem>{2, 3});
}
