#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "posgen/liegroup.hpp"

using posgen::Error;
using posgen::MultiIndex;
using posgen::Polynomial;
using posgen::Rational;
using posgen::RationalMatrix;
using posgen::TruncatedSeries;
namespace lg = posgen::liegroup;

namespace {

TruncatedSeries cubic_series(const Rational& a1, const Rational& a2,
                             const Rational& a3) {
  TruncatedSeries s(1, 3);
  s.set({0}, 1).set({1}, a1).set({2}, a2).set({3}, a3);
  return s;
}

}  // namespace

TEST_CASE("product reproduces the univariate degree-3 closed form") {
  testutil::Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    const Rational a1 = testutil::rand_rational(rng, 30, 30);
    const Rational a2 = testutil::rand_rational(rng, 30, 30);
    const Rational a3 = testutil::rand_rational(rng, 30, 30);
    const Rational b1 = testutil::rand_rational(rng, 30, 30);
    const Rational b2 = testutil::rand_rational(rng, 30, 30);
    const Rational b3 = testutil::rand_rational(rng, 30, 30);
    const TruncatedSeries ab =
        lg::mul(cubic_series(a1, a2, a3), cubic_series(b1, b2, b3));
    REQUIRE(ab.coeff({0}) == 1);
    REQUIRE(ab.coeff({1}) == a1 + b1);
    REQUIRE(ab.coeff({2}) == a2 + a1 * b1 + b2);
    REQUIRE(ab.coeff({3}) == a3 + a2 * b1 + a1 * b2 + b3);
  }
}

TEST_CASE("product basics: squares, unit, truncation intersection") {
  TruncatedSeries a(1, 3);
  a.set({0}, 1).set({1}, 1);  // 1 + D
  TruncatedSeries sq(1, 3);
  sq.set({0}, 1).set({1}, 2).set({2}, 1);
  REQUIRE(lg::mul(a, a) == sq);

  testutil::Rng rng(5);
  const TruncatedSeries r = testutil::rand_group_element(rng, 2, 4, 10, 20, 20);
  REQUIRE(lg::mul(r, lg::one(2, 4)) == r);

  const TruncatedSeries wide = testutil::rand_group_element(rng, 2, 6, 10, 20, 20);
  const TruncatedSeries narrow = testutil::rand_group_element(rng, 2, 3, 10, 20, 20);
  REQUIRE(lg::mul(wide, narrow).d() == 3);

  TruncatedSeries other_n(3, 3);
  REQUIRE_THROWS_AS(lg::mul(a, other_n), Error);
}

TEST_CASE("product is commutative and associative") {
  testutil::Rng rng(211);
  for (int i = 0; i < 60; ++i) {
    const int n = testutil::rand_int(rng, 1, 3);
    const int d = testutil::rand_int(rng, 1, 6);
    const auto A = testutil::rand_group_element(rng, n, d, 8, 20, 20);
    const auto B = testutil::rand_group_element(rng, n, d, 8, 20, 20);
    const auto C = testutil::rand_group_element(rng, n, d, 8, 20, 20);
    REQUIRE(lg::mul(A, B) == lg::mul(B, A));
    REQUIRE(lg::mul(lg::mul(A, B), C) == lg::mul(A, lg::mul(B, C)));
  }
}

TEST_CASE("inverse matches the degree-3 closed form and the group law") {
  testutil::Rng rng(307);
  for (int i = 0; i < 100; ++i) {
    const Rational a1 = testutil::rand_rational(rng, 30, 30);
    const Rational a2 = testutil::rand_rational(rng, 30, 30);
    const Rational a3 = testutil::rand_rational(rng, 30, 30);
    const TruncatedSeries inv = lg::inverse(cubic_series(a1, a2, a3));
    REQUIRE(inv.coeff({0}) == 1);
    REQUIRE(inv.coeff({1}) == -a1);
    REQUIRE(inv.coeff({2}) == a1 * a1 - a2);
    REQUIRE(inv.coeff({3}) == -a3 + 2 * a1 * a2 - a1 * a1 * a1);
  }

  REQUIRE(lg::inverse(lg::one(2, 4)) == lg::one(2, 4));
  REQUIRE(lg::inverse(cubic_series(1, 1, 1)) == cubic_series(-1, 0, 0));

  for (int i = 0; i < 60; ++i) {
    const int n = testutil::rand_int(rng, 1, 3);
    const int d = testutil::rand_int(rng, 1, 6);
    const auto A = testutil::rand_group_element(rng, n, d, 8, 20, 20);
    REQUIRE(lg::mul(A, lg::inverse(A)) == lg::one(n, d));
  }

  TruncatedSeries not_group(1, 2);
  not_group.set({1}, 1);
  REQUIRE_THROWS_AS(lg::inverse(not_group), Error);
}

TEST_CASE("exp matches the quadratic and cubic generator fixtures") {
  REQUIRE(lg::exp(TruncatedSeries(2, 3)) == lg::one(2, 3));

  const Rational t(3, 7);
  TruncatedSeries heat_gen(1, 4);
  heat_gen.set({2}, t);
  TruncatedSeries heat(1, 4);
  heat.set({0}, 1).set({2}, t).set({4}, t * t / 2);
  REQUIRE(lg::exp(heat_gen) == heat);

  TruncatedSeries d3(1, 6);
  d3.set({3}, 1);
  TruncatedSeries expd3(1, 6);
  expd3.set({0}, 1).set({3}, 1).set({6}, Rational(1, 2));
  REQUIRE(lg::exp(d3) == expd3);

  REQUIRE_THROWS_AS(lg::exp(lg::one(1, 2)), Error);
}

TEST_CASE("log inverts exp exactly, both directions") {
  REQUIRE(lg::log(lg::one(2, 3)) == TruncatedSeries(2, 3));

  const Rational t(-5, 3);
  TruncatedSeries heat(1, 4);
  heat.set({0}, 1).set({2}, t).set({4}, t * t / 2);
  TruncatedSeries heat_gen(1, 4);
  heat_gen.set({2}, t);
  REQUIRE(lg::log(heat) == heat_gen);

  testutil::Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    const int n = testutil::rand_int(rng, 1, 3);
    const int d = testutil::rand_int(rng, 1, 6);
    const auto A = testutil::rand_algebra_element(rng, n, d, 8, 10, 10);
    REQUIRE(lg::log(lg::exp(A)) == A);
    const auto T = testutil::rand_group_element(rng, n, d, 8, 10, 10);
    REQUIRE(lg::exp(lg::log(T)) == T);
  }

  TruncatedSeries not_group(1, 2);
  not_group.set({1}, 1);
  REQUIRE_THROWS_AS(lg::log(not_group), Error);
}

TEST_CASE("exp is a homomorphism from + to * on the commutative algebra") {
  testutil::Rng rng(505);
  for (int i = 0; i < 60; ++i) {
    const int n = testutil::rand_int(rng, 1, 2);
    const int d = testutil::rand_int(rng, 1, 6);
    const auto A = testutil::rand_algebra_element(rng, n, d, 6, 10, 10);
    const auto B = testutil::rand_algebra_element(rng, n, d, 6, 10, 10);
    REQUIRE(lg::exp(A + B) == lg::mul(lg::exp(A), lg::exp(B)));
  }
}

TEST_CASE("algebra elements are nilpotent at the truncation order") {
  testutil::Rng rng(606);
  for (int i = 0; i < 40; ++i) {
    const int n = testutil::rand_int(rng, 1, 3);
    const int d = testutil::rand_int(rng, 1, 5);
    const auto A = testutil::rand_algebra_element(rng, n, d, 8, 20, 20);
    REQUIRE(lg::power(A, d + 1).is_zero());
  }
}

TEST_CASE("dilate scales coefficients by the codegree power") {
  testutil::Rng rng(707);
  const auto A = testutil::rand_algebra_element(rng, 1, 4, 6, 12, 12);
  REQUIRE(lg::dilate(A, 1, 4) == A);

  TruncatedSeries mixed(1, 3);
  mixed.set({2}, 5).set({3}, 7);
  const TruncatedSeries at_zero = lg::dilate(mixed, 0, 3);
  TruncatedSeries top_only(1, 3);
  top_only.set({3}, 7);
  REQUIRE(at_zero == top_only);

  REQUIRE_THROWS_AS(lg::dilate(mixed, 2, 2), Error);   // k below top degree
  REQUIRE_THROWS_AS(lg::dilate(mixed, -1, 3), Error);  // negative lambda
}

TEST_CASE("dilate agrees with the substitution conjugation oracle") {
  testutil::Rng rng(808);
  for (int i = 0; i < 60; ++i) {
    const int d = testutil::rand_int(rng, 1, 5);
    const auto A = testutil::rand_algebra_element(rng, 1, d, 5, 10, 10);
    const int k = std::max(A.top_degree(), 0) + testutil::rand_int(rng, 0, 2);
    const Rational lambda(testutil::rand_int(rng, 1, 9),
                          testutil::rand_int(rng, 1, 9));
    const Polynomial p = testutil::rand_poly(rng, 1, d, 5, 10, 10);

    const Polynomial direct = lg::apply(lg::dilate(A, lambda, k), p);
    const Polynomial conj =
        posgen::pow(lambda, k) *
        testutil::scale_vars(lg::apply(A, testutil::scale_vars(p, 1 / lambda)),
                             lambda);
    REQUIRE(direct == conj);
  }
}

TEST_CASE("matrix representation reproduces the unipotent degree-3 form") {
  testutil::Rng rng(909);
  for (int i = 0; i < 25; ++i) {
    const Rational a1 = testutil::rand_rational(rng, 20, 20);
    const Rational a2 = testutil::rand_rational(rng, 20, 20);
    const Rational a3 = testutil::rand_rational(rng, 20, 20);
    const RationalMatrix m = lg::matrix_rep(cubic_series(a1, a2, a3), 3);
    const Rational expected[4][4] = {
        {1, a1, 2 * a2, 6 * a3},
        {0, 1, 2 * a1, 6 * a2},
        {0, 0, 1, 3 * a1},
        {0, 0, 0, 1},
    };
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) REQUIRE(m.at(r, c) == expected[r][c]);
  }

  REQUIRE(lg::matrix_rep(lg::one(2, 3), 3) == RationalMatrix::identity(10));

  TruncatedSeries shallow(1, 2);
  shallow.set({0}, 1);
  REQUIRE_THROWS_AS(lg::matrix_rep(shallow, 3), Error);
}

TEST_CASE("matrix representation is a homomorphism with nilpotent offset") {
  testutil::Rng rng(1010);
  for (int i = 0; i < 40; ++i) {
    const int n = testutil::rand_int(rng, 1, 2);
    const int d = testutil::rand_int(rng, 1, 4);
    const auto A = testutil::rand_group_element(rng, n, d, 6, 10, 10);
    const auto B = testutil::rand_group_element(rng, n, d, 6, 10, 10);
    REQUIRE(lg::matrix_rep(lg::mul(A, B), d) ==
            lg::matrix_rep(A, d) * lg::matrix_rep(B, d));

    // Unipotent structure: upper triangular with unit diagonal, and
    // (M - id)^(d+1) = 0.
    const RationalMatrix m = lg::matrix_rep(A, d);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      REQUIRE(m.at(r, r) == 1);
      for (std::size_t c = 0; c < r; ++c) REQUIRE(m.at(r, c) == 0);
    }
    RationalMatrix nil = m - RationalMatrix::identity(m.rows());
    RationalMatrix power = RationalMatrix::identity(m.rows());
    for (int k = 0; k <= d; ++k) power = power * nil;
    REQUIRE(power == RationalMatrix(m.rows(), m.rows()));
  }
}

TEST_CASE("operator action differentiates and matches coordinates") {
  TruncatedSeries a(1, 2);
  a.set({0}, 1).set({1}, 1);  // 1 + D
  Polynomial x2(1, 2);
  x2.set({2}, 1);
  Polynomial expected(1, 2);
  expected.set({2}, 1).set({1}, 2);
  REQUIRE(lg::apply(a, x2) == expected);

  // Heat flow of x^2: exp(tD^2) x^2 = x^2 + 2t; its t-difference quotient
  // equals the second derivative, exactly.
  const Rational t1(1, 3), t2(7, 2);
  TruncatedSeries g1(1, 2), g2(1, 2);
  g1.set({2}, t1);
  g2.set({2}, t2);
  const Polynomial p1 = lg::apply(lg::exp(g1), x2);
  const Polynomial p2 = lg::apply(lg::exp(g2), x2);
  Polynomial heat1(1, 2);
  heat1.set({2}, 1).set({0}, 2 * t1);
  REQUIRE(p1 == heat1);
  const Polynomial quotient = (p2 - p1) * (1 / (t2 - t1));
  REQUIRE(quotient == posgen::derivative(x2, {2}));

  testutil::Rng rng(1111);
  for (int i = 0; i < 40; ++i) {
    const int n = testutil::rand_int(rng, 1, 2);
    const int d = testutil::rand_int(rng, 1, 4);
    const auto A = testutil::rand_group_element(rng, n, d, 6, 10, 10);
    const Polynomial p = testutil::rand_poly(rng, n, d, 6, 10, 10);

    // Coordinate oracle: matrix_rep acting on the coefficient vector.
    const std::vector<MultiIndex> basis = posgen::indices_up_to(n, d);
    const RationalMatrix m = lg::matrix_rep(A, d);
    RationalMatrix coords(basis.size(), 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      coords.at(j, 0) = p.coeff(basis[j]);
    const RationalMatrix image = m * coords;
    const Polynomial applied = lg::apply(A, p);
    for (std::size_t j = 0; j < basis.size(); ++j)
      REQUIRE(applied.coeff(basis[j]) == image.at(j, 0));
  }

  Polynomial wrong_n(2, 2);
  REQUIRE_THROWS_AS(lg::apply(a, wrong_n), Error);
}
