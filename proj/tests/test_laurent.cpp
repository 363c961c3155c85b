#include <doctest.h>

#include <random>

#include "kreps/laurent.hpp"
#include "kreps/oracles.hpp"

using namespace kreps;

namespace {

LaurentPoly poly(std::vector<std::pair<long, long>> terms) {
  LaurentPoly f;
  for (auto [e, c] : terms)
    f += LaurentPoly::monomial(c, e);
  return f;
}

LaurentPoly random_poly(std::mt19937_64 &rng, int terms) {
  std::uniform_int_distribution<long> exp(-3, 3), coeff(-4, 4);
  LaurentPoly f;
  for (int i = 0; i < terms; ++i)
    f += LaurentPoly::monomial(coeff(rng), exp(rng));
  return f;
}

} // namespace

TEST_CASE("textual form ascends in exponent") {
  CHECK(poly({{0, 1}, {1, -1}, {2, 1}}).to_string() == "1 - t + t^2");
  CHECK(poly({{1, 3}}).to_string() == "3t");
  CHECK(poly({{-2, 1}}).to_string() == "t^-2");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(poly({{0, -2}, {3, 5}}).to_string() == "-2 + 5t^3");
}

TEST_CASE("arithmetic and evaluation") {
  auto t = LaurentPoly::t();
  auto f = 1 - t + t * t;
  CHECK(f.eval_at(-1) == 3);
  CHECK(f.eval_at(1) == 1);
  CHECK_THROWS_AS(f.eval_at(2), std::invalid_argument);
  CHECK((f * t.shifted(-2)) == poly({{-1, 1}, {0, -1}, {1, 1}}));
  CHECK(f.inverted_variable() == poly({{0, 1}, {-1, -1}, {-2, 1}}));
  CHECK((f - f).is_zero());
  CHECK(f.min_exponent() == 0);
  CHECK(f.max_exponent() == 2);
}

TEST_CASE("normalize_unit picks the canonical associate") {
  auto f = poly({{-3, -1}, {-2, 1}, {-1, -1}});
  CHECK(normalize_unit(f) == poly({{0, 1}, {1, -1}, {2, 1}}));
  CHECK_THROWS_AS(normalize_unit(LaurentPoly()), std::invalid_argument);
}

TEST_CASE("gcd of known pairs") {
  auto t = LaurentPoly::t();
  auto trefoil = 1 - t + t * t;
  auto fig8 = 1 - 3 * t + t * t;
  CHECK(poly_gcd(trefoil * (1 + t), trefoil * (2 - t)) == trefoil);
  CHECK(poly_gcd(trefoil, fig8) == LaurentPoly(1));
  CHECK(poly_gcd(LaurentPoly(), LaurentPoly()).is_zero());
  CHECK(poly_gcd(6 * trefoil, 4 * trefoil.shifted(5)) == 2 * trefoil);
  CHECK(poly_gcd(LaurentPoly(), -trefoil) == trefoil);
}

TEST_CASE("gcd properties on random polynomials") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, 3), g = random_poly(rng, 3), h = random_poly(rng, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero())
      continue;
    auto d = poly_gcd(f * h, g * h);
    CHECK(exact_divide(f * h, d).has_value());
    CHECK(exact_divide(g * h, d).has_value());
    CHECK(exact_divide(d, normalize_unit(h)).has_value());
    CHECK(poly_gcd(f, g) == poly_gcd(g, f));
  }
}

TEST_CASE("exact division") {
  auto t = LaurentPoly::t();
  CHECK(exact_divide(1 - t * t, 1 - t) == std::optional<LaurentPoly>(1 + t));
  CHECK_FALSE(exact_divide(1 + t * t, 1 + t).has_value());
  CHECK_FALSE(exact_divide(3 * t, LaurentPoly(2)).has_value());
}

TEST_CASE("determinant matches a cofactor expansion") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m(i, j) = random_poly(rng, 2);
    auto cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(determinant(m) == cof);
    CHECK(determinant(m).eval_at(-1) == oracle::laplace_determinant(m.eval_at(-1)));
  }
  CHECK(determinant(LaurentMatrix::identity(4)) == LaurentPoly(1));
  LaurentMatrix z(2, 2);
  z(0, 1) = LaurentPoly::t();
  z(1, 0) = LaurentPoly::t();
  CHECK(determinant(z) == -LaurentPoly::t() * LaurentPoly::t());
}
