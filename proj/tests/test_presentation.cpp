#include <doctest.h>

#include <random>

#include "kreps/errors.hpp"
#include "kreps/presentation.hpp"
#include "kreps/sweep.hpp"

using namespace kreps;

namespace {

LaurentPoly delta(std::string const &braid, int n) {
  return elementary_ideal_data(alexander_matrix(closure_presentation(parse_braid(braid, n))))
      .alexander_poly;
}

Integer det(std::string const &braid, int n) {
  return elementary_ideal_data(alexander_matrix(closure_presentation(parse_braid(braid, n))))
      .determinant;
}

} // namespace

TEST_CASE("abelianized Fox derivatives") {
  FreeWord w(2, {{1, 1}, {2, 1}, {1, -1}});
  std::vector<long> ones{1, 1};
  CHECK(fox_derivative_abelianized(w, 1, ones).to_string() == "1 - t");
  CHECK(fox_derivative_abelianized(w, 2, ones).to_string() == "t");
  FreeWord v(2, {{2, -1}});
  CHECK(fox_derivative_abelianized(v, 2, ones).to_string() == "-t^-1");
  CHECK(fox_derivative_abelianized(v, 1, ones).is_zero());
}

TEST_CASE("closure presentations") {
  auto p = closure_presentation(parse_braid("1^3", 2));
  CHECK(p.generator_count() == 2);
  CHECK(p.relators().size() == 2);
  auto q = closure_presentation(parse_braid("1 3", 4));
  CHECK(q.generator_count() == 4);
  for (auto const &r : q.relators())
    CHECK(r.exponent_sum() == 0);
  CHECK_THROWS_AS(Presentation(2, {FreeWord(2, {{1, 1}})}, {1, 1}), std::invalid_argument);
}

TEST_CASE("Alexander data of classical knots") {
  CHECK(delta("1^3", 2).to_string() == "1 - t + t^2");
  CHECK(det("1^3", 2) == 3);
  CHECK(delta("1 -2 1 -2", 3).to_string() == "1 - 3t + t^2");
  CHECK(det("1 -2 1 -2", 3) == 5);
  CHECK(delta("1^5", 2).to_string() == "1 - t + t^2 - t^3 + t^4");
  CHECK(det("1^5", 2) == 5);
  CHECK(delta("1^3 2^3", 3).to_string() == "1 - 2t + 3t^2 - 2t^3 + t^4");
  CHECK(det("1^3 2^3", 3) == 9);
  CHECK(delta("1", 2) == LaurentPoly(1));
  CHECK(det("1 2 3", 4) == 1);
  CHECK(det("-1^3", 2) == 3);
}

TEST_CASE("elementary ideal data edge cases") {
  LaurentMatrix one(0, 1);
  auto d = elementary_ideal_data(one);
  CHECK(d.alexander_poly == LaurentPoly(1));
  CHECK(d.determinant == 1);
  LaurentMatrix short_rows(0, 3);
  CHECK(elementary_ideal_data(short_rows).determinant == 0);
  CHECK(elementary_ideal_data(short_rows).alexander_poly.is_zero());
  CHECK_THROWS_AS(elementary_ideal_data(LaurentMatrix(1, 0)), std::invalid_argument);
}

TEST_CASE("reduced Burau matrices") {
  auto b = reduced_burau(parse_braid("1", 2));
  CHECK(b.rows() == 1);
  CHECK(b(0, 0) == -LaurentPoly::t());
  auto c = reduced_burau(parse_braid("-1", 2));
  CHECK(c(0, 0) == -LaurentPoly::t().shifted(-2));
  CHECK(reduced_burau(parse_braid("1 -1", 3)) == LaurentMatrix::identity(2));
  CHECK(reduced_burau(parse_braid("1 2 1", 3)) == reduced_burau(parse_braid("2 1 2", 3)));
  CHECK(burau_alexander(parse_braid("1^3", 2)).to_string() == "1 - t + t^2");
  CHECK(burau_alexander(parse_braid("1 2", 3)) == LaurentPoly(1));
  CHECK(burau_alexander(parse_braid("", 1)) == LaurentPoly(1));
  CHECK_THROWS_AS(burau_alexander(parse_braid("1 1", 2)), NotAKnotError);
}

TEST_CASE("closure diagrams") {
  auto trefoil = closure_diagram(parse_braid("1^3", 2));
  CHECK(trefoil.arc_count == 3);
  CHECK(trefoil.crossings.size() == 3);
  CHECK(closure_diagram(parse_braid("1", 2)).arc_count == 1);
  CHECK(closure_diagram(parse_braid("1 -2 1 -2", 3)).arc_count == 4);
  CHECK_THROWS_AS(closure_diagram(parse_braid("", 2)), std::invalid_argument);
  for (auto const &c : trefoil.crossings) {
    CHECK(c.sign == 1);
    CHECK(c.over < 3);
    CHECK(c.incoming != c.outgoing);
  }
}

TEST_CASE("coloring matrix rows") {
  auto a = coloring_matrix(closure_diagram(parse_braid("1^3", 2)));
  CHECK(a.rows() == 3);
  CHECK(a.cols() == 3);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    LaurentPoly sum;
    for (std::size_t j = 0; j < a.cols(); ++j)
      sum += a(i, j);
    CHECK(sum.is_zero());
  }
  // A one-arc diagram: all three roles coincide.
  auto kink = coloring_matrix(closure_diagram(parse_braid("1", 2)));
  CHECK(kink(0, 0).is_zero());
}

TEST_CASE("Alexander polynomial is a Markov invariant") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_knot_braid(rng, 4, 6);
    int const n = a.strands();
    auto fox = [](BraidWord const &b) {
      return elementary_ideal_data(alexander_matrix(closure_presentation(b))).alexander_poly;
    };
    auto base = fox(a);
    std::uniform_int_distribution<int> idx(1, n - 1);
    auto g = BraidWord(n, {{idx(rng), coin(rng) ? 1 : -1}});
    CHECK(fox(g * a * g.inverse()) == base);
    std::vector<BraidLetter> ls(a.letters().begin(), a.letters().end());
    ls.push_back({n, coin(rng) ? 1 : -1});
    CHECK(fox(BraidWord(n + 1, ls)) == base);
    CHECK(burau_alexander(a) == base);
    CHECK(minor_gcd(coloring_matrix(closure_diagram(a)), closure_diagram(a).arc_count - 1) == base);
  }
}

TEST_CASE("torus-covering presentations") {
  auto a = parse_braid("1^3", 2);
  auto p = torus_covering_presentation(a, parse_braid("", 2));
  auto knot = elementary_ideal_data(alexander_matrix(closure_presentation(a)));
  CHECK(elementary_ideal_data(alexander_matrix(p)).determinant == knot.determinant);
  auto f = torus_covering_presentation(a, full_twist(2).power(3));
  CHECK(f.generator_count() == 2);
  CHECK(elementary_ideal_data(alexander_matrix(f)).determinant == 3);
  CHECK_THROWS_AS(torus_covering_presentation(parse_braid("1 2", 3), parse_braid("1", 3)),
                  NonCommutingError);
  CHECK_THROWS_AS(torus_covering_presentation(parse_braid("1 1", 2), parse_braid("1", 2)),
                  NotAKnotError);
  // The knot check comes first.
  CHECK_THROWS_AS(torus_covering_presentation(parse_braid("1 1 3", 4), parse_braid("2", 4)),
                  NotAKnotError);
}

TEST_CASE("surface determinant divides the closure determinant") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> k(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_knot_braid(rng, 4, 6);
    auto b = full_twist(a.strands()).power(k(rng));
    auto s = elementary_ideal_data(alexander_matrix(torus_covering_presentation(a, b))).determinant;
    auto c = elementary_ideal_data(alexander_matrix(closure_presentation(a))).determinant;
    CHECK(mpz_odd_p(s.get_mpz_t()));
    CHECK(mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()));
  }
}
