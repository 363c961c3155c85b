#include <doctest.h>

#include <random>

#include "kreps/metabelian.hpp"
#include "kreps/presentation.hpp"

using namespace kreps;

TEST_CASE("binary dihedral group law") {
  long const m = 5;
  auto d = [&](long k) { return BinaryDihedralElt::diagonal(m, k); };
  auto r = [&](long k) { return BinaryDihedralElt::antidiagonal(m, k); };
  CHECK(bd_mul(d(2), d(3)) == d(5));
  CHECK(bd_mul(d(2), r(3)) == r(5));
  CHECK(bd_mul(r(3), d(2)) == r(1));
  CHECK(bd_mul(r(3), r(1)) == d(7));
  CHECK(bd_mul(r(0), r(0)) == d(5)); // R(0)^2 = -1
  CHECK(d(12) == d(2));
  CHECK_THROWS_AS(BinaryDihedralElt::diagonal(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(bd_mul(d(0), BinaryDihedralElt::diagonal(3, 0)), std::invalid_argument);
}

TEST_CASE("group axioms over all elements") {
  long const m = 3;
  std::vector<BinaryDihedralElt> all;
  for (long k = 0; k < 2 * m; ++k) {
    all.push_back(BinaryDihedralElt::diagonal(m, k));
    all.push_back(BinaryDihedralElt::antidiagonal(m, k));
  }
  auto one = BinaryDihedralElt::identity(m);
  for (auto const &x : all) {
    CHECK(bd_mul(x, x.inverse()) == one);
    CHECK(bd_mul(x.inverse(), x) == one);
    CHECK(bd_mul(x, one) == x);
    for (auto const &y : all)
      for (auto const &z : all)
        CHECK(bd_mul(bd_mul(x, y), z) == bd_mul(x, bd_mul(y, z)));
  }
}

TEST_CASE("counting formulas") {
  CHECK(count_irreducible_metabelian(3) == 1);
  CHECK(count_irreducible_metabelian(9) == 4);
  CHECK(count_irreducible_metabelian(1) == 0);
  CHECK_THROWS_AS(count_irreducible_metabelian(4), std::invalid_argument);
  CHECK_THROWS_AS(count_irreducible_metabelian(0), std::invalid_argument);
  CHECK(count_from_colorings(27, 3) == 4);
  CHECK(count_from_colorings(25, 5) == 2);
  CHECK_THROWS_AS(count_from_colorings(26, 5), std::invalid_argument);
  CHECK_THROWS_AS(count_from_colorings(9, 4), std::invalid_argument);
}

TEST_CASE("trefoil representation") {
  auto p = closure_presentation(parse_braid("1^3", 2));
  auto rep = build_representation(p, {0, 1}, 3);
  CHECK(rep[0] == BinaryDihedralElt::antidiagonal(3, 0));
  CHECK(rep[1] == BinaryDihedralElt::antidiagonal(3, 4));
  CHECK(verify_representation(p, rep));
  CHECK(is_irreducible(rep));
  CHECK_THROWS_AS(build_representation(p, {0, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_representation(p, {0}, 3), std::invalid_argument);
  auto bad = rep;
  bad[1] = BinaryDihedralElt::diagonal(3, 1);
  CHECK_FALSE(verify_representation(p, bad));
}

TEST_CASE("three-generator representation angles") {
  auto p = closure_presentation(parse_braid("1 2 1 2 1 2 1 2", 3));
  auto sys = coloring_system(p);
  CHECK(sys.cols() == 3);
  auto rep = build_representation(closure_presentation(parse_braid("1^3 2^3", 3)), {0, 0, 0}, 3);
  CHECK_FALSE(is_irreducible(rep));
  Assignment mixed{BinaryDihedralElt::antidiagonal(3, 0), BinaryDihedralElt::diagonal(3, 1)};
  CHECK_THROWS_AS(is_irreducible(mixed), std::invalid_argument);
  CHECK_FALSE(is_irreducible(Assignment{}));
}

TEST_CASE("enumerated classes") {
  struct Case {
    std::string braid;
    int n;
    std::size_t count;
  };
  for (auto const &c : {Case{"1^3", 2, 1}, Case{"1 -2 1 -2", 3, 2}, Case{"1^5", 2, 2},
                        Case{"1^3 2^3", 3, 4}, Case{"1", 2, 0}}) {
    auto p = closure_presentation(parse_braid(c.braid, c.n));
    auto classes = enumerate_rep_classes(p);
    CHECK(classes.size() == c.count);
    for (auto const &k : classes) {
      CHECK(verify_representation(p, k.assignment));
      CHECK(is_irreducible(k.assignment));
      CHECK(k.coloring.back() == 0);
      for (auto const &g : k.assignment)
        CHECK(g.angle() % 2 == 0);
    }
  }
}

TEST_CASE("classes are distinct up to negation") {
  auto p = closure_presentation(parse_braid("1^3 2^3", 3));
  auto classes = enumerate_rep_classes(p);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j)
        continue;
      auto neg = classes[j].coloring;
      for (auto &v : neg)
        v = (9 - v) % 9;
      CHECK(classes[i].coloring != classes[j].coloring);
      CHECK(classes[i].coloring != neg);
    }
}
