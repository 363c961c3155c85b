#include <doctest.h>

#include <random>

#include "kreps/colorings.hpp"
#include "kreps/errors.hpp"
#include "kreps/oracles.hpp"
#include "kreps/presentation.hpp"
#include "kreps/sweep.hpp"

using namespace kreps;

TEST_CASE("dihedral quandle operation") {
  CHECK(dihedral_op(1, 0, 3) == 2);
  CHECK(dihedral_op(2, 2, 5) == 2);
  for (long x = 0; x < 7; ++x)
    for (long y = 0; y < 7; ++y)
      CHECK(dihedral_op(dihedral_op(x, y, 7), y, 7) == x);
}

TEST_CASE("generated subgroup agrees with the quandle closure") {
  std::mt19937_64 rng(47);
  for (long p : {3L, 5L, 6L, 9L, 12L}) {
    std::uniform_int_distribution<long> c(0, p - 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<long> colors{c(rng), c(rng), c(rng)};
      long const d = generated_subgroup(colors, p);
      auto closure = oracle::quandle_closure(colors, p);
      CHECK(static_cast<long>(closure.size()) == p / d);
    }
  }
}

TEST_CASE("trefoil census") {
  auto fox = alexander_matrix(closure_presentation(parse_braid("1^3", 2)));
  auto c3 = coloring_census(fox, 3);
  CHECK(c3.total == 9);
  CHECK(c3.nontrivial == 6);
  CHECK(c3.condition_o == 3);
  CHECK(c3.nondegenerate);
  auto c5 = coloring_census(fox, 5);
  CHECK(c5.total == 5);
  CHECK_FALSE(c5.nondegenerate);
  CHECK(is_p_colorable(fox, 3));
  CHECK_FALSE(is_p_colorable(fox, 5));
}

TEST_CASE("composite-modulus colorings need a generating coloring") {
  auto fox = alexander_matrix(closure_presentation(parse_braid("1^3 2^3", 3)));
  auto c9 = coloring_census(fox, 9);
  CHECK(c9.total == 81);
  CHECK_FALSE(c9.nondegenerate);
  CHECK(is_p_colorable(fox, 3));
  CHECK_FALSE(is_p_colorable(fox, 9));
  auto nine = alexander_matrix(closure_presentation(parse_braid("1^9", 2)));
  CHECK(is_p_colorable(nine, 9));
}

TEST_CASE("dihedral transport") {
  auto a = parse_braid("1^3", 2);
  std::vector<long> x{0, 1};
  CHECK(dihedral_transport(a, x, 3) == x);
  std::vector<long> y{0, 1};
  CHECK(dihedral_transport(parse_braid("1", 2), y, 5) == std::vector<long>{4, 0});
  CHECK(dihedral_transport(parse_braid("-1", 2), y, 5) == std::vector<long>{1, 2});
  CHECK(transport_matrix(parse_braid("1", 2)) == IntMatrix{{2, -1}, {1, 0}});
}

TEST_CASE("transport matrix agrees with letter-by-letter transport") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> c(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_knot_braid(rng, 4, 8);
    std::vector<long> x(static_cast<std::size_t>(a.strands()));
    for (auto &v : x)
      v = c(rng);
    IntMatrix col(x.size(), 1);
    for (std::size_t i = 0; i < x.size(); ++i)
      col(i, 0) = x[i];
    auto tx = transport_matrix(a) * col;
    auto direct = dihedral_transport(a, x, 7);
    for (std::size_t i = 0; i < x.size(); ++i)
      CHECK(mod(tx(i, 0), Integer(7)) == direct[i]);
  }
}

TEST_CASE("census routes agree with brute force on random knots") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_knot_braid(rng, 4, 7);
    auto fox = alexander_matrix(closure_presentation(a));
    auto d = closure_diagram(a);
    IntMatrix t = transport_matrix(a);
    for (std::size_t i = 0; i < t.rows(); ++i)
      t(i, i) -= 1;
    for (long r = 2; r <= 7; ++r) {
      auto c = coloring_census(fox, r);
      CHECK(c.total == oracle::diagram_colorings(d, r));
      CHECK(c.condition_o == oracle::diagram_colorings(d, r, true));
      CHECK(census_of_system(t, r).total == c.total);
      CHECK(coloring_census(coloring_matrix(d), r).total == c.total);
      CHECK(c.nontrivial == c.total - r);
      CHECK(c.total == c.condition_o * r);
    }
  }
}

TEST_CASE("surface colorings") {
  auto a = parse_braid("1^3", 2);
  auto c = surface_coloring_census(a, full_twist(2).power(3), 3);
  CHECK(c.total == 9);
  CHECK_THROWS_AS(surface_coloring_census(parse_braid("1 2", 3), parse_braid("1", 3), 3),
                  NonCommutingError);
  auto fam = parse_braid("1^3 2^3", 3);
  auto prof = colorability_profile(fam, full_twist(3).power(2), 12);
  CHECK(prof.size() == 11);
  CHECK(prof.front().first == 2);
  for (auto const &[r, count] : prof)
    CHECK(count == (r % 3 == 0 ? 9 : 1));
  auto sys = surface_transport_system(fam, full_twist(3).power(2));
  CHECK(sys.rows() == 6);
  CHECK(sys.cols() == 3);
  CHECK(surface_coloring_census(fam, full_twist(3).power(2), 3).total == 27);
}
