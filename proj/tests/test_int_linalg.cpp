#include <doctest.h>

#include <cstdlib>
#include <random>

#include "kreps/errors.hpp"
#include "kreps/int_linalg.hpp"
#include "kreps/oracles.hpp"

using namespace kreps;

namespace {

IntMatrix random_matrix(std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<long> e(-9, 9);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = e(rng);
  return m;
}

} // namespace

TEST_CASE("SNF of known matrices") {
  auto s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s.invariants == std::vector<Integer>{2, 6, 12});
  CHECK(s.rank == 3);
  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.invariants.empty());
  auto trefoil = smith_normal_form(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(trefoil.invariants == std::vector<Integer>{1, 3});
}

TEST_CASE("SNF reconstruction and invariants on random matrices") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_matrix(rng);
    auto s = smith_normal_form(a);
    IntMatrix d(a.rows(), a.cols());
    for (std::size_t i = 0; i < s.rank; ++i)
      d(i, i) = s.invariants[i];
    CHECK(s.P * a * s.Q == d);
    CHECK(abs(oracle::laplace_determinant(s.P)) == 1);
    CHECK(abs(oracle::laplace_determinant(s.Q)) == 1);
    for (std::size_t i = 0; i < s.invariants.size(); ++i) {
      CHECK(s.invariants[i] > 0);
      if (i > 0)
        CHECK(mpz_divisible_p(s.invariants[i].get_mpz_t(), s.invariants[i - 1].get_mpz_t()));
    }
    for (std::size_t k = 0; k <= std::min(a.rows(), a.cols()); ++k)
      CHECK(determinantal_divisor(a, k) == oracle::minor_gcd(a, k));
  }
}

TEST_CASE("determinantal divisor bounds") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(determinantal_divisor(a, 0) == 1);
  CHECK(determinantal_divisor(a, 2) == 2);
  CHECK_THROWS_AS(determinantal_divisor(a, 3), std::invalid_argument);
  CHECK(determinantal_divisor(IntMatrix{{1, 2}, {2, 4}}, 2) == 0);
}

TEST_CASE("solution counts and enumerations match exhaustive search") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_matrix(rng);
    for (long r = 2; r <= 12; ++r) {
      auto brute = oracle::solutions_mod(a, r);
      CHECK(solution_count_mod(a, r) == static_cast<unsigned long>(brute.size()));
      CHECK(enumerate_solutions_mod(a, r) == brute);
    }
  }
}

TEST_CASE("solution count of the trefoil system") {
  IntMatrix m{{2, -1, -1}, {-1, 2, -1}};
  CHECK(solution_count_mod(m, 3) == 9);
  CHECK(solution_count_mod(m, 5) == 5);
  CHECK(solution_count_mod(m.with_pinned_column(2), 3) == 3);
  CHECK_THROWS_AS(solution_count_mod(m, 1), std::invalid_argument);
}

TEST_CASE("enumeration cap") {
  IntMatrix zero(1, 4);
  CHECK(enumerate_solutions_mod(zero, 5).size() == 625);
  CHECK_THROWS_AS(enumerate_solutions_mod(zero, 5, 100), CapExceededError);
  setenv("KREPS_ENUM_CAP", "10", 1);
  CHECK(default_enumeration_cap() == 10);
  unsetenv("KREPS_ENUM_CAP");
  CHECK(default_enumeration_cap() == 1000000);
}

TEST_CASE("matrix helpers") {
  IntMatrix a{{1, 2}};
  auto s = a.stacked(IntMatrix{{3, 4}});
  CHECK(s == IntMatrix{{1, 2}, {3, 4}});
  CHECK(a.with_pinned_column(1) == IntMatrix{{1, 2}, {0, 1}});
  CHECK(IntMatrix::identity(2) * s == s);
  CHECK_THROWS(a.stacked(IntMatrix{{1, 2, 3}}));
}
