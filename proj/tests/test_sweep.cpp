#include <doctest.h>

#include "kreps/presentation.hpp"
#include "kreps/sweep.hpp"

using namespace kreps;

TEST_CASE("random braids close to knots") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    auto a = random_knot_braid(rng, 4, 8);
    CHECK(a.strands() >= 2);
    CHECK(a.strands() <= 4);
    CHECK(a.length() >= 1);
    CHECK(a.length() <= 8);
    CHECK(closure_component_count(a) == 1);
  }
}

TEST_CASE("sweep is deterministic across worker counts") {
  SweepOptions opts;
  opts.seed = 99;
  opts.trials = 30;
  opts.matrix_trials = 30;
  opts.workers = 1;
  auto one = run_sweep(opts);
  opts.workers = 3;
  auto three = run_sweep(opts);
  CHECK(one.passed());
  CHECK(one.comparisons == three.comparisons);
  CHECK(one.comparisons > 0);
  CHECK(one.failures.size() == three.failures.size());
}

TEST_CASE("single checks report comparisons") {
  long count = 0;
  CHECK(check_braid(parse_braid("1 -2 1 -2", 3), 7, count).empty());
  CHECK(count > 0);
  long mcount = 0;
  CHECK(check_matrix(IntMatrix{{2, -1, -1}, {-1, 2, -1}}, 12, mcount).empty());
  CHECK(mcount > 0);
}

TEST_CASE("matrix literal") {
  CHECK(matrix_literal(IntMatrix{{1, -2}, {3, 4}}) == "[[1, -2], [3, 4]]");
}
