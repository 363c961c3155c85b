#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kreps/braid.hpp"
#include "kreps/int_linalg.hpp"

namespace kreps {

struct SweepOptions {
  std::uint64_t seed = 1;
  int trials = 100;        ///< random braids with knot closure
  int matrix_trials = 100; ///< random integer matrices
  int max_strands = 4;
  int max_length = 8;
  long max_r = 7;          ///< colorings and solution counts are compared for r = 2..max_r
  unsigned workers = 0;    ///< 0 picks the hardware concurrency
};

struct SweepFailure {
  std::string check;
  /// Braid text with strand count, or a matrix literal; minimized for braids.
  std::string instance;
  std::string detail;
};

struct SweepReport {
  std::uint64_t seed = 0;
  int braids_checked = 0;
  int matrices_checked = 0;
  long comparisons = 0;
  std::vector<SweepFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Random braid on 2..max_strands strands, 1..max_length letters, whose
/// closure is a knot.
BraidWord random_knot_braid(std::mt19937_64 &rng, int max_strands, int max_length);

/// Random matrix with up to max_dim rows and columns and |entries| <= bound.
IntMatrix random_int_matrix(std::mt19937_64 &rng, std::size_t max_dim, long bound);

/// Checks run on one braid. Returns the failures (empty on success) and
/// adds the number of comparisons made to `comparisons`.
std::vector<SweepFailure> check_braid(BraidWord const &a, long max_r, long &comparisons);

/// SNF reconstruction, unimodularity, divisibility chain, determinantal
/// divisors vs brute-force minors, and solution counts/enumerations vs
/// exhaustive search for r = 2..max_r.
std::vector<SweepFailure> check_matrix(IntMatrix const &a, long max_r, long &comparisons);

/// Deterministic for a fixed seed: instances are drawn sequentially and
/// results are merged by instance index regardless of worker count.
SweepReport run_sweep(SweepOptions const &opts);

std::string matrix_literal(IntMatrix const &m);

} // namespace kreps
