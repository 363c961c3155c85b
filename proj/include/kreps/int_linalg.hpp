#pragma once

#include <cstddef>
#include <vector>

#include "kreps/integer.hpp"

namespace kreps {

/// Dense rectangular matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  Integer const &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Stacks `below` under this matrix; column counts must match.
  IntMatrix stacked(IntMatrix const &below) const;
  /// Appends the unit row e_col.
  IntMatrix with_pinned_column(std::size_t col) const;

  friend IntMatrix operator*(IntMatrix const &lhs, IntMatrix const &rhs);
  friend bool operator==(IntMatrix const &, IntMatrix const &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

/// Smith normal form P * A * Q = diag(d_1, ..., d_rank, 0, ...).
struct SNFResult {
  /// Positive invariant factors with d_j | d_{j+1}.
  std::vector<Integer> invariants;
  std::size_t rank = 0;
  IntMatrix P{0, 0};
  IntMatrix Q{0, 0};
};

/// Pivots on the nonzero entry of least absolute value; deterministic.
SNFResult smith_normal_form(IntMatrix const &a);

/// gcd of all k x k minors (1 for k = 0, 0 if every minor vanishes).
/// Throws std::invalid_argument unless 0 <= k <= min(rows, cols).
Integer determinantal_divisor(IntMatrix const &a, std::size_t k);

/// #{x in (Z/r)^cols : A x = 0 mod r}. Requires r >= 2.
Integer solution_count_mod(IntMatrix const &a, long r);

/// Same count from a precomputed Smith form of A (cols = column count).
Integer solution_count_mod(SNFResult const &snf, std::size_t cols, long r);

/// Default cap on enumerated solutions: 10^6, overridden by the
/// KREPS_ENUM_CAP environment variable.
std::size_t default_enumeration_cap();

/// All solutions of A x = 0 mod r, sorted lexicographically, entries in
/// [0, r). Throws CapExceededError when the count exceeds `cap`.
std::vector<std::vector<long>> enumerate_solutions_mod(IntMatrix const &a, long r,
                                                        std::size_t cap = default_enumeration_cap());

} // namespace kreps
