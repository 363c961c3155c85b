#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kreps/int_linalg.hpp"
#include "kreps/integer.hpp"

namespace kreps {

/// An element of the Laurent polynomial ring Z[t, t^-1].
///
/// Coefficients are kept in a sparse exponent -> coefficient map with no
/// zero entries; the zero polynomial is the empty map.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long constant); // NOLINT(google-explicit-constructor)
  LaurentPoly(Integer const &constant); // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Integer const &coeff, long exponent);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::map<long, Integer> const &terms() const noexcept { return terms_; }
  Integer coefficient(long exponent) const;

  /// Lowest and highest exponents; the polynomial must be nonzero.
  long min_exponent() const;
  long max_exponent() const;

  /// Multiplication by t^k.
  LaurentPoly shifted(long k) const;
  /// The image under t -> t^-1.
  LaurentPoly inverted_variable() const;

  /// Substitutes v for t. Only v = 1 and v = -1 keep t^-1 integral.
  Integer eval_at(long v) const;

  /// Ascending exponents, e.g. `1 - t + t^2`, `t^-2 + 3`.
  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(LaurentPoly const &rhs);
  LaurentPoly &operator-=(LaurentPoly const &rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, LaurentPoly const &rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, LaurentPoly const &rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(LaurentPoly const &lhs, LaurentPoly const &rhs);
  friend bool operator==(LaurentPoly const &, LaurentPoly const &) = default;

private:
  void add_term(long exponent, Integer const &coeff);

  std::map<long, Integer> terms_;
};

/// Canonical representative of the unit class {+-t^k f}: lowest exponent 0
/// and positive lowest coefficient. Throws std::invalid_argument for f = 0.
LaurentPoly normalize_unit(LaurentPoly const &f);

/// gcd in Z[t, t^-1], normalized. gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly const &f, LaurentPoly const &g);

/// Exact quotient f / g in Z[t, t^-1], or nullopt when g does not divide f.
std::optional<LaurentPoly> exact_divide(LaurentPoly const &f, LaurentPoly const &g);

/// Rectangular matrix over Z[t, t^-1].
class LaurentMatrix {
public:
  LaurentMatrix(std::size_t rows, std::size_t cols);
  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  LaurentPoly &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  LaurentPoly const &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntMatrix eval_at(long v) const;
  /// Square submatrix on the given rows and columns.
  LaurentMatrix submatrix(std::vector<std::size_t> const &rows,
                          std::vector<std::size_t> const &cols) const;

  friend LaurentMatrix operator*(LaurentMatrix const &lhs, LaurentMatrix const &rhs);
  friend LaurentMatrix operator-(LaurentMatrix const &lhs, LaurentMatrix const &rhs);
  friend bool operator==(LaurentMatrix const &, LaurentMatrix const &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LaurentPoly> entries_;
};

/// Determinant of a square matrix by fraction-free elimination.
LaurentPoly determinant(LaurentMatrix const &m);

} // namespace kreps
