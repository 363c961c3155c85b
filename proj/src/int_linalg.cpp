#include "kreps/int_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "kreps/errors.hpp"

namespace kreps {

long to_long(Integer const &v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("integer " + v.get_str() + " does not fit in a long");
  return v.get_si();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix entry count does not match its shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (auto const &row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("ragged matrix literal");
    for (long v : row)
      entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::stacked(IntMatrix const &below) const {
  if (below.cols_ != cols_)
    throw std::invalid_argument("stacked matrices need equal column counts");
  IntMatrix out(rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(),
            out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

IntMatrix IntMatrix::with_pinned_column(std::size_t col) const {
  if (col >= cols_)
    throw std::invalid_argument("pinned column out of range");
  IntMatrix unit(1, cols_);
  unit(0, col) = 1;
  return stacked(unit);
}

IntMatrix operator*(IntMatrix const &lhs, IntMatrix const &rhs) {
  if (lhs.cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (sgn(lhs(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Row and column operations applied simultaneously to the working matrix and
// the accumulated transforms, so that P * A * Q == B holds throughout.
struct SnfState {
  IntMatrix B;
  IntMatrix P;
  IntMatrix Q;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < B.cols(); ++j)
      std::swap(B(a, j), B(b, j));
    for (std::size_t j = 0; j < P.cols(); ++j)
      std::swap(P(a, j), P(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < B.rows(); ++i)
      std::swap(B(i, a), B(i, b));
    for (std::size_t i = 0; i < Q.rows(); ++i)
      std::swap(Q(i, a), Q(i, b));
  }
  // row_dst += f * row_src
  void add_row(std::size_t dst, std::size_t src, Integer const &f) {
    for (std::size_t j = 0; j < B.cols(); ++j)
      B(dst, j) += f * B(src, j);
    for (std::size_t j = 0; j < P.cols(); ++j)
      P(dst, j) += f * P(src, j);
  }
  // col_dst += f * col_src
  void add_col(std::size_t dst, std::size_t src, Integer const &f) {
    for (std::size_t i = 0; i < B.rows(); ++i)
      B(i, dst) += f * B(i, src);
    for (std::size_t i = 0; i < Q.rows(); ++i)
      Q(i, dst) += f * Q(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < B.cols(); ++j)
      B(r, j) = -B(r, j);
    for (std::size_t j = 0; j < P.cols(); ++j)
      P(r, j) = -P(r, j);
  }

  // Moves the least nonzero |entry| of the lower-right block at t to (t, t).
  bool bring_min_to_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < B.rows(); ++i)
      for (std::size_t j = t; j < B.cols(); ++j) {
        if (sgn(B(i, j)) == 0)
          continue;
        Integer a = abs(B(i, j));
        if (!found || a < best) {
          best = a;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (found) {
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
    return found;
  }

  // Same, restricted to row t and column t.
  void bring_min_of_cross_to_pivot(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs(B(t, t));
    for (std::size_t i = t + 1; i < B.rows(); ++i)
      if (sgn(B(i, t)) != 0 && (sgn(best) == 0 || abs(B(i, t)) < best)) {
        best = abs(B(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < B.cols(); ++j)
      if (sgn(B(t, j)) != 0 && (sgn(best) == 0 || abs(B(t, j)) < best)) {
        best = abs(B(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }
};

} // namespace

SNFResult smith_normal_form(IntMatrix const &a) {
  SnfState s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  std::size_t const limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    if (!s.bring_min_to_pivot(t))
      break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(s.B(i, t)) == 0)
          continue;
        Integer q = s.B(i, t) / s.B(t, t); // truncating division
        s.add_row(i, t, -q);
        if (sgn(s.B(i, t)) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(s.B(t, j)) == 0)
          continue;
        Integer q = s.B(t, j) / s.B(t, t);
        s.add_col(j, t, -q);
        if (sgn(s.B(t, j)) != 0)
          clean = false;
      }
      if (!clean) {
        s.bring_min_of_cross_to_pivot(t);
        continue;
      }
      // The pivot must divide the whole remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(s.B(i, j).get_mpz_t(), s.B(t, t).get_mpz_t())) {
            s.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (sgn(s.B(t, t)) < 0)
      s.negate_row(t);
  }

  SNFResult out;
  out.rank = t;
  out.invariants.reserve(t);
  for (std::size_t i = 0; i < t; ++i)
    out.invariants.push_back(s.B(i, i));
  out.P = std::move(s.P);
  out.Q = std::move(s.Q);
  return out;
}

Integer determinantal_divisor(IntMatrix const &a, std::size_t k) {
  if (k > std::min(a.rows(), a.cols()))
    throw std::invalid_argument("minor size " + std::to_string(k) + " out of range");
  if (k == 0)
    return 1;
  SNFResult snf = smith_normal_form(a);
  if (k > snf.rank)
    return 0;
  Integer prod = 1;
  for (std::size_t i = 0; i < k; ++i)
    prod *= snf.invariants[i];
  return prod;
}

Integer solution_count_mod(SNFResult const &snf, std::size_t cols, long r) {
  if (r < 2)
    throw std::invalid_argument("modulus must be at least 2");
  Integer const mod_r = r;
  Integer count;
  mpz_pow_ui(count.get_mpz_t(), mod_r.get_mpz_t(), cols - snf.rank);
  for (auto const &d : snf.invariants)
    count *= gcd(d, mod_r);
  return count;
}

Integer solution_count_mod(IntMatrix const &a, long r) {
  if (r < 2)
    throw std::invalid_argument("modulus must be at least 2");
  return solution_count_mod(smith_normal_form(a), a.cols(), r);
}

std::size_t default_enumeration_cap() {
  constexpr std::size_t fallback = 1'000'000;
  char const *env = std::getenv("KREPS_ENUM_CAP");
  if (env == nullptr || *env == '\0')
    return fallback;
  char *end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    return fallback;
  return static_cast<std::size_t>(v);
}

std::vector<std::vector<long>> enumerate_solutions_mod(IntMatrix const &a, long r,
                                                        std::size_t cap) {
  if (r < 2)
    throw std::invalid_argument("modulus must be at least 2");
  SNFResult snf = smith_normal_form(a);
  std::size_t const n = a.cols();
  Integer total = solution_count_mod(snf, n, r);
  if (total > Integer(static_cast<unsigned long>(cap)))
    throw CapExceededError(total.get_str() + " solutions exceed the enumeration cap of " +
                           std::to_string(cap));

  // x' ranges over steps * {0, ..., counts - 1} per coordinate; x = Q x'.
  std::vector<long> step(n), counts(n);
  Integer const mod_r = r;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < snf.rank) {
      long g = to_long(gcd(snf.invariants[i], mod_r));
      step[i] = r / g;
      counts[i] = g;
    } else {
      step[i] = 1;
      counts[i] = r;
    }
  }
  std::vector<long> q(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      q[i * n + j] = to_long(mod(snf.Q(i, j), mod_r));

  std::vector<std::vector<long>> out;
  out.reserve(static_cast<std::size_t>(total.get_ui()));
  std::vector<long> digits(n, 0);
  for (;;) {
    std::vector<long> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      __int128 acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        acc += static_cast<__int128>(q[i * n + j]) * (static_cast<__int128>(digits[j]) * step[j] % r);
      x[i] = static_cast<long>(acc % r);
    }
    out.push_back(std::move(x));
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == counts[pos]) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == n)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace kreps
