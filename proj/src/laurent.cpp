#include "kreps/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kreps {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0)
    terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(Integer const &constant) {
  if (sgn(constant) != 0)
    terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(Integer const &coeff, long exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(long exponent, Integer const &coeff) {
  if (sgn(coeff) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPoly::min_exponent() const {
  if (terms_.empty())
    throw std::invalid_argument("zero polynomial has no exponents");
  return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const {
  if (terms_.empty())
    throw std::invalid_argument("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p;
  for (auto const &[e, c] : terms_)
    p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  LaurentPoly p;
  for (auto const &[e, c] : terms_)
    p.terms_.emplace(-e, c);
  return p;
}

Integer LaurentPoly::eval_at(long v) const {
  if (v != 1 && v != -1)
    throw std::invalid_argument("Laurent polynomials are evaluated only at t = 1 or t = -1");
  Integer sum = 0;
  for (auto const &[e, c] : terms_) {
    if (v == -1 && (e % 2 != 0))
      sum -= c;
    else
      sum += c;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto const &[e, c] : terms_) {
    bool const negative = sgn(c) < 0;
    Integer const mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1)
      out += mag.get_str();
    out += "t";
    if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto &[e, c] : p.terms_)
    c = -c;
  return p;
}

LaurentPoly &LaurentPoly::operator+=(LaurentPoly const &rhs) {
  for (auto const &[e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(LaurentPoly const &rhs) {
  for (auto const &[e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly operator*(LaurentPoly const &lhs, LaurentPoly const &rhs) {
  LaurentPoly p;
  for (auto const &[e1, c1] : lhs.terms_)
    for (auto const &[e2, c2] : rhs.terms_)
      p.add_term(e1 + e2, c1 * c2);
  return p;
}

// ---------------------------------------------------------------------------
// Dense Z[t] helpers for gcd and division.

namespace {

using Dense = std::vector<Integer>; // ascending coefficients, trimmed

void trim(Dense &p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

long degree(Dense const &p) { return static_cast<long>(p.size()) - 1; }

// f = t^shift * dense(f) with dense(f)(0) != 0.
Dense to_dense(LaurentPoly const &f, long &shift) {
  shift = f.min_exponent();
  Dense d(static_cast<std::size_t>(f.max_exponent() - shift + 1));
  for (auto const &[e, c] : f.terms())
    d[static_cast<std::size_t>(e - shift)] = c;
  return d;
}

LaurentPoly from_dense(Dense const &d, long shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0)
      p += LaurentPoly::monomial(d[i], static_cast<long>(i) + shift);
  return p;
}

Integer content(Dense const &p) {
  Integer g = 0;
  for (auto const &c : p)
    g = gcd(g, c);
  return g;
}

void divide_exact(Dense &p, Integer const &c) {
  for (auto &x : p)
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense r, Dense const &b) {
  long const n = degree(b);
  Integer const lb = b.back();
  long e = degree(r) - n + 1;
  while (!r.empty() && degree(r) >= n) {
    Integer const c = r.back();
    long const s = degree(r) - n;
    for (auto &x : r)
      x *= lb;
    for (long i = 0; i <= n; ++i)
      r[static_cast<std::size_t>(i + s)] -= c * b[static_cast<std::size_t>(i)];
    trim(r);
    --e;
  }
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto &x : r)
      x *= f;
  }
  return r;
}

Integer ipow(Integer const &base, long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// gcd of two nonzero polynomials in Z[t] via the subresultant PRS.
Dense dense_gcd(Dense a, Dense b) {
  if (degree(a) < degree(b))
    std::swap(a, b);
  Integer const ca = content(a), cb = content(b);
  Integer const d = gcd(ca, cb);
  divide_exact(a, ca);
  divide_exact(b, cb);
  Integer g = 1, h = 1;
  for (;;) {
    long const delta = degree(a) - degree(b);
    Dense r = pseudo_remainder(a, b);
    if (r.empty())
      break;
    if (degree(r) == 0) {
      b = Dense{1};
      break;
    }
    a = std::move(b);
    divide_exact(r, g * ipow(h, delta));
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  divide_exact(b, content(b));
  for (auto &x : b)
    x *= d;
  return b;
}

} // namespace

LaurentPoly normalize_unit(LaurentPoly const &f) {
  if (f.is_zero())
    throw std::invalid_argument("cannot normalize the zero polynomial");
  LaurentPoly g = f.shifted(-f.min_exponent());
  if (sgn(g.terms().begin()->second) < 0)
    g = -g;
  return g;
}

LaurentPoly poly_gcd(LaurentPoly const &f, LaurentPoly const &g) {
  if (f.is_zero() && g.is_zero())
    return {};
  if (f.is_zero())
    return normalize_unit(g);
  if (g.is_zero())
    return normalize_unit(f);
  long sf = 0, sg = 0;
  Dense df = to_dense(f, sf);
  Dense dg = to_dense(g, sg);
  return normalize_unit(from_dense(dense_gcd(std::move(df), std::move(dg)), 0));
}

std::optional<LaurentPoly> exact_divide(LaurentPoly const &f, LaurentPoly const &g) {
  if (g.is_zero())
    throw std::invalid_argument("division by the zero polynomial");
  if (f.is_zero())
    return LaurentPoly{};
  long sf = 0, sg = 0;
  Dense num = to_dense(f, sf);
  Dense const den = to_dense(g, sg);
  if (degree(num) < degree(den))
    return std::nullopt;
  long const n = degree(den);
  Dense quot(static_cast<std::size_t>(degree(num) - n + 1));
  while (!num.empty() && degree(num) >= n) {
    Integer const &lead = num.back();
    if (!mpz_divisible_p(lead.get_mpz_t(), den.back().get_mpz_t()))
      return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), den.back().get_mpz_t());
    long const s = degree(num) - n;
    quot[static_cast<std::size_t>(s)] = c;
    for (long i = 0; i <= n; ++i)
      num[static_cast<std::size_t>(i + s)] -= c * den[static_cast<std::size_t>(i)];
    trim(num);
  }
  if (!num.empty())
    return std::nullopt;
  return from_dense(quot, sf - sg);
}

// ---------------------------------------------------------------------------
// LaurentMatrix

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix LaurentMatrix::eval_at(long v) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(i, j) = (*this)(i, j).eval_at(v);
  return out;
}

LaurentMatrix LaurentMatrix::submatrix(std::vector<std::size_t> const &rows,
                                       std::vector<std::size_t> const &cols) const {
  LaurentMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

LaurentMatrix operator*(LaurentMatrix const &lhs, LaurentMatrix const &rhs) {
  if (lhs.cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  LaurentMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (lhs(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

LaurentMatrix operator-(LaurentMatrix const &lhs, LaurentMatrix const &rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  LaurentMatrix out(lhs);
  for (std::size_t k = 0; k < out.entries_.size(); ++k)
    out.entries_[k] -= rhs.entries_[k];
  return out;
}

LaurentPoly determinant(LaurentMatrix const &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t const n = m.rows();
  if (n == 0)
    return 1;
  LaurentMatrix a(m);
  LaurentPoly prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero())
        ++r;
      if (r == n)
        return {};
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = exact_divide(num, prev);
        if (!q)
          throw std::logic_error("fraction-free elimination produced an inexact quotient");
        a(i, j) = std::move(*q);
      }
    prev = a(k, k);
  }
  LaurentPoly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

} // namespace kreps
