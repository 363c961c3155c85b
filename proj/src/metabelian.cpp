#include "kreps/metabelian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kreps/int_linalg.hpp"

namespace kreps {

namespace {

long residue(long v, long r) {
  long x = v % r;
  return x < 0 ? x + r : x;
}

} // namespace

BinaryDihedralElt::BinaryDihedralElt(long m, Kind kind, long angle)
    : m_(m), kind_(kind), angle_(0) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("binary dihedral half-modulus must be odd and positive");
  angle_ = residue(angle, 2 * m);
}

BinaryDihedralElt BinaryDihedralElt::inverse() const {
  // R(k)^-1 = R(k) D(m) = R(k - m), and D(k)^-1 = D(-k).
  return kind_ == Kind::diagonal ? diagonal(m_, -angle_) : antidiagonal(m_, angle_ - m_);
}

BinaryDihedralElt bd_mul(BinaryDihedralElt const &x, BinaryDihedralElt const &y) {
  long const m = x.half_modulus();
  if (y.half_modulus() != m)
    throw std::invalid_argument("binary dihedral moduli differ");
  long const a = x.angle(), b = y.angle();
  if (!x.is_antidiagonal() && !y.is_antidiagonal())
    return BinaryDihedralElt::diagonal(m, a + b);
  if (!x.is_antidiagonal())
    return BinaryDihedralElt::antidiagonal(m, a + b);
  if (!y.is_antidiagonal())
    return BinaryDihedralElt::antidiagonal(m, a - b);
  return BinaryDihedralElt::diagonal(m, a - b + m);
}

Integer count_irreducible_metabelian(Integer const &det) {
  if (sgn(det) <= 0 || mpz_even_p(det.get_mpz_t()))
    throw std::invalid_argument("determinant " + det.get_str() + " is not a positive odd integer");
  return (det - 1) / 2;
}

Integer count_from_colorings(Integer const &col_p, long p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("count_from_colorings needs an odd p");
  Integer const num = col_p - p;
  Integer const den = 2 * Integer(p);
  if (sgn(col_p) <= 0 || !mpz_divisible_p(col_p.get_mpz_t(), Integer(p).get_mpz_t()) ||
      !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::invalid_argument("coloring count " + col_p.get_str() + " is not of the form p(2k+1)");
  return num / den;
}

IntMatrix coloring_system(Presentation const &p) { return alexander_matrix(p).eval_at(-1); }

namespace {

bool satisfies(IntMatrix const &system, std::vector<long> const &x, long m) {
  Integer const mod_m = m;
  for (std::size_t i = 0; i < system.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < system.cols(); ++j)
      acc += system(i, j) * x[j];
    if (sgn(mod(acc, mod_m)) != 0)
      return false;
  }
  return true;
}

Assignment lift_coloring(std::vector<long> const &coloring, long m) {
  Assignment out;
  out.reserve(coloring.size());
  for (long c : coloring) {
    long k = residue(c, m);
    if (k % 2 != 0)
      k += m;
    out.push_back(BinaryDihedralElt::antidiagonal(m, k));
  }
  return out;
}

} // namespace

Assignment build_representation(Presentation const &p, std::vector<long> const &coloring, long m) {
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("representation modulus must be odd");
  if (coloring.size() != static_cast<std::size_t>(p.generator_count()))
    throw std::invalid_argument("one color per generator is required");
  if (!satisfies(coloring_system(p), coloring, m))
    throw std::invalid_argument("coloring is not a solution of the presentation mod " +
                                std::to_string(m));
  return lift_coloring(coloring, m);
}

bool verify_representation(Presentation const &p, Assignment const &assignment) {
  if (assignment.size() != static_cast<std::size_t>(p.generator_count()))
    throw std::invalid_argument("assignment must cover every generator");
  if (assignment.empty())
    return true;
  long const m = assignment.front().half_modulus();
  for (auto const &g : assignment)
    if (g.half_modulus() != m)
      throw std::invalid_argument("assignment mixes moduli");
  auto const one = BinaryDihedralElt::identity(m);
  for (auto const &r : p.relators()) {
    BinaryDihedralElt acc = one;
    for (auto const &l : r.letters()) {
      auto const &g = assignment[static_cast<std::size_t>(l.generator - 1)];
      acc = bd_mul(acc, l.sign > 0 ? g : g.inverse());
    }
    if (acc != one)
      return false;
  }
  return true;
}

bool is_irreducible(Assignment const &assignment) {
  if (assignment.empty())
    return false;
  long const m = assignment.front().half_modulus();
  for (auto const &g : assignment)
    if (!g.is_antidiagonal())
      throw std::invalid_argument("is_irreducible expects antidiagonal images only");
  long const first = assignment.front().angle() % m;
  return std::any_of(assignment.begin(), assignment.end(),
                     [&](BinaryDihedralElt const &g) { return g.angle() % m != first; });
}

std::vector<RepClass> enumerate_rep_classes(Presentation const &p) {
  auto const data = elementary_ideal_data(alexander_matrix(p));
  return enumerate_rep_classes(p, data.determinant);
}

std::vector<RepClass> enumerate_rep_classes(Presentation const &p, Integer const &det) {
  Integer const count = count_irreducible_metabelian(det);
  std::vector<RepClass> out;
  if (sgn(count) == 0)
    return out;
  long const m = to_long(det);
  IntMatrix const system = coloring_system(p);
  auto const solutions = enumerate_solutions_mod(system.with_pinned_column(system.cols() - 1), m);
  for (auto const &x : solutions) {
    if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; }))
      continue;
    std::vector<long> neg(x.size());
    std::transform(x.begin(), x.end(), neg.begin(), [m](long v) { return residue(-v, m); });
    if (neg < x)
      continue; // the smaller of the pair represents the class
    out.push_back({m, x, lift_coloring(x, m)});
  }
  return out;
}

} // namespace kreps
