#include "kreps/colorings.hpp"

#include <numeric>
#include <stdexcept>

#include "kreps/errors.hpp"

namespace kreps {

namespace {

long residue(long v, long r) {
  long x = v % r;
  return x < 0 ? x + r : x;
}

} // namespace

long dihedral_op(long x, long y, long p) {
  if (p < 2)
    throw std::invalid_argument("dihedral quandle needs p >= 2");
  return residue(2 * residue(y, p) - residue(x, p), p);
}

long generated_subgroup(std::span<long const> colors, long p) {
  if (colors.empty())
    throw std::invalid_argument("generated_subgroup needs at least one color");
  if (p < 2)
    throw std::invalid_argument("dihedral quandle needs p >= 2");
  long const base = colors.front();
  long d = p;
  for (long c : colors)
    d = std::gcd(d, residue(c - base, p));
  return d;
}

ColoringCensus census_of_system(IntMatrix const &m, long r) {
  if (r < 2)
    throw std::invalid_argument("coloring modulus must be at least 2");
  if (m.cols() == 0)
    throw std::invalid_argument("coloring system needs at least one column");
  ColoringCensus c;
  c.modulus = r;
  c.total = solution_count_mod(m, r);
  c.nontrivial = c.total - r;
  IntMatrix const pinned = m.with_pinned_column(m.cols() - 1);
  c.condition_o = solution_count_mod(pinned, r);
  if (sgn(c.nontrivial) > 0)
    c.nondegenerate = is_p_colorable(m, r);
  return c;
}

ColoringCensus coloring_census(LaurentMatrix const &m, long r) {
  return census_of_system(m.eval_at(-1), r);
}

bool is_p_colorable(IntMatrix const &m, long p) {
  if (p < 2)
    throw std::invalid_argument("coloring modulus must be at least 2");
  if (m.cols() == 0)
    return false;
  for (auto const &x : enumerate_solutions_mod(m.with_pinned_column(m.cols() - 1), p))
    if (generated_subgroup(x, p) == 1)
      return true;
  return false;
}

bool is_p_colorable(LaurentMatrix const &m, long p) { return is_p_colorable(m.eval_at(-1), p); }

std::vector<long> dihedral_transport(BraidWord const &a, std::span<long const> colors, long r) {
  if (colors.size() != static_cast<std::size_t>(a.strands()))
    throw std::invalid_argument("one color per strand is required");
  if (r < 2)
    throw std::invalid_argument("coloring modulus must be at least 2");
  std::vector<long> x(colors.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = residue(colors[i], r);
  for (auto const &l : a.letters()) {
    auto const i = static_cast<std::size_t>(l.index - 1);
    long const left = x[i], right = x[i + 1];
    if (l.sign > 0) {
      x[i] = dihedral_op(right, left, r);
      x[i + 1] = left;
    } else {
      x[i] = right;
      x[i + 1] = dihedral_op(left, right, r);
    }
  }
  return x;
}

IntMatrix transport_matrix(BraidWord const &a) {
  auto const n = static_cast<std::size_t>(a.strands());
  IntMatrix t = IntMatrix::identity(n);
  // Row operations mirror the per-letter update of the color vector.
  for (auto const &l : a.letters()) {
    auto const i = static_cast<std::size_t>(l.index - 1);
    for (std::size_t j = 0; j < n; ++j) {
      Integer const left = t(i, j), right = t(i + 1, j);
      if (l.sign > 0) {
        t(i, j) = 2 * left - right;
        t(i + 1, j) = left;
      } else {
        t(i, j) = right;
        t(i + 1, j) = 2 * right - left;
      }
    }
  }
  return t;
}

IntMatrix surface_transport_system(BraidWord const &a, BraidWord const &b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("basis braids need the same strand count");
  auto const n = static_cast<std::size_t>(a.strands());
  IntMatrix ta = transport_matrix(a);
  IntMatrix tb = transport_matrix(b);
  for (std::size_t i = 0; i < n; ++i) {
    ta(i, i) -= 1;
    tb(i, i) -= 1;
  }
  return ta.stacked(tb);
}

ColoringCensus surface_coloring_census(BraidWord const &a, BraidWord const &b, long r) {
  if (!braids_commute(a, b))
    throw NonCommutingError("basis braids do not commute");
  return census_of_system(surface_transport_system(a, b), r);
}

std::vector<std::pair<long, Integer>> colorability_profile(BraidWord const &a, BraidWord const &b,
                                                           long r_max) {
  if (r_max < 2)
    throw std::invalid_argument("profile needs r_max >= 2");
  if (!braids_commute(a, b))
    throw NonCommutingError("basis braids do not commute");
  IntMatrix const system = surface_transport_system(a, b);
  SNFResult const snf = smith_normal_form(system.with_pinned_column(system.cols() - 1));
  std::vector<std::pair<long, Integer>> out;
  out.reserve(static_cast<std::size_t>(r_max - 1));
  for (long r = 2; r <= r_max; ++r)
    out.emplace_back(r, solution_count_mod(snf, system.cols(), r));
  return out;
}

} // namespace kreps
