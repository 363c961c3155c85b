#include "kreps/oracles.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace kreps::oracle {

Integer laplace_determinant(IntMatrix const &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t const n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0)
      continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c)
          minor(i - 1, jj++) = m(i, j);
    Integer term = m(0, c) * laplace_determinant(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::vector<std::size_t> &cur, std::size_t start,
             std::vector<std::vector<std::size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, cur, 0, out);
  return out;
}

long residue(long v, long r) {
  long x = v % r;
  return x < 0 ? x + r : x;
}

} // namespace

Integer minor_gcd(IntMatrix const &m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor size out of range");
  if (k == 0)
    return 1;
  Integer g = 0;
  for (auto const &rows : all_subsets(m.rows(), k))
    for (auto const &cols : all_subsets(m.cols(), k)) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          sub(i, j) = m(rows[i], cols[j]);
      g = gcd(g, laplace_determinant(sub));
    }
  return g;
}

std::vector<std::vector<long>> solutions_mod(IntMatrix const &m, long r) {
  std::size_t const n = m.cols();
  std::vector<std::vector<long>> out;
  std::vector<long> x(n, 0);
  Integer const mod_r = r;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        acc += m(i, j) * x[j];
      ok = sgn(mod(acc, mod_r)) == 0;
    }
    if (ok)
      out.push_back(x);
    // Odometer with the last coordinate fastest gives lexicographic order.
    std::size_t pos = n;
    while (pos > 0 && ++x[pos - 1] == r) {
      x[pos - 1] = 0;
      --pos;
    }
    if (pos == 0)
      break;
  }
  return out;
}

long diagram_colorings(ClosureDiagram const &d, long r, bool pinned_zero) {
  std::size_t const arcs = d.arc_count;
  // Constraints become checkable once their highest-numbered arc is colored.
  std::vector<std::vector<Crossing>> ready(arcs);
  for (auto const &c : d.crossings)
    ready[std::max({c.over, c.incoming, c.outgoing})].push_back(c);
  std::vector<long> color(arcs, 0);
  std::function<long(std::size_t)> place = [&](std::size_t arc) -> long {
    if (arc == arcs)
      return 1;
    long count = 0;
    long const hi = (pinned_zero && arc + 1 == arcs) ? 1 : r;
    for (long v = 0; v < hi; ++v) {
      color[arc] = v;
      bool ok = true;
      for (auto const &c : ready[arc])
        if (residue(2 * color[c.over] - color[c.incoming] - color[c.outgoing], r) != 0) {
          ok = false;
          break;
        }
      if (ok)
        count += place(arc + 1);
    }
    return count;
  };
  return place(0);
}

std::set<long> quandle_closure(std::span<long const> colors, long p) {
  std::set<long> s;
  for (long c : colors)
    s.insert(residue(c, p));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<long> cur(s.begin(), s.end());
    for (long x : cur)
      for (long y : cur)
        if (s.insert(residue(2 * y - x, p)).second)
          grew = true;
  }
  return s;
}

} // namespace kreps::oracle
