#include "kreps/presentation.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kreps/errors.hpp"

namespace kreps {

Presentation::Presentation(int generator_count, std::vector<FreeWord> relators,
                           std::vector<long> weights)
    : generator_count_(generator_count), relators_(std::move(relators)),
      weights_(std::move(weights)) {
  if (generator_count_ < 1)
    throw std::invalid_argument("presentation needs at least one generator");
  if (weights_.size() != static_cast<std::size_t>(generator_count_))
    throw std::invalid_argument("one abelianization weight per generator is required");
  for (auto const &r : relators_) {
    if (r.rank() != generator_count_)
      throw std::invalid_argument("relator rank does not match the generator count");
    long sum = 0;
    for (auto const &l : r.letters())
      sum += l.sign * weights_[static_cast<std::size_t>(l.generator - 1)];
    if (sum != 0)
      throw std::invalid_argument("relator " + r.to_string() +
                                  " is not in the kernel of the abelianization");
  }
}

namespace {

void append_fixed_point_relators(ArtinAutomorphism const &phi, std::vector<FreeWord> &out) {
  for (int i = 1; i <= phi.rank(); ++i) {
    FreeWord r = FreeWord::generator(phi.rank(), i) * phi.image(i).inverse();
    if (!r.is_identity())
      out.push_back(std::move(r));
  }
}

} // namespace

Presentation closure_presentation(BraidWord const &a) {
  std::vector<FreeWord> relators;
  append_fixed_point_relators(ArtinAutomorphism(a), relators);
  return Presentation(a.strands(), std::move(relators),
                      std::vector<long>(static_cast<std::size_t>(a.strands()), 1));
}

Presentation torus_covering_presentation(BraidWord const &a, BraidWord const &b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("basis braids need the same strand count");
  if (closure_component_count(a) != 1)
    throw NotAKnotError("the closure of the first basis braid is not a knot");
  if (!braids_commute(a, b))
    throw NonCommutingError("basis braids do not commute");
  std::vector<FreeWord> relators;
  append_fixed_point_relators(ArtinAutomorphism(a), relators);
  append_fixed_point_relators(ArtinAutomorphism(b), relators);
  return Presentation(a.strands(), std::move(relators),
                      std::vector<long>(static_cast<std::size_t>(a.strands()), 1));
}

LaurentPoly fox_derivative_abelianized(FreeWord const &r, int j, std::vector<long> const &weights) {
  if (j < 1 || j > r.rank())
    throw std::invalid_argument("Fox derivative generator out of range");
  if (weights.size() != static_cast<std::size_t>(r.rank()))
    throw std::invalid_argument("one weight per generator is required");
  LaurentPoly out;
  long prefix = 0; // exponent of the abelianized prefix
  for (auto const &l : r.letters()) {
    long const w = weights[static_cast<std::size_t>(l.generator - 1)];
    if (l.sign > 0) {
      if (l.generator == j)
        out += LaurentPoly::monomial(1, prefix);
      prefix += w;
    } else {
      prefix -= w;
      if (l.generator == j)
        out -= LaurentPoly::monomial(1, prefix);
    }
  }
  return out;
}

LaurentMatrix alexander_matrix(Presentation const &p) {
  auto const rows = p.relators().size();
  auto const cols = static_cast<std::size_t>(p.generator_count());
  LaurentMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = fox_derivative_abelianized(p.relators()[i], static_cast<int>(j) + 1, p.weights());
  return m;
}

// ---------------------------------------------------------------------------
// Diagram route

ClosureDiagram closure_diagram(BraidWord const &a) {
  if (a.length() == 0)
    throw std::invalid_argument("closure diagram needs at least one crossing");
  auto const n = static_cast<std::size_t>(a.strands());
  std::vector<std::size_t> at(n); // arc currently occupying each position
  std::iota(at.begin(), at.end(), std::size_t{0});
  std::size_t next = n;
  std::vector<Crossing> raw;
  raw.reserve(a.length());
  for (auto const &l : a.letters()) {
    auto const left = static_cast<std::size_t>(l.index - 1);
    auto const right = left + 1;
    Crossing c{};
    c.sign = l.sign;
    c.outgoing = next++;
    if (l.sign > 0) {
      c.over = at[left];
      c.incoming = at[right];
      at[right] = c.over;
      at[left] = c.outgoing;
    } else {
      c.over = at[right];
      c.incoming = at[left];
      at[left] = c.over;
      at[right] = c.outgoing;
    }
    raw.push_back(c);
  }

  // Closing the braid glues the arc leaving each bottom position to the arc
  // entering the same top position.
  std::vector<std::size_t> parent(next);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t p = 0; p < n; ++p)
    parent[find(at[p])] = find(p);

  std::vector<std::size_t> label(next, next);
  std::size_t count = 0;
  for (std::size_t x = 0; x < next; ++x) {
    std::size_t root = find(x);
    if (label[root] == next)
      label[root] = count++;
  }
  ClosureDiagram d;
  d.arc_count = count;
  d.crossings.reserve(raw.size());
  for (auto const &c : raw)
    d.crossings.push_back(
        {label[find(c.over)], label[find(c.incoming)], label[find(c.outgoing)], c.sign});
  return d;
}

LaurentMatrix coloring_matrix(ClosureDiagram const &d) {
  LaurentMatrix m(d.crossings.size(), d.arc_count);
  LaurentPoly const t = LaurentPoly::t();
  for (std::size_t r = 0; r < d.crossings.size(); ++r) {
    auto const &c = d.crossings[r];
    std::size_t const xi = c.sign > 0 ? c.outgoing : c.incoming;
    std::size_t const xk = c.sign > 0 ? c.incoming : c.outgoing;
    m(r, xi) += t;
    m(r, c.over) += LaurentPoly(1) - t;
    m(r, xk) -= LaurentPoly(1);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Burau oracle

LaurentMatrix reduced_burau(BraidWord const &a) {
  auto const dim = static_cast<std::size_t>(a.strands() - 1);
  LaurentMatrix acc = LaurentMatrix::identity(dim);
  LaurentPoly const t = LaurentPoly::t();
  LaurentPoly const t_inv = LaurentPoly::monomial(1, -1);
  for (auto const &l : a.letters()) {
    auto const c = static_cast<std::size_t>(l.index - 1); // column of the block
    LaurentMatrix g = LaurentMatrix::identity(dim);
    if (l.sign > 0) {
      g(c, c) = -t;
      if (c >= 1)
        g(c - 1, c) = t;
      if (c + 1 < dim)
        g(c + 1, c) = 1;
    } else {
      g(c, c) = -t_inv;
      if (c >= 1)
        g(c - 1, c) = 1;
      if (c + 1 < dim)
        g(c + 1, c) = t_inv;
    }
    acc = acc * g;
  }
  return acc;
}

LaurentPoly burau_alexander(BraidWord const &a) {
  if (closure_component_count(a) != 1)
    throw NotAKnotError("the closure of the braid is not a knot");
  int const n = a.strands();
  if (n == 1)
    return 1;
  auto const dim = static_cast<std::size_t>(n - 1);
  LaurentPoly const det = determinant(LaurentMatrix::identity(dim) - reduced_burau(a));
  LaurentPoly const num = det * (LaurentPoly(1) - LaurentPoly::t());
  LaurentPoly const den = LaurentPoly(1) - LaurentPoly::monomial(1, n);
  auto q = exact_divide(num, den);
  if (!q || q->is_zero())
    throw InternalError("Burau determinant " + det.to_string() + " is not divisible by 1 + ... + t^" +
                        std::to_string(n - 1));
  return normalize_unit(*q);
}

// ---------------------------------------------------------------------------
// Elementary ideal

namespace {

// Calls f on every increasing k-subset of {0..n-1}; stops when f returns false.
bool for_each_subset(std::size_t n, std::size_t k,
                     std::function<bool(std::vector<std::size_t> const &)> const &f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n)
    return true;
  for (;;) {
    if (!f(idx))
      return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1))
      --i;
    if (i == 0)
      return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

LaurentPoly minor_gcd(LaurentMatrix const &m, std::size_t k) {
  if (k == 0)
    return 1;
  // Zero rows contribute only vanishing minors.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        live.push_back(i);
        break;
      }
  LaurentPoly g;
  LaurentPoly const one = 1;
  for_each_subset(m.cols(), k, [&](std::vector<std::size_t> const &cols) {
    return for_each_subset(live.size(), k, [&](std::vector<std::size_t> const &pick) {
      std::vector<std::size_t> rows(pick.size());
      for (std::size_t i = 0; i < pick.size(); ++i)
        rows[i] = live[pick[i]];
      g = poly_gcd(g, determinant(m.submatrix(rows, cols)));
      return g != one;
    });
  });
  return g;
}

ElementaryIdealData elementary_ideal_data(LaurentMatrix const &m) {
  std::size_t const cols = m.cols();
  if (cols == 0)
    throw std::invalid_argument("Alexander matrix needs at least one column");
  if (cols == 1)
    return {LaurentPoly(1), Integer(1)};
  std::size_t const k = cols - 1;
  if (m.rows() < k)
    return {LaurentPoly(), Integer(0)};
  return {minor_gcd(m, k), determinantal_divisor(m.eval_at(-1), k)};
}

} // namespace kreps
