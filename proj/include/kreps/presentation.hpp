#pragma once

#include <cstddef>
#include <vector>

#include "kreps/braid.hpp"
#include "kreps/integer.hpp"
#include "kreps/laurent.hpp"

namespace kreps {

/// A finite group presentation <t_1..t_m | r_1..r_k> together with the
/// abelianization t_j -> t^{weights[j]}.
class Presentation {
public:
  /// Throws std::invalid_argument if a relator has the wrong rank or a
  /// nonzero weighted exponent sum.
  Presentation(int generator_count, std::vector<FreeWord> relators, std::vector<long> weights);

  int generator_count() const noexcept { return generator_count_; }
  std::vector<FreeWord> const &relators() const noexcept { return relators_; }
  std::vector<long> const &weights() const noexcept { return weights_; }

private:
  int generator_count_;
  std::vector<FreeWord> relators_;
  std::vector<long> weights_;
};

/// <t_1..t_n | t_i (A^a(t_i))^-1>, trivial relators dropped, weights all 1.
Presentation closure_presentation(BraidWord const &a);

/// Knot group of the torus-covering T^2-knot with basis braids (a, b):
/// relators t_i (A^a(t_i))^-1 and t_i (A^b(t_i))^-1.
///
/// Throws NonCommutingError or NotAKnotError when the preconditions fail.
Presentation torus_covering_presentation(BraidWord const &a, BraidWord const &b);

/// The abelianized free derivative of `r` with respect to t_j.
LaurentPoly fox_derivative_abelianized(FreeWord const &r, int j, std::vector<long> const &weights);

/// Rows are relators, columns are generators.
LaurentMatrix alexander_matrix(Presentation const &p);

/// One crossing of a closed braid diagram. Arc ids are 0-based.
struct Crossing {
  std::size_t over;
  std::size_t incoming;
  std::size_t outgoing;
  int sign;

  friend bool operator==(Crossing const &, Crossing const &) = default;
};

/// Arcs and crossings of the standard diagram of a closed braid. A positive
/// letter sigma_i has the left strand crossing over the right one.
struct ClosureDiagram {
  std::size_t arc_count = 0;
  std::vector<Crossing> crossings;
};

/// Throws std::invalid_argument for the empty word.
ClosureDiagram closure_diagram(BraidWord const &a);

/// One row per crossing: t at the arc x_i, 1 - t at the over arc x_j and -1
/// at x_k, for the Alexander quandle relation x_i * x_j = x_k. A positive
/// crossing has x_i the outgoing and x_k the incoming under-arc; a negative
/// crossing the reverse. Coincident indices accumulate.
LaurentMatrix coloring_matrix(ClosureDiagram const &d);

/// Reduced Burau matrix of a braid, (n-1) x (n-1).
LaurentMatrix reduced_burau(BraidWord const &a);

/// Alexander polynomial of the closure via det(I - Burau) (1 - t) / (1 - t^n).
/// Throws NotAKnotError if the closure is not a knot.
LaurentPoly burau_alexander(BraidWord const &a);

struct ElementaryIdealData {
  /// Normalized gcd of the (m-1)-minors.
  LaurentPoly alexander_poly;
  /// (m-1)-th determinantal divisor of the matrix at t = -1.
  Integer determinant;
};

/// Throws std::invalid_argument when the matrix has no columns.
ElementaryIdealData elementary_ideal_data(LaurentMatrix const &m);

/// Normalized gcd of all k x k minors.
LaurentPoly minor_gcd(LaurentMatrix const &m, std::size_t k);

} // namespace kreps
