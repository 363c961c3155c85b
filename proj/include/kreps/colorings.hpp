#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kreps/braid.hpp"
#include "kreps/int_linalg.hpp"
#include "kreps/integer.hpp"
#include "kreps/laurent.hpp"

namespace kreps {

/// Fox r-coloring census of a knot, computed from a coloring system whose
/// solutions mod r are the r-colorings.
struct ColoringCensus {
  long modulus = 0;
  Integer total;
  /// total minus the r constant colorings.
  Integer nontrivial;
  /// Some coloring generates the dihedral quandle R_r.
  bool nondegenerate = false;
  /// Colorings with the base generator (last column) colored 0.
  Integer condition_o;
};

/// x * y = 2y - x in R_p.
long dihedral_op(long x, long y, long p);

/// Translates the colors so that one of them is 0 and returns the gcd of
/// the translated colors with p: the colors generate d Z / p Z under *, so
/// they generate R_p iff the result is 1. Requires nonempty colors.
long generated_subgroup(std::span<long const> colors, long p);

/// Census of the integer system `m` (one column per colored object, every
/// row summing to zero). The base object is the last column.
ColoringCensus census_of_system(IntMatrix const &m, long r);

/// Census of a Laurent coloring or Alexander matrix, evaluated at t = -1.
ColoringCensus coloring_census(LaurentMatrix const &m, long r);

/// True iff some coloring mod p generates R_p. Only colorings with the base
/// colored 0 are scanned, which suffices by translation.
bool is_p_colorable(IntMatrix const &m, long p);
bool is_p_colorable(LaurentMatrix const &m, long p);

/// Pushes strand-top colors down through the braid, letter by letter: at a
/// crossing the under strand's color c becomes 2o - c for over color o.
/// Colorings of the closure are exactly the fixed points.
std::vector<long> dihedral_transport(BraidWord const &a, std::span<long const> colors, long r);

/// The transport map as an integer matrix: transport(x) = T x (mod r).
IntMatrix transport_matrix(BraidWord const &a);

/// Colorings of the torus-covering T^2-knot with basis braids (a, b): the
/// common fixed points of both transports. Throws NonCommutingError.
ColoringCensus surface_coloring_census(BraidWord const &a, BraidWord const &b, long r);

/// (r, condition-O count) for r = 2..r_max, from the transport system.
std::vector<std::pair<long, Integer>> colorability_profile(BraidWord const &a, BraidWord const &b,
                                                           long r_max);

/// Integer system whose solutions mod r are the colorings of S_n(a, b):
/// rows of T_a - I stacked over T_b - I.
IntMatrix surface_transport_system(BraidWord const &a, BraidWord const &b);

} // namespace kreps
