#pragma once

// Exhaustive reference implementations. They share no code path with the
// Smith-form, transport, or Fox-calculus routes they are used to check, and
// they are only meant for desk-scale inputs.

#include <set>
#include <span>
#include <vector>

#include "kreps/int_linalg.hpp"
#include "kreps/integer.hpp"
#include "kreps/presentation.hpp"

namespace kreps::oracle {

/// Determinant by cofactor expansion along the first row.
Integer laplace_determinant(IntMatrix const &m);

/// gcd of every k x k minor, each computed by cofactor expansion.
Integer minor_gcd(IntMatrix const &m, std::size_t k);

/// Every x in (Z/r)^cols with A x = 0 mod r, in lexicographic order.
std::vector<std::vector<long>> solutions_mod(IntMatrix const &m, long r);

/// Number of arc colorings of a closed-braid diagram mod r satisfying
/// 2 * over = incoming + outgoing at every crossing, by backtracking.
/// `pinned_zero` fixes the color of the last arc to 0.
long diagram_colorings(ClosureDiagram const &d, long r, bool pinned_zero = false);

/// Closure of a set of residues under x * y = 2y - x in Z/p.
std::set<long> quandle_closure(std::span<long const> colors, long p);

} // namespace kreps::oracle
