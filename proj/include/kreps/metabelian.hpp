#pragma once

#include <vector>

#include "kreps/integer.hpp"
#include "kreps/presentation.hpp"

namespace kreps {

/// Exact element of the binary dihedral subgroup of SU(2) of order 4m.
///
/// With zeta = exp(i pi / m):
///   D(k) = diag(zeta^k, zeta^-k)
///   R(k) = [[0, zeta^k], [-zeta^-k, 0]]
/// and angles are residues mod 2m. m must be odd.
class BinaryDihedralElt {
public:
  enum class Kind { diagonal, antidiagonal };

  static BinaryDihedralElt diagonal(long m, long angle) { return {m, Kind::diagonal, angle}; }
  static BinaryDihedralElt antidiagonal(long m, long angle) { return {m, Kind::antidiagonal, angle}; }
  static BinaryDihedralElt identity(long m) { return diagonal(m, 0); }

  long half_modulus() const noexcept { return m_; }
  long modulus() const noexcept { return 2 * m_; }
  Kind kind() const noexcept { return kind_; }
  bool is_antidiagonal() const noexcept { return kind_ == Kind::antidiagonal; }
  long angle() const noexcept { return angle_; }

  BinaryDihedralElt inverse() const;

  friend bool operator==(BinaryDihedralElt const &, BinaryDihedralElt const &) = default;

private:
  BinaryDihedralElt(long m, Kind kind, long angle);

  long m_;
  Kind kind_;
  long angle_;
};

/// Group law:
///   D(a)D(b) = D(a+b)   D(a)R(b) = R(a+b)
///   R(b)D(a) = R(b-a)   R(a)R(b) = D(a-b+m)
/// Throws std::invalid_argument on modulus mismatch.
BinaryDihedralElt bd_mul(BinaryDihedralElt const &x, BinaryDihedralElt const &y);

/// (det - 1) / 2. Throws std::invalid_argument for even or nonpositive det.
Integer count_irreducible_metabelian(Integer const &det);

/// (|Col_p| - p) / (2p). Throws std::invalid_argument on divisibility failure.
Integer count_from_colorings(Integer const &col_p, long p);

using Assignment = std::vector<BinaryDihedralElt>;

/// One conjugacy class of irreducible metabelian SU(2)-representations.
struct RepClass {
  long modulus;                ///< odd m; colors live in Z/m
  std::vector<long> coloring;  ///< base generator colored 0
  Assignment assignment;       ///< generator i -> R(k_i), k_i even lift of the color
};

/// The Fox matrix of `p` at t = -1: its solutions mod m are the m-colorings.
IntMatrix coloring_system(Presentation const &p);

/// Sends generator i to R(k_i), k_i the even residue mod 2m congruent to
/// coloring[i] mod m. Throws std::invalid_argument for even m or when the
/// coloring is not a solution mod m.
Assignment build_representation(Presentation const &p, std::vector<long> const &coloring, long m);

/// Every relator evaluates to D(0). Throws std::invalid_argument when the
/// assignment size or moduli are inconsistent.
bool verify_representation(Presentation const &p, Assignment const &assignment);

/// True iff two of the (antidiagonal) angles differ mod m. Throws
/// std::invalid_argument if a diagonal image is present.
bool is_irreducible(Assignment const &assignment);

/// Condition-O colorings mod det, minus zero, up to x -> -x, each realized
/// exactly. The list has (det - 1) / 2 entries. Throws std::invalid_argument
/// for an even determinant.
std::vector<RepClass> enumerate_rep_classes(Presentation const &p);

/// Same, with the determinant already known.
std::vector<RepClass> enumerate_rep_classes(Presentation const &p, Integer const &det);

} // namespace kreps
