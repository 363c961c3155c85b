#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kreps {

/// One letter sigma_index^sign of a braid word. Indices are 1-based.
struct BraidLetter {
  int index;
  int sign;

  friend bool operator==(BraidLetter const &, BraidLetter const &) = default;
};

/// A word in the standard generators of the n-strand braid group.
///
/// Letters are stored one by one; runs such as `1^3` are expanded at parse
/// time. The empty word is the identity braid.
class BraidWord {
public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const noexcept { return strands_; }
  std::span<BraidLetter const> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity_word() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  /// k-fold concatenation; negative k uses the inverse word.
  BraidWord power(long k) const;

  /// Text form accepted by parse_braid, e.g. `1 -2 1`.
  std::string to_string() const;

  friend BraidWord operator*(BraidWord const &lhs, BraidWord const &rhs);
  friend bool operator==(BraidWord const &, BraidWord const &) = default;

private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// One letter t_generator^sign of a free-group word. Generators are 1-based.
struct FreeLetter {
  int generator;
  int sign;

  friend bool operator==(FreeLetter const &, FreeLetter const &) = default;
  friend auto operator<=>(FreeLetter const &, FreeLetter const &) = default;
};

/// A freely reduced word in the free group F_rank = <t_1, ..., t_rank>.
class FreeWord {
public:
  explicit FreeWord(int rank, std::vector<FreeLetter> letters = {});

  static FreeWord generator(int rank, int i);

  int rank() const noexcept { return rank_; }
  std::span<FreeLetter const> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  /// Sum of the signs of all letters.
  long exponent_sum() const noexcept;
  std::string to_string() const;

  friend FreeWord operator*(FreeWord const &lhs, FreeWord const &rhs);
  friend bool operator==(FreeWord const &, FreeWord const &) = default;
  friend auto operator<=>(FreeWord const &, FreeWord const &) = default;

private:
  int rank_;
  std::vector<FreeLetter> letters_;
};

/// A bijection of {1, ..., n}.
class Permutation {
public:
  static Permutation identity(int n);
  /// Throws std::invalid_argument unless `image` lists 1..n exactly once.
  explicit Permutation(std::vector<int> image);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
  std::span<int const> image() const noexcept { return image_; }
  int cycle_count() const;

  /// Function composition: (f * g)(i) = f(g(i)).
  friend Permutation operator*(Permutation const &f, Permutation const &g);
  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  std::vector<int> image_;
};

/// Parses whitespace-separated tokens `i`, `-i`, `+i`, `i^e`, `-i^e`.
/// Throws ParseError on malformed tokens, out-of-range indices, or e <= 0.
BraidWord parse_braid(std::string_view text, int strands);

/// Product of the transpositions (i i+1) of the letters, composed as
/// functions in word order. perm(ab) == perm(a) * perm(b).
Permutation closure_permutation(BraidWord const &a);

/// Number of components of the closure of `a`. One means a knot.
int closure_component_count(BraidWord const &a);

/// Artin's automorphism of F_n attached to a braid, stored as the images of
/// the generators. Composition follows A^{ab} = A^a o A^b.
class ArtinAutomorphism {
public:
  explicit ArtinAutomorphism(BraidWord const &a);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  FreeWord const &image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  FreeWord operator()(FreeWord const &w) const;

private:
  std::vector<FreeWord> images_;
};

/// Applies A^a to w. Throws std::invalid_argument on rank mismatch.
FreeWord artin_act(BraidWord const &a, FreeWord const &w);

/// True iff ab and ba induce the same automorphism of F_n (faithfulness of
/// the Artin representation makes this an exact test).
bool braids_commute(BraidWord const &a, BraidWord const &b);

/// (sigma_1 ... sigma_{n-1})^n. Requires n >= 2.
BraidWord full_twist(int n);

struct FamilyBraids {
  BraidWord c;
  BraidWord b;
  /// 2 when n is odd, p when n is even.
  int l;
};

/// c = prod sigma_{perm(i)}^{signs[i] p}, b = full_twist(n)^{l m}.
///
/// `perm` lists the images of 1..n-1; `signs` are +1/-1. Throws
/// std::invalid_argument when p is not an odd prime or shapes mismatch.
FamilyBraids corollary_family(int n, int p, std::span<int const> signs,
                              std::span<int const> perm, long m);

bool is_odd_prime(long p);

} // namespace kreps
