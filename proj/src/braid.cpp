#include "kreps/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "kreps/errors.hpp"

namespace kreps {

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw std::invalid_argument("braid needs at least one strand");
  for (auto const &l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw std::invalid_argument("braid generator index " + std::to_string(l.index) +
                                  " out of range for " + std::to_string(strands_) +
                                  " strands");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("braid letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->index, -it->sign});
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(long k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  std::vector<BraidLetter> out;
  long reps = k < 0 ? -k : k;
  out.reserve(static_cast<std::size_t>(reps) * letters_.size());
  for (long r = 0; r < reps; ++r)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (auto const &l : letters_) {
    if (!out.empty())
      out += ' ';
    if (l.sign < 0)
      out += '-';
    out += std::to_string(l.index);
  }
  return out;
}

BraidWord operator*(BraidWord const &lhs, BraidWord const &rhs) {
  if (lhs.strands_ != rhs.strands_)
    throw std::invalid_argument("braid strand counts differ");
  std::vector<BraidLetter> out(lhs.letters_);
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(lhs.strands_, std::move(out));
}

// ---------------------------------------------------------------------------
// FreeWord

namespace {

// Appends `l` to a reduced word, cancelling against the last letter.
void push_reduced(std::vector<FreeLetter> &word, FreeLetter l) {
  if (!word.empty() && word.back().generator == l.generator && word.back().sign == -l.sign)
    word.pop_back();
  else
    word.push_back(l);
}

} // namespace

FreeWord::FreeWord(int rank, std::vector<FreeLetter> letters) : rank_(rank) {
  if (rank_ < 1)
    throw std::invalid_argument("free group rank must be positive");
  letters_.reserve(letters.size());
  for (auto const &l : letters) {
    if (l.generator < 1 || l.generator > rank_)
      throw std::invalid_argument("free generator out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("free letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(int rank, int i) { return FreeWord(rank, {{i, 1}}); }

FreeWord FreeWord::inverse() const {
  std::vector<FreeLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->generator, -it->sign});
  FreeWord w(rank_);
  w.letters_ = std::move(out);
  return w;
}

long FreeWord::exponent_sum() const noexcept {
  long s = 0;
  for (auto const &l : letters_)
    s += l.sign;
  return s;
}

std::string FreeWord::to_string() const {
  if (letters_.empty())
    return "1";
  std::string out;
  for (auto const &l : letters_) {
    out += "t" + std::to_string(l.generator);
    if (l.sign < 0)
      out += "^-1";
  }
  return out;
}

FreeWord operator*(FreeWord const &lhs, FreeWord const &rhs) {
  if (lhs.rank_ != rhs.rank_)
    throw std::invalid_argument("free word ranks differ");
  FreeWord w(lhs);
  for (auto const &l : rhs.letters_)
    push_reduced(w.letters_, l);
  return w;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(image_.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (seen[s])
      continue;
    ++cycles;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(image_[i] - 1))
      seen[i] = true;
  }
  return cycles;
}

Permutation operator*(Permutation const &f, Permutation const &g) {
  if (f.size() != g.size())
    throw std::invalid_argument("permutation sizes differ");
  std::vector<int> img(f.image_.size());
  for (int i = 1; i <= g.size(); ++i)
    img[static_cast<std::size_t>(i - 1)] = f(g(i));
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

long parse_int(std::string_view s, std::string_view token) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed braid token '" + std::string(token) + "'");
  return v;
}

} // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1)
    throw ParseError("strand count must be at least 1");
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view body = token;
    int sign = 1;
    if (body.front() == '-' || body.front() == '+') {
      sign = body.front() == '-' ? -1 : 1;
      body.remove_prefix(1);
    }
    long exponent = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(body.substr(caret + 1), token);
      body = body.substr(0, caret);
      if (exponent <= 0)
        throw ParseError("exponent must be positive in '" + token + "'");
    }
    long index = parse_int(body, token);
    if (index < 1 || index > strands - 1)
      throw ParseError("generator index " + std::to_string(index) + " out of range 1.." +
                       std::to_string(strands - 1));
    for (long e = 0; e < exponent; ++e)
      letters.push_back({static_cast<int>(index), sign});
  }
  return BraidWord(strands, std::move(letters));
}

// ---------------------------------------------------------------------------
// Closure permutation

Permutation closure_permutation(BraidWord const &a) {
  std::vector<int> img(static_cast<std::size_t>(a.strands()));
  for (int i = 0; i < a.strands(); ++i)
    img[static_cast<std::size_t>(i)] = i + 1;
  // img <- img o (i i+1) is a swap of two entries.
  for (auto const &l : a.letters())
    std::swap(img[static_cast<std::size_t>(l.index - 1)], img[static_cast<std::size_t>(l.index)]);
  return Permutation(std::move(img));
}

int closure_component_count(BraidWord const &a) { return closure_permutation(a).cycle_count(); }

// ---------------------------------------------------------------------------
// Artin action

ArtinAutomorphism::ArtinAutomorphism(BraidWord const &a) {
  int const n = a.strands();
  images_.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    images_.push_back(FreeWord::generator(n, i));
  // phi_{w sigma} = phi_w o A^sigma: the new images of t_i, t_{i+1} are phi
  // applied to the single-letter formulas.
  for (auto const &l : a.letters()) {
    auto &ti = images_[static_cast<std::size_t>(l.index - 1)];
    auto &tj = images_[static_cast<std::size_t>(l.index)];
    if (l.sign > 0) {
      FreeWord new_i = ti * tj * ti.inverse();
      tj = ti;
      ti = std::move(new_i);
    } else {
      FreeWord new_j = tj.inverse() * ti * tj;
      ti = tj;
      tj = std::move(new_j);
    }
  }
}

FreeWord ArtinAutomorphism::operator()(FreeWord const &w) const {
  if (w.rank() != rank())
    throw std::invalid_argument("free word rank does not match braid strands");
  FreeWord out(rank());
  for (auto const &l : w.letters()) {
    auto const &img = images_[static_cast<std::size_t>(l.generator - 1)];
    out = out * (l.sign > 0 ? img : img.inverse());
  }
  return out;
}

FreeWord artin_act(BraidWord const &a, FreeWord const &w) {
  if (w.rank() != a.strands())
    throw std::invalid_argument("free word rank does not match braid strands");
  return ArtinAutomorphism(a)(w);
}

bool braids_commute(BraidWord const &a, BraidWord const &b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("braid strand counts differ");
  ArtinAutomorphism ab(a * b);
  ArtinAutomorphism ba(b * a);
  for (int i = 1; i <= a.strands(); ++i)
    if (ab.image(i) != ba.image(i))
      return false;
  return true;
}

BraidWord full_twist(int n) {
  if (n < 2)
    throw std::invalid_argument("full twist needs n >= 2");
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>(n * (n - 1)));
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i)
      letters.push_back({i, 1});
  return BraidWord(n, std::move(letters));
}

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0)
    return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      return false;
  return true;
}

FamilyBraids corollary_family(int n, int p, std::span<int const> signs, std::span<int const> perm,
                              long m) {
  if (n < 2)
    throw std::invalid_argument("family needs n >= 2");
  if (!is_odd_prime(p))
    throw std::invalid_argument("family needs an odd prime p");
  auto const k = static_cast<std::size_t>(n - 1);
  if (signs.size() != k || perm.size() != k)
    throw std::invalid_argument("family needs n-1 signs and a permutation of 1..n-1");
  // Validates that perm is a bijection of {1..n-1}.
  Permutation s(std::vector<int>(perm.begin(), perm.end()));
  std::vector<BraidLetter> letters;
  for (std::size_t i = 0; i < k; ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw std::invalid_argument("family signs must be +1 or -1");
    for (int e = 0; e < p; ++e)
      letters.push_back({s(static_cast<int>(i) + 1), signs[i]});
  }
  int const l = n % 2 == 1 ? 2 : p;
  BraidWord c(n, std::move(letters));
  BraidWord b = full_twist(n).power(static_cast<long>(l) * m);
  return {std::move(c), std::move(b), l};
}

} // namespace kreps
