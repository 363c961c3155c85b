#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kreps/integer.hpp"
#include "kreps/sweep.hpp"

namespace kreps {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct ClassRecord {
  long modulus;               ///< m; colors are residues mod m
  std::vector<long> coloring;
  std::vector<long> angles;   ///< k with generator i -> R(k), residues mod 2m
};

struct ColoringRecord {
  long r;
  Integer total;
  Integer condition_o;
};

struct ReportInput {
  std::vector<std::string> braids;
  int strands = 0;
  std::optional<long> fulltwist;
  long rmax = 0;
};

/// Alexander data of the closure of the first braid of a surface.
struct ClosureRecord {
  std::string braid;
  std::string alexander_poly;
  Integer determinant;
};

struct FamilyRecord {
  int n;
  int p;
  long m;
  std::vector<int> signs;
  std::vector<int> perm;
  int l;
  Integer expected_count;     ///< (p^{n-1} - 1) / 2
  Integer expected_colorings; ///< p^n
  Integer colorings;          ///< |Col_p| of the surface
  bool passed;
};

struct SweepRecord {
  std::uint64_t seed;
  int braids_checked;
  int matrices_checked;
  long comparisons;
  std::vector<SweepFailure> failures;
};

struct Report {
  std::string command;
  ReportInput input;
  std::optional<Integer> determinant;
  std::optional<std::string> alexander_poly;
  std::optional<ClosureRecord> closure;
  std::optional<Integer> rep_count;
  std::vector<ClassRecord> classes;
  std::vector<ColoringRecord> colorings;
  std::vector<CheckResult> checks;
  std::optional<FamilyRecord> family;
  std::optional<SweepRecord> sweep;

  /// No check failed.
  bool ok() const;
  CheckResult const *find_check(std::string const &name) const;
};

/// Classical knot pipeline for the closure of `braid` on n strands.
/// Throws ParseError or NotAKnotError.
Report cmd_knot(std::string const &braid, int n, long rmax = 0);

/// Torus-covering T^2-knot pipeline. `b` is ignored when `fulltwist` is set,
/// in which case b = full_twist(n)^k. Throws ParseError, NotAKnotError, or
/// NonCommutingError.
Report cmd_surface(std::string const &a, std::string const &b, int n, long rmax = 12,
                   std::optional<long> fulltwist = std::nullopt);

/// Builds the family pair and runs the surface pipeline with rmax = 4p.
/// family->passed records whether the count and |Col_p| match.
Report cmd_family(int n, int p, long m, std::vector<int> signs, std::vector<int> perm);

/// Randomized cross-oracle sweep.
Report cmd_verify(SweepOptions const &opts);

nlohmann::ordered_json to_json(Report const &r);
Report report_from_json(nlohmann::ordered_json const &j);
std::string render_table(Report const &r);

} // namespace kreps
