// kreps: knot and torus-covering T^2-knot determinants, colorings, and
// metabelian SU(2)-representations from braid words.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kreps/errors.hpp"
#include "kreps/report.hpp"

namespace {

enum Exit : int {
  ok = 0,
  parse_error = 1,
  not_a_knot = 2,
  non_commuting = 3,
  family_failed = 4,
  check_failed = 5,
  cap_exceeded = 6,
};

struct Format {
  bool json = false;
  bool table = false;
};

void add_format(CLI::App *cmd, Format &f) {
  auto *j = cmd->add_flag("--json", f.json, "Emit JSON");
  auto *t = cmd->add_flag("--table", f.table, "Emit a human-readable table (default)");
  j->excludes(t);
}

void emit(kreps::Report const &r, Format const &f) {
  if (f.json)
    std::cout << kreps::to_json(r).dump(2) << '\n';
  else
    std::cout << kreps::render_table(r);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Determinants, Fox colorings, and irreducible metabelian SU(2)-representations "
               "of braid closures and torus-covering T^2-knots"};
  app.require_subcommand(1);

  Format format;
  int strands = 0;
  long rmax = -1;

  std::string knot_braid;
  auto *knot = app.add_subcommand("knot", "Closure of a braid");
  knot->add_option("braid", knot_braid, "Braid word, e.g. \"1 -2 1 -2\" or \"1^3\"")->required();
  knot->add_option("-n,--strands", strands, "Number of strands")->required();
  knot->add_option("--rmax", rmax, "Coloring census for r = 2..rmax (default none)");
  add_format(knot, format);

  std::string surf_a, surf_b;
  std::optional<long> fulltwist;
  auto *surface = app.add_subcommand("surface", "Torus-covering T^2-knot with basis braids (a, b)");
  surface->add_option("a", surf_a, "Braid a, whose closure must be a knot")->required();
  auto *b_opt = surface->add_option("b", surf_b, "Braid b commuting with a (empty for the identity)");
  surface->add_option("-n,--strands", strands, "Number of strands")->required();
  surface->add_option("--fulltwist", fulltwist, "Use b = full_twist(n)^k")->excludes(b_opt);
  surface->add_option("--rmax", rmax, "Coloring census for r = 2..rmax (default 12)");
  add_format(surface, format);

  int fam_p = 0;
  long fam_m = 0;
  std::vector<int> signs, perm;
  auto *family = app.add_subcommand("family", "Check the (c, full_twist^(l m)) family counts");
  family->add_option("-n,--strands", strands, "Number of strands")->required();
  family->add_option("-p", fam_p, "Odd prime")->required();
  family->add_option("-m", fam_m, "Full-twist multiplier")->required();
  family->add_option("--signs", signs, "n-1 signs, +1 or -1 (default all +1)")->delimiter(',');
  family->add_option("--perm", perm, "Permutation of 1..n-1 (default identity)")->delimiter(',');
  add_format(family, format);

  kreps::SweepOptions sweep;
  auto *verify = app.add_subcommand("verify", "Randomized cross-oracle sweep");
  verify->add_option("--seed", sweep.seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", sweep.trials, "Random braids")->capture_default_str();
  verify->add_option("--matrix-trials", sweep.matrix_trials, "Random integer matrices")
      ->capture_default_str();
  verify->add_option("--max-strands", sweep.max_strands)->capture_default_str();
  verify->add_option("--max-length", sweep.max_length)->capture_default_str();
  verify->add_option("--rmax", sweep.max_r, "Compare colorings for r = 2..rmax")
      ->capture_default_str();
  verify->add_option("--workers", sweep.workers, "Worker threads (0 = hardware)");
  add_format(verify, format);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::parse_error;
  }

  try {
    if (knot->parsed()) {
      auto const r = kreps::cmd_knot(knot_braid, strands, rmax < 0 ? 0 : rmax);
      emit(r, format);
      return r.ok() ? Exit::ok : Exit::check_failed;
    }
    if (surface->parsed()) {
      auto const r = kreps::cmd_surface(surf_a, surf_b, strands, rmax < 0 ? 12 : rmax, fulltwist);
      emit(r, format);
      return r.ok() ? Exit::ok : Exit::check_failed;
    }
    if (family->parsed()) {
      auto const r = kreps::cmd_family(strands, fam_p, fam_m, signs, perm);
      emit(r, format);
      if (!r.family->passed)
        return Exit::family_failed;
      return r.ok() ? Exit::ok : Exit::check_failed;
    }
    if (verify->parsed()) {
      auto const r = kreps::cmd_verify(sweep);
      emit(r, format);
      return r.ok() ? Exit::ok : Exit::check_failed;
    }
  } catch (kreps::ParseError const &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return Exit::parse_error;
  } catch (kreps::NotAKnotError const &e) {
    std::cerr << "not a knot: " << e.what() << '\n';
    return Exit::not_a_knot;
  } catch (kreps::NonCommutingError const &e) {
    std::cerr << "braids do not commute: " << e.what() << '\n';
    return Exit::non_commuting;
  } catch (kreps::CapExceededError const &e) {
    std::cerr << "enumeration cap exceeded: " << e.what() << '\n';
    return Exit::cap_exceeded;
  } catch (std::invalid_argument const &e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return Exit::parse_error;
  }
  return Exit::ok;
}
