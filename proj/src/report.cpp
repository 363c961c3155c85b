#include "kreps/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "kreps/braid.hpp"
#include "kreps/colorings.hpp"
#include "kreps/errors.hpp"
#include "kreps/metabelian.hpp"
#include "kreps/oracles.hpp"
#include "kreps/presentation.hpp"

namespace kreps {

using json = nlohmann::ordered_json;

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](CheckResult const &c) { return c.status == CheckStatus::fail; });
}

CheckResult const *Report::find_check(std::string const &name) const {
  for (auto const &c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

namespace {

// Brute-force diagram colorings are attempted only below this many
// assignments.
constexpr double kBruteForceBudget = 2e6;

void add_check(Report &r, std::string name, bool ok, std::string detail) {
  r.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void skip_check(Report &r, std::string name, std::string detail) {
  r.checks.push_back({std::move(name), CheckStatus::skipped, std::move(detail)});
}

// Rep count, classes, and their verification for a knot group presentation
// whose determinant is already in r.determinant.
void add_representations(Report &r, Presentation const &p) {
  Integer const &det = *r.determinant;
  if (mpz_even_p(det.get_mpz_t())) {
    add_check(r, "determinant_odd", false, "determinant " + det.get_str() + " is even");
    return;
  }
  r.rep_count = count_irreducible_metabelian(det);
  auto const classes = enumerate_rep_classes(p, det);
  add_check(r, "class_count", Integer(static_cast<unsigned long>(classes.size())) == *r.rep_count,
            std::to_string(classes.size()) + " classes enumerated, (det - 1)/2 = " +
                r.rep_count->get_str());
  bool verified = true;
  for (auto const &c : classes) {
    verified = verified && verify_representation(p, c.assignment) && is_irreducible(c.assignment);
    ClassRecord rec{c.modulus, c.coloring, {}};
    for (auto const &g : c.assignment)
      rec.angles.push_back(g.angle());
    r.classes.push_back(std::move(rec));
  }
  add_check(r, "representations_verified", verified,
            verified ? "every relator maps to the identity; every class is irreducible"
                     : "a class failed exact verification");
}

std::vector<long> divisors_above_one(long v) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v)
        large.push_back(v / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  small.erase(small.begin()); // drop 1
  return small;
}

std::string join_longs(std::vector<long> const &v) {
  std::string s;
  for (long x : v)
    s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

Report surface_report(std::string command, BraidWord const &a, BraidWord const &b, long rmax) {
  Report r;
  r.command = std::move(command);
  r.input.braids = {a.to_string(), b.to_string()};
  r.input.strands = a.strands();
  r.input.rmax = rmax;

  Presentation const p = torus_covering_presentation(a, b);
  auto const data = elementary_ideal_data(alexander_matrix(p));
  r.determinant = data.determinant;

  auto const closure_data = elementary_ideal_data(alexander_matrix(closure_presentation(a)));
  r.closure = ClosureRecord{a.to_string(), closure_data.alexander_poly.to_string(),
                            closure_data.determinant};
  Integer const &q = closure_data.determinant;

  add_check(r, "determinant_odd", mpz_odd_p(data.determinant.get_mpz_t()) != 0,
            "surface determinant " + data.determinant.get_str());
  add_check(r, "determinant_divides_closure",
            mpz_divisible_p(q.get_mpz_t(), data.determinant.get_mpz_t()) != 0,
            data.determinant.get_str() + " | " + q.get_str());
  add_representations(r, p);

  IntMatrix const transport = surface_transport_system(a, b);
  IntMatrix const fox = coloring_system(p);
  bool census_agree = true;
  for (long m = 2; m <= rmax; ++m) {
    auto const by_transport = census_of_system(transport, m);
    auto const by_presentation = census_of_system(fox, m);
    census_agree = census_agree && by_transport.total == by_presentation.total &&
                   by_transport.condition_o == by_presentation.condition_o;
    r.colorings.push_back({m, by_transport.total, by_transport.condition_o});
  }
  if (rmax >= 2)
    add_check(r, "census_transport_vs_presentation", census_agree,
              "colorings mod 2.." + std::to_string(rmax) + " from both routes");

  if (!r.rep_count)
    return r;

  // Count from the closure determinant, when the surface is |Delta(-1)|-colorable.
  if (q > 1 && q.fits_slong_p() && is_p_colorable(transport, q.get_si())) {
    Integer const expected = (q - 1) / 2;
    add_check(r, "closure_determinant_count", expected == *r.rep_count,
              "(|Delta(-1)| - 1)/2 = " + expected.get_str() + ", rep count " +
                  r.rep_count->get_str());
  } else {
    skip_check(r, "closure_determinant_count",
               "surface is not " + q.get_str() + "-colorable");
  }

  // Count from |Col_p|, when p is the only q > 1 for which the surface is
  // q-colorable. A q-coloring forces q | det, so divisors of det suffice.
  Integer const &det = *r.determinant;
  if (det > 1 && det < 1000000000) {
    std::vector<long> colorable;
    for (long d : divisors_above_one(det.get_si()))
      if (is_p_colorable(transport, d))
        colorable.push_back(d);
    if (colorable.size() == 1 && is_odd_prime(colorable.front())) {
      long const pp = colorable.front();
      Integer const col_p = surface_coloring_census(a, b, pp).total;
      Integer const from_colorings = count_from_colorings(col_p, pp);
      add_check(r, "only_p_colorable_count", from_colorings == *r.rep_count,
                "only " + std::to_string(pp) + "-colorable, (|Col_p| - p)/2p = (" +
                    col_p.get_str() + " - " + std::to_string(pp) + ")/" +
                    std::to_string(2 * pp) + " = " + from_colorings.get_str());
    } else {
      skip_check(r, "only_p_colorable_count",
                 "colorable for q in {" + join_longs(colorable) + "}");
    }
  } else {
    skip_check(r, "only_p_colorable_count", "determinant " + det.get_str() + " out of range");
  }
  return r;
}

} // namespace

Report cmd_knot(std::string const &braid, int n, long rmax) {
  BraidWord const a = parse_braid(braid, n);
  if (closure_component_count(a) != 1)
    throw NotAKnotError("closure of '" + a.to_string() + "' has " +
                        std::to_string(closure_component_count(a)) + " components");
  Report r;
  r.command = "knot";
  r.input.braids = {a.to_string()};
  r.input.strands = n;
  r.input.rmax = rmax;

  Presentation const p = closure_presentation(a);
  LaurentMatrix const fox = alexander_matrix(p);
  auto const data = elementary_ideal_data(fox);
  r.determinant = data.determinant;
  r.alexander_poly = data.alexander_poly.to_string();

  LaurentPoly const burau = burau_alexander(a);
  add_check(r, "burau_vs_fox", burau == data.alexander_poly,
            "Burau route " + burau.to_string());
  add_check(r, "determinant_vs_polynomial", abs(data.alexander_poly.eval_at(-1)) == data.determinant,
            "|Delta(-1)| = " + abs(data.alexander_poly.eval_at(-1)).get_str());
  add_representations(r, p);

  // Condition-O colorings mod det by backtracking over the diagram.
  if (r.rep_count && !a.is_identity_word()) {
    ClosureDiagram const d = closure_diagram(a);
    double const space = std::pow(data.determinant.get_d(), static_cast<double>(d.arc_count) - 1);
    if (space <= kBruteForceBudget) {
      long const brute = oracle::diagram_colorings(d, data.determinant.get_si(), true);
      add_check(r, "brute_force_colorings", Integer(brute - 1) == 2 * *r.rep_count,
                std::to_string(brute) + " condition-O colorings mod " +
                    data.determinant.get_str());
    } else {
      skip_check(r, "brute_force_colorings", "search space too large");
    }
  }

  for (long m = 2; m <= rmax; ++m) {
    auto const c = coloring_census(fox, m);
    r.colorings.push_back({m, c.total, c.condition_o});
  }
  return r;
}

Report cmd_surface(std::string const &a, std::string const &b, int n, long rmax,
                   std::optional<long> fulltwist) {
  BraidWord const aw = parse_braid(a, n);
  BraidWord const bw = fulltwist ? full_twist(n).power(*fulltwist) : parse_braid(b, n);
  Report r = surface_report("surface", aw, bw, rmax);
  r.input.fulltwist = fulltwist;
  return r;
}

Report cmd_family(int n, int p, long m, std::vector<int> signs, std::vector<int> perm) {
  if (signs.empty())
    signs.assign(static_cast<std::size_t>(std::max(0, n - 1)), 1);
  if (perm.empty())
    for (int i = 1; i < n; ++i)
      perm.push_back(i);
  FamilyBraids const f = corollary_family(n, p, signs, perm, m);
  Report r = surface_report("family", f.c, f.b, 4L * p);

  Integer pp = p;
  Integer power_n1;
  mpz_pow_ui(power_n1.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(n - 1));
  FamilyRecord rec{n, p, m, signs, perm, f.l, (power_n1 - 1) / 2, power_n1 * p, 0, false};
  rec.colorings = surface_coloring_census(f.c, f.b, p).total;
  bool const count_ok = r.rep_count && *r.rep_count == rec.expected_count;
  bool const col_ok = rec.colorings == rec.expected_colorings;
  rec.passed = count_ok && col_ok;
  add_check(r, "family_count", count_ok,
            "rep count " + (r.rep_count ? r.rep_count->get_str() : std::string("none")) +
                ", (p^(n-1) - 1)/2 = " + rec.expected_count.get_str());
  add_check(r, "family_colorings", col_ok,
            "|Col_p| = " + rec.colorings.get_str() + ", p^n = " + rec.expected_colorings.get_str());

  // Each profile value is 1 or |Col_p^0|.
  Integer const col_p0 = rec.colorings / p;
  std::vector<long> stray;
  for (auto const &c : r.colorings)
    if (c.condition_o != 1 && c.condition_o != col_p0)
      stray.push_back(c.r);
  add_check(r, "profile_values", stray.empty(),
            stray.empty() ? "every condition-O count is 1 or " + col_p0.get_str()
                          : "other values at r = " + join_longs(stray));
  r.family = std::move(rec);
  return r;
}

Report cmd_verify(SweepOptions const &opts) {
  SweepReport const s = run_sweep(opts);
  Report r;
  r.command = "verify";
  r.input.strands = opts.max_strands;
  r.input.rmax = opts.max_r;
  r.sweep = SweepRecord{s.seed, s.braids_checked, s.matrices_checked, s.comparisons, s.failures};
  add_check(r, "oracle_sweep", s.passed(),
            std::to_string(s.comparisons) + " comparisons on " + std::to_string(s.braids_checked) +
                " braids and " + std::to_string(s.matrices_checked) + " matrices, " +
                std::to_string(s.failures.size()) + " mismatches");
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

std::string status_name(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass: return "pass";
  case CheckStatus::fail: return "fail";
  case CheckStatus::skipped: return "skipped";
  }
  return "skipped";
}

CheckStatus status_from(std::string const &s) {
  if (s == "pass")
    return CheckStatus::pass;
  if (s == "fail")
    return CheckStatus::fail;
  if (s == "skipped")
    return CheckStatus::skipped;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

json big(std::optional<Integer> const &v) { return v ? json(v->get_str()) : json(nullptr); }

std::optional<Integer> big_from(json const &j) {
  if (j.is_null())
    return std::nullopt;
  return Integer(j.get<std::string>());
}

} // namespace

json to_json(Report const &r) {
  json j;
  j["command"] = r.command;
  j["input"] = {{"braids", r.input.braids},
                {"strands", r.input.strands},
                {"fulltwist", r.input.fulltwist ? json(*r.input.fulltwist) : json(nullptr)},
                {"rmax", r.input.rmax}};
  j["determinant"] = big(r.determinant);
  j["alexander_poly"] = r.alexander_poly ? json(*r.alexander_poly) : json(nullptr);
  j["closure"] = r.closure ? json{{"braid", r.closure->braid},
                                  {"alexander_poly", r.closure->alexander_poly},
                                  {"determinant", r.closure->determinant.get_str()}}
                           : json(nullptr);
  j["rep_count"] = big(r.rep_count);
  j["classes"] = json::array();
  for (auto const &c : r.classes)
    j["classes"].push_back({{"modulus", c.modulus}, {"coloring", c.coloring}, {"angles", c.angles}});
  j["colorings"] = json::array();
  for (auto const &c : r.colorings)
    j["colorings"].push_back(
        {{"r", c.r}, {"total", c.total.get_str()}, {"condition_o", c.condition_o.get_str()}});
  j["checks"] = json::array();
  for (auto const &c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  if (r.family) {
    auto const &f = *r.family;
    j["family"] = {{"n", f.n},
                   {"p", f.p},
                   {"m", f.m},
                   {"signs", f.signs},
                   {"perm", f.perm},
                   {"l", f.l},
                   {"expected_count", f.expected_count.get_str()},
                   {"expected_colorings", f.expected_colorings.get_str()},
                   {"colorings", f.colorings.get_str()},
                   {"passed", f.passed}};
  } else {
    j["family"] = nullptr;
  }
  if (r.sweep) {
    auto const &s = *r.sweep;
    json failures = json::array();
    for (auto const &f : s.failures)
      failures.push_back({{"check", f.check}, {"instance", f.instance}, {"detail", f.detail}});
    j["sweep"] = {{"seed", s.seed},
                  {"braids_checked", s.braids_checked},
                  {"matrices_checked", s.matrices_checked},
                  {"comparisons", s.comparisons},
                  {"failures", failures}};
  } else {
    j["sweep"] = nullptr;
  }
  j["ok"] = r.ok();
  return j;
}

Report report_from_json(json const &j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  auto const &in = j.at("input");
  r.input.braids = in.at("braids").get<std::vector<std::string>>();
  r.input.strands = in.at("strands").get<int>();
  if (!in.at("fulltwist").is_null())
    r.input.fulltwist = in.at("fulltwist").get<long>();
  r.input.rmax = in.at("rmax").get<long>();
  r.determinant = big_from(j.at("determinant"));
  if (!j.at("alexander_poly").is_null())
    r.alexander_poly = j.at("alexander_poly").get<std::string>();
  if (auto const &c = j.at("closure"); !c.is_null())
    r.closure = ClosureRecord{c.at("braid").get<std::string>(),
                              c.at("alexander_poly").get<std::string>(),
                              Integer(c.at("determinant").get<std::string>())};
  r.rep_count = big_from(j.at("rep_count"));
  for (auto const &c : j.at("classes"))
    r.classes.push_back({c.at("modulus").get<long>(), c.at("coloring").get<std::vector<long>>(),
                         c.at("angles").get<std::vector<long>>()});
  for (auto const &c : j.at("colorings"))
    r.colorings.push_back({c.at("r").get<long>(), Integer(c.at("total").get<std::string>()),
                           Integer(c.at("condition_o").get<std::string>())});
  for (auto const &c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), status_from(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
  if (auto const &f = j.at("family"); !f.is_null())
    r.family = FamilyRecord{f.at("n").get<int>(),
                            f.at("p").get<int>(),
                            f.at("m").get<long>(),
                            f.at("signs").get<std::vector<int>>(),
                            f.at("perm").get<std::vector<int>>(),
                            f.at("l").get<int>(),
                            Integer(f.at("expected_count").get<std::string>()),
                            Integer(f.at("expected_colorings").get<std::string>()),
                            Integer(f.at("colorings").get<std::string>()),
                            f.at("passed").get<bool>()};
  if (auto const &s = j.at("sweep"); !s.is_null()) {
    SweepRecord rec{s.at("seed").get<std::uint64_t>(), s.at("braids_checked").get<int>(),
                    s.at("matrices_checked").get<int>(), s.at("comparisons").get<long>(), {}};
    for (auto const &f : s.at("failures"))
      rec.failures.push_back({f.at("check").get<std::string>(), f.at("instance").get<std::string>(),
                              f.at("detail").get<std::string>()});
    r.sweep = std::move(rec);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Table

std::string render_table(Report const &r) {
  std::ostringstream os;
  auto row = [&](std::string const &key, std::string const &value) {
    os << "  " << std::left << std::setw(18) << key << value << '\n';
  };
  os << r.command << '\n';
  if (!r.input.braids.empty()) {
    row("braid a", r.input.braids[0].empty() ? "(identity)" : r.input.braids[0]);
    if (r.input.braids.size() > 1)
      row("braid b", r.input.braids[1].empty() ? "(identity)" : r.input.braids[1]);
    row("strands", std::to_string(r.input.strands));
  }
  if (r.family)
    row("family", "n=" + std::to_string(r.family->n) + " p=" + std::to_string(r.family->p) +
                      " m=" + std::to_string(r.family->m) + " l=" + std::to_string(r.family->l));
  if (r.closure) {
    row("closure Delta", r.closure->alexander_poly);
    row("closure det", r.closure->determinant.get_str());
  }
  if (r.alexander_poly)
    row("Alexander poly", *r.alexander_poly);
  if (r.determinant)
    row("determinant", r.determinant->get_str());
  if (r.rep_count)
    row("rep count", r.rep_count->get_str());
  if (r.family) {
    row("|Col_p|", r.family->colorings.get_str() + " (expected " +
                       r.family->expected_colorings.get_str() + ")");
    row("family", r.family->passed ? "PASS" : "FAIL");
  }
  if (r.sweep) {
    row("seed", std::to_string(r.sweep->seed));
    row("braids", std::to_string(r.sweep->braids_checked));
    row("matrices", std::to_string(r.sweep->matrices_checked));
    row("comparisons", std::to_string(r.sweep->comparisons));
  }

  if (!r.classes.empty()) {
    os << "\nclasses (colors mod m, generator i -> R(angle), angles mod 2m)\n";
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      auto const &c = r.classes[i];
      os << "  " << std::right << std::setw(3) << i + 1 << "  m=" << c.modulus << "  coloring ("
         << join_longs(c.coloring) << ")  angles (" << join_longs(c.angles) << ")\n";
    }
  }
  if (!r.colorings.empty()) {
    os << "\ncolorings\n  " << std::setw(4) << "r" << std::setw(14) << "total" << std::setw(14)
       << "condition O" << '\n';
    for (auto const &c : r.colorings)
      os << "  " << std::setw(4) << c.r << std::setw(14) << c.total.get_str() << std::setw(14)
         << c.condition_o.get_str() << '\n';
  }
  if (r.sweep && !r.sweep->failures.empty()) {
    os << "\nmismatches\n";
    for (auto const &f : r.sweep->failures)
      os << "  " << f.check << "  " << f.instance << "\n      " << f.detail << '\n';
  }
  if (!r.checks.empty()) {
    os << "\nchecks\n";
    for (auto const &c : r.checks)
      os << "  " << std::left << std::setw(8) << status_name(c.status) << std::setw(34) << c.name
         << c.detail << '\n';
  }
  return os.str();
}

} // namespace kreps
