#include "kreps/sweep.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "kreps/colorings.hpp"
#include "kreps/oracles.hpp"
#include "kreps/presentation.hpp"

namespace kreps {

BraidWord random_knot_braid(std::mt19937_64 &rng, int max_strands, int max_length) {
  std::uniform_int_distribution<int> strands(2, std::max(2, max_strands));
  std::uniform_int_distribution<int> length(1, std::max(1, max_length));
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    int const n = strands(rng);
    int const len = length(rng);
    std::uniform_int_distribution<int> index(1, n - 1);
    std::vector<BraidLetter> letters;
    for (int i = 0; i < len; ++i)
      letters.push_back({index(rng), coin(rng) == 0 ? 1 : -1});
    BraidWord a(n, std::move(letters));
    if (closure_component_count(a) == 1)
      return a;
  }
}

IntMatrix random_int_matrix(std::mt19937_64 &rng, std::size_t max_dim, long bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::size_t const rows = dim(rng), cols = dim(rng);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = entry(rng);
  return m;
}

std::string matrix_literal(IntMatrix const &m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

std::string braid_instance(BraidWord const &a) {
  return "\"" + a.to_string() + "\" -n " + std::to_string(a.strands());
}

// Invariant factors > 1 together with the corank: the torsion and free parts
// of the cokernel.
std::pair<std::vector<Integer>, std::size_t> cokernel_shape(IntMatrix const &m) {
  SNFResult snf = smith_normal_form(m);
  std::vector<Integer> torsion;
  for (auto const &d : snf.invariants)
    if (d != 1)
      torsion.push_back(d);
  return {torsion, m.cols() - snf.rank};
}

std::string join(std::vector<Integer> const &v) {
  std::string s;
  for (auto const &x : v)
    s += (s.empty() ? "" : ",") + x.get_str();
  return "(" + s + ")";
}

std::vector<SweepFailure> check_braid_once(BraidWord const &a, long max_r, long &comparisons) {
  std::vector<SweepFailure> out;
  auto fail = [&](std::string check, std::string detail) {
    out.push_back({std::move(check), braid_instance(a), std::move(detail)});
  };

  Presentation const p = closure_presentation(a);
  LaurentMatrix const fox = alexander_matrix(p);
  auto const data = elementary_ideal_data(fox);
  LaurentPoly const burau = burau_alexander(a);

  ++comparisons;
  if (data.alexander_poly != burau)
    fail("burau_vs_fox", "Burau " + burau.to_string() + " vs Fox " + data.alexander_poly.to_string());
  ++comparisons;
  if (abs(burau.eval_at(-1)) != data.determinant)
    fail("determinant_vs_polynomial", "|Delta(-1)| = " + abs(burau.eval_at(-1)).get_str() +
                                          " vs determinant " + data.determinant.get_str());

  ClosureDiagram const diagram = closure_diagram(a);
  LaurentMatrix const aprime = coloring_matrix(diagram);
  ++comparisons;
  LaurentPoly const diagram_poly = minor_gcd(aprime, diagram.arc_count - 1);
  if (diagram_poly != burau)
    fail("diagram_alexander", "diagram " + diagram_poly.to_string() + " vs Burau " + burau.to_string());

  IntMatrix const fox_at_minus_one = fox.eval_at(-1);
  IntMatrix const aprime_at_minus_one = aprime.eval_at(-1);
  auto const shape_fox = cokernel_shape(fox_at_minus_one);
  auto const shape_diagram = cokernel_shape(aprime_at_minus_one);
  ++comparisons;
  if (shape_fox != shape_diagram)
    fail("divisors_diagram_vs_presentation",
         "diagram torsion " + join(shape_diagram.first) + " corank " +
             std::to_string(shape_diagram.second) + " vs presentation torsion " +
             join(shape_fox.first) + " corank " + std::to_string(shape_fox.second));

  IntMatrix transport = transport_matrix(a);
  for (std::size_t i = 0; i < transport.rows(); ++i)
    transport(i, i) -= 1;

  for (long r = 2; r <= max_r; ++r) {
    auto const by_transport = census_of_system(transport, r);
    auto const by_presentation = census_of_system(fox_at_minus_one, r);
    auto const by_diagram = census_of_system(aprime_at_minus_one, r);
    long const brute = oracle::diagram_colorings(diagram, r);
    long const brute_pinned = oracle::diagram_colorings(diagram, r, true);
    comparisons += 2;
    bool const totals_agree = by_transport.total == by_presentation.total &&
                              by_presentation.total == by_diagram.total &&
                              by_diagram.total == brute;
    bool const pinned_agree = by_transport.condition_o == by_presentation.condition_o &&
                              by_presentation.condition_o == by_diagram.condition_o &&
                              by_diagram.condition_o == brute_pinned;
    if (!totals_agree || !pinned_agree)
      fail("coloring_census", "r=" + std::to_string(r) + " transport " +
                                  by_transport.total.get_str() + "/" +
                                  by_transport.condition_o.get_str() + " presentation " +
                                  by_presentation.total.get_str() + "/" +
                                  by_presentation.condition_o.get_str() + " diagram " +
                                  by_diagram.total.get_str() + "/" +
                                  by_diagram.condition_o.get_str() + " brute force " +
                                  std::to_string(brute) + "/" + std::to_string(brute_pinned));
  }
  return out;
}

// Greedily drops letters while the closure stays a knot and `check` still fails.
BraidWord minimize(BraidWord a, std::string const &check, long max_r) {
  for (bool shrunk = true; shrunk && a.length() > 1;) {
    shrunk = false;
    for (std::size_t i = 0; i < a.length(); ++i) {
      std::vector<BraidLetter> letters(a.letters().begin(), a.letters().end());
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
      BraidWord candidate(a.strands(), std::move(letters));
      if (candidate.length() == 0 || closure_component_count(candidate) != 1)
        continue;
      long ignored = 0;
      auto failures = check_braid_once(candidate, max_r, ignored);
      if (std::any_of(failures.begin(), failures.end(),
                      [&](SweepFailure const &f) { return f.check == check; })) {
        a = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return a;
}

} // namespace

std::vector<SweepFailure> check_braid(BraidWord const &a, long max_r, long &comparisons) {
  auto failures = check_braid_once(a, max_r, comparisons);
  for (auto &f : failures) {
    BraidWord small = minimize(a, f.check, max_r);
    if (small.length() < a.length()) {
      long ignored = 0;
      for (auto const &g : check_braid_once(small, max_r, ignored))
        if (g.check == f.check) {
          f.detail = g.detail + " (minimized from " + braid_instance(a) + ")";
          break;
        }
      f.instance = braid_instance(small);
    }
  }
  return failures;
}

std::vector<SweepFailure> check_matrix(IntMatrix const &a, long max_r, long &comparisons) {
  std::vector<SweepFailure> out;
  auto fail = [&](std::string check, std::string detail) {
    out.push_back({std::move(check), matrix_literal(a), std::move(detail)});
  };

  SNFResult const snf = smith_normal_form(a);
  IntMatrix diag(a.rows(), a.cols());
  for (std::size_t i = 0; i < snf.rank; ++i)
    diag(i, i) = snf.invariants[i];
  ++comparisons;
  if (snf.P * a * snf.Q != diag)
    fail("snf_reconstruction", "P*A*Q differs from diag" + join(snf.invariants));
  ++comparisons;
  if (abs(oracle::laplace_determinant(snf.P)) != 1 || abs(oracle::laplace_determinant(snf.Q)) != 1)
    fail("snf_unimodular", "a transform has determinant other than +-1");
  ++comparisons;
  for (std::size_t i = 0; i < snf.invariants.size(); ++i) {
    bool const positive = sgn(snf.invariants[i]) > 0;
    bool const chained = i == 0 || mpz_divisible_p(snf.invariants[i].get_mpz_t(),
                                                   snf.invariants[i - 1].get_mpz_t());
    if (!positive || !chained) {
      fail("snf_divisibility", "invariants " + join(snf.invariants));
      break;
    }
  }
  for (std::size_t k = 0; k <= std::min(a.rows(), a.cols()); ++k) {
    ++comparisons;
    Integer const fast = determinantal_divisor(a, k);
    Integer const slow = oracle::minor_gcd(a, k);
    if (fast != slow)
      fail("determinantal_divisor", "k=" + std::to_string(k) + " SNF " + fast.get_str() +
                                        " vs minors " + slow.get_str());
  }
  for (long r = 2; r <= max_r; ++r) {
    auto const exhaustive = oracle::solutions_mod(a, r);
    comparisons += 2;
    Integer const count = solution_count_mod(a, r);
    if (count != static_cast<unsigned long>(exhaustive.size()))
      fail("solution_count_mod", "r=" + std::to_string(r) + " formula " + count.get_str() +
                                     " vs exhaustive " + std::to_string(exhaustive.size()));
    if (enumerate_solutions_mod(a, r) != exhaustive)
      fail("enumerate_solutions_mod", "r=" + std::to_string(r) + " enumeration differs");
  }
  return out;
}

SweepReport run_sweep(SweepOptions const &opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<BraidWord> braids;
  braids.reserve(static_cast<std::size_t>(std::max(0, opts.trials)));
  for (int i = 0; i < opts.trials; ++i)
    braids.push_back(random_knot_braid(rng, opts.max_strands, opts.max_length));
  std::vector<IntMatrix> matrices;
  for (int i = 0; i < opts.matrix_trials; ++i)
    matrices.push_back(random_int_matrix(rng, 4, 9));

  std::size_t const jobs = braids.size() + matrices.size();
  std::vector<std::vector<SweepFailure>> results(jobs);
  std::vector<long> counts(jobs, 0);
  unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));

  auto run = [&](unsigned w) {
    for (std::size_t j = w; j < jobs; j += workers) {
      if (j < braids.size())
        results[j] = check_braid(braids[j], opts.max_r, counts[j]);
      else
        results[j] = check_matrix(matrices[j - braids.size()], opts.max_r, counts[j]);
    }
  };
  std::vector<std::future<void>> pending;
  for (unsigned w = 1; w < workers; ++w)
    pending.push_back(std::async(std::launch::async, run, w));
  run(0);
  for (auto &f : pending)
    f.get();

  SweepReport report;
  report.seed = opts.seed;
  report.braids_checked = static_cast<int>(braids.size());
  report.matrices_checked = static_cast<int>(matrices.size());
  for (std::size_t j = 0; j < jobs; ++j) {
    report.comparisons += counts[j];
    for (auto &f : results[j])
      report.failures.push_back(std::move(f));
  }
  return report;
}

} // namespace kreps
