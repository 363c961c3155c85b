#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kreps/braid.hpp"
#include "kreps/errors.hpp"
#include "kreps/int_linalg.hpp"
#include "kreps/presentation.hpp"
#include "kreps/report.hpp"

namespace py = pybind11;
using namespace kreps;

namespace {

py::object to_py_int(Integer const &v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_py(Report const &r) {
  return py::module_::import("json").attr("loads")(to_json(r).dump());
}

IntMatrix matrix_from(std::vector<std::vector<long>> const &rows) {
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

ElementaryIdealData knot_data(std::string const &braid, int n) {
  BraidWord const a = parse_braid(braid, n);
  if (closure_component_count(a) != 1)
    throw NotAKnotError("closure is not a knot");
  return elementary_ideal_data(alexander_matrix(closure_presentation(a)));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact knot determinants, colorings, and metabelian representations";

  auto base = py::register_exception<Error>(m, "KrepsError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotAKnotError>(m, "NotAKnotError", base.ptr());
  py::register_exception<NonCommutingError>(m, "NonCommutingError", base.ptr());
  py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());

  m.def("knot", [](std::string const &braid, int n, long rmax) { return to_py(cmd_knot(braid, n, rmax)); },
        py::arg("braid"), py::arg("n"), py::arg("rmax") = 0);
  m.def(
      "surface",
      [](std::string const &a, std::string const &b, int n, long rmax, std::optional<long> fulltwist) {
        return to_py(cmd_surface(a, b, n, rmax, fulltwist));
      },
      py::arg("a"), py::arg("b") = "", py::arg("n"), py::arg("rmax") = 12,
      py::arg("fulltwist") = py::none());
  m.def(
      "family",
      [](int n, int p, long mm, std::vector<int> signs, std::vector<int> perm) {
        return to_py(cmd_family(n, p, mm, std::move(signs), std::move(perm)));
      },
      py::arg("n"), py::arg("p"), py::arg("m"), py::arg("signs") = std::vector<int>{},
      py::arg("perm") = std::vector<int>{});
  m.def(
      "verify",
      [](std::uint64_t seed, int trials, int matrix_trials, int max_strands, int max_length, long rmax) {
        SweepOptions opts;
        opts.seed = seed;
        opts.trials = trials;
        opts.matrix_trials = matrix_trials;
        opts.max_strands = max_strands;
        opts.max_length = max_length;
        opts.max_r = rmax;
        Report r;
        {
          py::gil_scoped_release release;
          r = cmd_verify(opts);
        }
        return to_py(r);
      },
      py::arg("seed") = 1, py::arg("trials") = 100, py::arg("matrix_trials") = 100,
      py::arg("max_strands") = 4, py::arg("max_length") = 8, py::arg("rmax") = 7);

  m.def("parse_braid",
        [](std::string const &text, int n) {
          BraidWord const a = parse_braid(text, n);
          std::vector<std::pair<int, int>> out;
          for (auto const &l : a.letters())
            out.emplace_back(l.index, l.sign);
          return out;
        },
        py::arg("text"), py::arg("n"));
  m.def("determinant", [](std::string const &braid, int n) { return to_py_int(knot_data(braid, n).determinant); },
        py::arg("braid"), py::arg("n"));
  m.def("alexander_polynomial",
        [](std::string const &braid, int n) { return knot_data(braid, n).alexander_poly.to_string(); },
        py::arg("braid"), py::arg("n"));
  m.def("smith_invariants",
        [](std::vector<std::vector<long>> const &rows) {
          py::list out;
          for (auto const &d : smith_normal_form(matrix_from(rows)).invariants)
            out.append(to_py_int(d));
          return out;
        },
        py::arg("matrix"));
  m.def("solution_count_mod",
        [](std::vector<std::vector<long>> const &rows, long r) {
          return to_py_int(solution_count_mod(matrix_from(rows), r));
        },
        py::arg("matrix"), py::arg("r"));
}
