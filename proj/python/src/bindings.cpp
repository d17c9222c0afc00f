#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricdeg/errors.hpp"
#include "toricdeg/fixtures.hpp"
#include "toricdeg/io.hpp"
#include "toricdeg/poly_io.hpp"

namespace py = pybind11;
using namespace toricdeg;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows) { return IntMatrix::from_rows(rows); }

struct PyIdeal {
  Ideal ideal;

  std::vector<std::string> vars() const { return *ideal.vars(); }
  std::vector<std::string> gens() const {
    std::vector<std::string> out;
    for (const auto& g : ideal.gens()) out.push_back(format_polynomial(g));
    return out;
  }
};

PyIdeal make_ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  json j;
  j["vars"] = vars;
  j["gens"] = gens;
  return {ideal_from_json(j)};
}

}  // namespace

PYBIND11_MODULE(_toricdeg, m) {
  m.doc() = "Toric degenerations: Gröbner families, value semigroups, projections, moment images";

  static py::exception<Error> base(m, "ToricdegError");
  static py::exception<VerificationFailed> verification(m, "VerificationFailed", base.ptr());
  static py::exception<Cancelled> cancelled(m, "Cancelled", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const VerificationFailed& e) {
      py::set_error(verification, e.what());
    } catch (const Cancelled& e) {
      py::set_error(cancelled, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<PyIdeal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("vars"), py::arg("gens"))
      .def_property_readonly("vars", &PyIdeal::vars)
      .def_property_readonly("gens", &PyIdeal::gens)
      .def("to_json", [](const PyIdeal& I) { return to_py(ideal_to_json(I.ideal)); })
      .def("__str__", [](const PyIdeal& I) { return format_ideal(I.ideal); })
      .def("__repr__", [](const PyIdeal& I) { return "Ideal" + format_ideal(I.ideal); })
      .def("__eq__", [](const PyIdeal& a, const PyIdeal& b) {
        return same_vars(a.ideal.vars(), b.ideal.vars()) && same_ideal(a.ideal, b.ideal);
      });

  m.def("parse_ideal", [](const std::string& text) { return PyIdeal{parse_ideal_file(text)}; },
        "Parse the ideal file format (vars:/grading: header, one generator per line).");

  m.def(
      "groebner_basis",
      [](const PyIdeal& I, const std::string& order, std::optional<WeightVector> w, const std::string& conv) {
        const auto n = I.ideal.nvars();
        TermOrder o = TermOrder::degrevlex(n);
        if (order == "lex") {
          std::vector<std::size_t> prio(n);
          for (std::size_t i = 0; i < n; ++i) prio[i] = i;
          o = TermOrder::lex(prio);
        } else if (order == "weight") {
          if (!w) throw py::value_error("weight order needs w");
          o = TermOrder::weight(*w, parse_convention(conv), TermOrder::lex_reversed(n));
        } else if (order != "degrevlex") {
          throw py::value_error("order must be lex, degrevlex or weight");
        }
        std::vector<std::string> out;
        const auto G = buchberger(I.ideal, o);
        for (const auto& g : G.elements()) out.push_back(format_polynomial(g, o));
        return out;
      },
      py::arg("ideal"), py::arg("order") = "degrevlex", py::arg("w") = py::none(), py::arg("convention") = "min");

  m.def("initial_ideal",
        [](const PyIdeal& I, const WeightVector& w, const std::string& conv) {
          return PyIdeal{initial_ideal(I.ideal, w, parse_convention(conv))};
        },
        py::arg("ideal"), py::arg("w"), py::arg("convention") = "min");

  m.def("toric_ideal",
        [](const std::vector<std::vector<std::int64_t>>& A, const std::vector<std::string>& names) {
          return PyIdeal{toric_ideal(to_matrix(A), names)};
        },
        py::arg("matrix"), py::arg("names"));

  m.def("family_ideal",
        [](const PyIdeal& I, const WeightVector& w, const std::string& conv) {
          return to_py(to_json(family_ideal(I.ideal, w, parse_convention(conv))));
        },
        py::arg("ideal"), py::arg("w"), py::arg("convention") = "min");

  m.def("fiber",
        [](const PyIdeal& I, const WeightVector& w, const std::string& t0, const std::string& conv) {
          Rational q(t0);
          q.canonicalize();
          return PyIdeal{fiber(family_ideal(I.ideal, w, parse_convention(conv)), q)};
        },
        py::arg("ideal"), py::arg("w"), py::arg("t0"), py::arg("convention") = "min");

  m.def("valuation_pipeline",
        [](const PyIdeal& I, const std::vector<std::vector<std::int64_t>>& M, const std::string& conv) {
          return to_py(to_json(valuation_pipeline(I.ideal, to_matrix(M), parse_convention(conv))));
        },
        py::arg("ideal"), py::arg("matrix"), py::arg("convention") = "min");

  m.def("embed_value_semigroup",
        [](const PyIdeal& I, const std::vector<std::vector<std::int64_t>>& M, const std::string& conv,
           std::int64_t degree_bound) {
          return to_py(to_json(embed_value_semigroup(I.ideal, to_matrix(M), parse_convention(conv), degree_bound)));
        },
        py::arg("ideal"), py::arg("matrix"), py::arg("convention") = "min", py::arg("degree_bound") = 5);

  m.def("projection_limit",
        [](const PyIdeal& I, const std::vector<std::string>& keep) { return to_py(to_json(projection_limit(I.ideal, keep))); },
        py::arg("ideal"), py::arg("keep"));

  m.def("moment",
        [](const std::vector<std::vector<std::int64_t>>& A, const std::vector<Complex>& z) {
          return moment(to_matrix(A), ComplexPoint{z});
        },
        py::arg("matrix"), py::arg("z"));

  m.def(
      "sample_moment_image",
      [](const std::vector<std::vector<std::int64_t>>& A, std::size_t n, std::uint64_t seed) {
        std::vector<std::vector<double>> out;
        py::gil_scoped_release release;
        for (auto& s : sample_moment_image(to_matrix(A), n, seed)) out.push_back(std::move(s.value));
        return out;
      },
      py::arg("matrix"), py::arg("n"), py::arg("seed") = 42);

  m.def("fixture_names", &fixture_names);
  m.def(
      "run_fixture",
      [](const std::string& name, const std::string& golden_dir) {
        json report;
        {
          py::gil_scoped_release release;
          report = run_fixture(load_fixture(name), RunOptions{golden_dir, false}).report;
        }
        return to_py(report);
      },
      py::arg("name"), py::arg("golden_dir") = "");
}
