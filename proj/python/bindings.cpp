#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuspidal/alexander.hpp"
#include "cuspidal/criteria.hpp"
#include "cuspidal/staircase.hpp"
#include "cuspidal/survey.hpp"

namespace py = pybind11;
using namespace cusp;

namespace {

template <class T>
std::vector<T> vec(std::span<const T> s) {
  return {s.begin(), s.end()};
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.num(), r.den());
}

std::vector<StepFunction> step_functions(const std::vector<CharSequence>& cusps) {
  std::vector<StepFunction> fs;
  for (const auto& c : cusps) fs.push_back(StepFunction::of(c));
  return fs;
}

}  // namespace

PYBIND11_MODULE(_cuspidal, m) {
  m.doc() = "Rational cuspidal curves: semigroups, staircases, d-invariants, obstructions";

  // Kept for the life of the interpreter; the translator below needs it.
  static py::handle error_type = py::exception<Error>(m, "CuspidalError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // Raise with a .code attribute naming the violated rule.
      py::object inst = error_type(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<CharSequence>(m, "CharSequence")
      .def(py::init(&CharSequence::validate), py::arg("p"), py::arg("q"))
      .def_static("parse", [](const std::string& s) { return CharSequence::parse(s); }, py::arg("spec"))
      .def_property_readonly("multiplicity", &CharSequence::multiplicity)
      .def_property_readonly("terms", [](const CharSequence& c) { return vec(c.terms()); })
      .def_property_readonly("milnor", [](const CharSequence& c) { return milnor_number(c); })
      .def_property_readonly("genus", [](const CharSequence& c) { return milnor_number(c) / 2; })
      .def("generators", [](const CharSequence& c) { return semigroup_generators(c); })
      .def("gaps", [](const CharSequence& c) { return semigroup(c).gaps; })
      .def("spec", &CharSequence::to_spec)
      .def("__str__", &CharSequence::to_string)
      .def("__repr__", [](const CharSequence& c) { return "CharSequence('" + c.to_spec() + "')"; })
      .def("__eq__", [](const CharSequence& a, const CharSequence& b) { return a == b; })
      .def("__lt__", [](const CharSequence& a, const CharSequence& b) { return a < b; })
      .def("__hash__", [](const CharSequence& c) { return py::hash(py::str(c.to_spec())); });

  m.def("enumerate_char_sequences", &enumerate_char_sequences, py::arg("mu"), py::arg("max_terms") = 0,
        "Every characteristic sequence with Milnor number mu, in lexicographic order.");

  py::class_<StepFunction>(m, "StepFunction")
      .def(py::init<std::vector<Int>>(), py::arg("gaps"))
      .def_static("of", &StepFunction::of, py::arg("cusp"))
      .def_property_readonly("gaps", [](const StepFunction& f) { return vec(f.gaps()); })
      .def_property_readonly("genus", &StepFunction::genus)
      .def("I", [](const StepFunction& f, Int x) { return gap_function_eval(f, x); }, py::arg("m"))
      .def("R", [](const StepFunction& f, Int x) { return counting_function_eval(f, x); }, py::arg("m"));

  m.def(
      "inf_convolve_I", [](const std::vector<StepFunction>& fs, Int x) { return inf_convolve_I(fs, x); },
      py::arg("functions"), py::arg("m"));
  m.def(
      "inf_convolve_R", [](const std::vector<StepFunction>& fs, Int x) { return inf_convolve_R(fs, x); },
      py::arg("functions"), py::arg("m"));

  py::class_<AlexanderPoly>(m, "AlexanderPoly")
      .def_static("from_exponents", &AlexanderPoly::from_exponents, py::arg("exponents"))
      .def_property_readonly("exponents", [](const AlexanderPoly& a) { return vec(a.exponents()); })
      .def_property_readonly("degree", &AlexanderPoly::degree)
      .def_property_readonly("genus", &AlexanderPoly::genus)
      .def("coefficient", &AlexanderPoly::coefficient)
      .def("__call__", &AlexanderPoly::evaluate)
      .def("__eq__", [](const AlexanderPoly& a, const AlexanderPoly& b) { return a == b; });
  m.def(
      "alexander_from_gaps", [](const std::vector<Int>& g) { return alexander_from_gaps(g); }, py::arg("gaps"));
  m.def("gaps_from_alexander", &gaps_from_alexander, py::arg("poly"));
  m.def("torus_alexander", &torus_alexander, py::arg("p"), py::arg("q"));
  m.def("k_coefficients", &k_coefficients, py::arg("poly"));

  py::class_<Staircase>(m, "Staircase")
      .def_static("from_alexander", &Staircase::from_alexander, py::arg("poly"))
      .def_static(
          "of", [](const CharSequence& c) { return Staircase::from_alexander(alexander_from_gaps(semigroup(c).gaps)); },
          py::arg("cusp"))
      .def_property_readonly("steps", [](const Staircase& s) { return vec(s.steps()); })
      .def_property_readonly("genus", &Staircase::genus)
      .def("a_vertices", [](const Staircase& s) {
        std::vector<std::pair<Int, Int>> out;
        for (const auto& v : s.a_vertices()) out.emplace_back(v.i, v.j);
        return out;
      });
  m.def(
      "j_function", [](const std::vector<Staircase>& ks, Int x) { return j_function(ks, x); }, py::arg("knots"),
      py::arg("m"));
  m.def(
      "d_invariant",
      [](const std::vector<CharSequence>& cusps, Int q, Int x) { return to_fraction(d_invariant(step_functions(cusps), q, x)); },
      py::arg("cusps"), py::arg("q"), py::arg("m"), "Exact d-invariant as a fractions.Fraction.");
  m.def("extendable_spinc", &extendable_spinc, py::arg("d"));

  py::class_<CriterionRow>(m, "CriterionRow")
      .def_readonly("j", &CriterionRow::j)
      .def_readonly("actual", &CriterionRow::actual)
      .def_readonly("expected", &CriterionRow::expected)
      .def_property_readonly("ok", &CriterionRow::ok)
      .def("__repr__", [](const CriterionRow& r) {
        return "CriterionRow(j=" + std::to_string(r.j) + ", actual=" + std::to_string(r.actual) +
               ", expected=" + std::to_string(r.expected) + ")";
      });

  py::class_<CriterionReport>(m, "CriterionReport")
      .def_readonly("criterion", &CriterionReport::criterion)
      .def_property_readonly("verdict", [](const CriterionReport& r) { return std::string(to_string(r.verdict)); })
      .def_readonly("details", &CriterionReport::details)
      .def_readonly("first_fail", &CriterionReport::first_fail)
      .def_readonly("note", &CriterionReport::note)
      .def_property_readonly("passed", &CriterionReport::passed)
      .def("failing_j", &CriterionReport::failing_j);

  auto config = [](Int d, const std::vector<CharSequence>& cusps) { return CurveConfig::make(d, cusps); };
  const auto checks = {
      std::pair{"genus_compatibility", &genus_compatibility},
      std::pair{"semigroup_distribution", &semigroup_distribution},
      std::pair{"coefficient_check", &coefficient_check_single_cusp},
      std::pair{"matsuoka_sakai", &matsuoka_sakai},
      std::pair{"orevkov_bound", &orevkov_bound},
      std::pair{"strong_multiplicity", &strong_multiplicity},
  };
  for (const auto& [name, fn] : checks) {
    m.def(
        name, [config, fn = fn](Int d, const std::vector<CharSequence>& cusps) { return fn(config(d, cusps)); },
        py::arg("degree"), py::arg("cusps"));
  }
  m.def("orevkov_inequality", &orevkov_inequality, py::arg("p"), py::arg("d"));
  m.def("first_semigroup_failure", &first_semigroup_failure, py::arg("cusp"), py::arg("degree"));

  py::class_<DegreeTally>(m, "DegreeTally")
      .def_readonly("degree", &DegreeTally::degree)
      .def_readonly("candidates", &DegreeTally::candidates)
      .def_readonly("pass_semigroup", &DegreeTally::pass_semigroup)
      .def_readonly("pass_orevkov", &DegreeTally::pass_orevkov)
      .def_readonly("pass_both", &DegreeTally::pass_both)
      .def_readonly("passing", &DegreeTally::passing);

  py::class_<SurveyResult>(m, "SurveyResult")
      .def_readonly("d_min", &SurveyResult::d_min)
      .def_readonly("d_max", &SurveyResult::d_max)
      .def_readonly("total_candidates", &SurveyResult::total_candidates)
      .def_readonly("pass_semigroup", &SurveyResult::pass_semigroup)
      .def_readonly("pass_orevkov", &SurveyResult::pass_orevkov)
      .def_readonly("pass_both", &SurveyResult::pass_both)
      .def_readonly("per_degree", &SurveyResult::per_degree)
      .def("passing", &SurveyResult::passing);

  m.def(
      "survey_single_cusp",
      [](Int a, Int b, unsigned workers, std::size_t max_terms) {
        py::gil_scoped_release release;
        return survey_single_cusp(a, b, {workers, max_terms, nullptr});
      },
      py::arg("d_min"), py::arg("d_max"), py::arg("workers") = 0, py::arg("max_terms") = 4);
  m.def(
      "survey_coprime_pairs",
      [](Int a, Int b, unsigned workers) {
        py::gil_scoped_release release;
        return survey_coprime_pairs(a, b, {workers, 0, nullptr});
      },
      py::arg("d_min"), py::arg("d_max"), py::arg("workers") = 0);

  m.def(
      "table_degree",
      [](Int d, std::size_t max_terms) {
        py::list out;
        for (const auto& r : table_degree(d, max_terms)) {
          out.append(py::make_tuple(r.sequence, std::string(to_string(r.verdict)), r.first_fail));
        }
        return out;
      },
      py::arg("degree"), py::arg("max_terms") = 0, "List of (sequence, verdict, first_fail).");
  m.def("is_known_unicuspidal", &is_known_unicuspidal, py::arg("a"), py::arg("b"), py::arg("degree"));
}
