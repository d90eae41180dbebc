#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "monlab/betti.hpp"
#include "monlab/bounds.hpp"
#include "monlab/complexes.hpp"
#include "monlab/core.hpp"
#include "monlab/duality.hpp"
#include "monlab/error.hpp"
#include "monlab/harness.hpp"
#include "monlab/linearity.hpp"

namespace py = pybind11;
using namespace monlab;

namespace {

// Reports are already JSON on the C++ side; hand them over as plain dicts.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

FieldSpec field_of(const std::string& text) { return FieldSpec::parse(text); }

Ideal make_ideal(int ambient, const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    auto m = parse_monomial(ambient, g);
    if (m.is_one()) throw InputError("the monomial 1 generates the unit ideal");
    ms.push_back(m);
  }
  if (ms.empty()) return Ideal::zero(ambient);
  return minimal_generators(ms);
}

std::vector<std::string> generator_strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(format_monomial(g));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Squarefree monomial ideals: Betti tables, linear presentation and regularity bounds";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", input_error.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", input_error.ptr());
  py::register_exception<ResumeError>(m, "ResumeError", PyExc_RuntimeError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Ideal>(m, "Ideal")
      .def(py::init(&make_ideal), py::arg("ambient"), py::arg("generators"),
           "Ideal generated by monomials written like 'x1*x3'; reduced to minimal generators.")
      .def_static("parse", [](const std::string& text) { return parse_ideal(text); })
      .def_static("read", &read_ideal_file, py::arg("path"))
      .def_property_readonly("ambient", &Ideal::ambient)
      .def_property_readonly("generators", &generator_strings)
      .def_property_readonly("masks", &Ideal::masks)
      .def_property_readonly("pure_degree", &Ideal::pure_degree)
      .def_property_readonly("support", [](const Ideal& i) { return popcount(i.support()); })
      .def("is_zero", &Ideal::is_zero)
      .def("contains", [](const Ideal& i, const std::string& mono) { return i.contains(parse_monomial(i.ambient(), mono)); })
      .def("to_text", &format_ideal)
      .def("__len__", &Ideal::size)
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__hash__", [](const Ideal& i) { return py::hash(py::make_tuple(i.ambient(), py::tuple(py::cast(i.masks())))); })
      .def("__repr__", [](const Ideal& i) { return "Ideal(" + std::to_string(i.ambient()) + ", " + describe(i) + ")"; });

  m.def("ideal_sum", &ideal_sum);
  m.def("ideal_intersection", &ideal_intersection);
  m.def("truncation", &truncation, py::arg("ideal"), py::arg("degree"));
  m.def(
      "add_generator",
      [](const Ideal& i, const std::string& mono) { return add_generator(i, parse_monomial(i.ambient(), mono)); },
      py::arg("ideal"), py::arg("monomial"));

  m.def(
      "betti_table",
      [](const Ideal& i, const std::string& field, bool fine) {
        return to_py(betti_to_json(betti_table(i, field_of(field), {.fine = fine})));
      },
      py::arg("ideal"), py::arg("field") = "QQ", py::arg("fine") = false);
  m.def(
      "betti_numbers",
      [](const Ideal& i, const std::string& field) { return betti_table(i, field_of(field)).entries(); },
      py::arg("ideal"), py::arg("field") = "QQ", "Coarse table as {(i, j): rank}.");
  m.def(
      "regularity", [](const Ideal& i, const std::string& field) { return regularity(i, field_of(field)); },
      py::arg("ideal"), py::arg("field") = "QQ");
  m.def(
      "projective_dimension",
      [](const Ideal& i, const std::string& field) { return projective_dimension(i, field_of(field)); },
      py::arg("ideal"), py::arg("field") = "QQ", "pd(S/I)");

  m.def(
      "is_n2",
      [](const Ideal& i) -> py::object {
        const auto v = is_n2_graph(i);
        if (!v.witness) return py::make_tuple(v.holds, py::none());
        return py::make_tuple(v.holds,
                              py::make_tuple(format_monomial(v.witness->first), format_monomial(v.witness->second)));
      },
      py::arg("ideal"), "(holds, disconnected pair or None) by the generator-graph criterion");
  m.def(
      "is_nk",
      [](const Ideal& i, int k, const std::string& field) { return is_nk_betti(i, k, field_of(field)); },
      py::arg("ideal"), py::arg("k"), py::arg("field") = "QQ");
  m.def(
      "gcd_witness",
      [](const Ideal& i, const std::string& f) {
        const auto w = gcd_witness(i, parse_monomial(i.ambient(), f));
        return py::make_tuple(format_monomial(w.f1), format_monomial(w.g));
      },
      py::arg("ideal"), py::arg("f"));

  m.def("alexander_dual", &alexander_dual);
  m.def("height_profile", [](const Ideal& i) { return to_py(dual_report_to_json(height_profile(i))); });
  m.def(
      "is_s2",
      [](const Ideal& i, const std::string& field) {
        const auto v = is_s2(i, field_of(field));
        return py::make_tuple(v.holds, v.height);
      },
      py::arg("ideal"), py::arg("field") = "QQ");
  m.def(
      "cohomological_dimension",
      [](const Ideal& i, const std::string& field) { return cohomological_dimension(i, field_of(field)); },
      py::arg("ideal"), py::arg("field") = "QQ");

  m.def(
      "reduced_homology",
      [](int ambient, const std::vector<Mask>& facets, const std::string& field) {
        return reduced_homology_dims(SimplicialComplex(ambient, facets), field_of(field)).dims;
      },
      py::arg("ambient"), py::arg("facets"), py::arg("field") = "QQ",
      "Reduced homology dimensions, index p + 1 for p >= -1. Facets are vertex bitmasks.");

  m.def("f_bound", &f_bound, py::arg("n"), py::arg("d"));
  m.def("g_bound", &g_bound, py::arg("n"), py::arg("d"));
  m.def("faltings_bound", &faltings_bound, py::arg("n"), py::arg("bigheight"));
  m.def("regularity_bound", &regularity_bound, py::arg("n"), py::arg("d"));
  m.def("sharp_example", &sharp_example, py::arg("n"), py::arg("d"));
  m.def(
      "check_regularity_bound",
      [](const Ideal& i, const std::string& field, bool support) {
        return to_py(bound_report_to_json(check_regularity_bound(i, field_of(field), {support})));
      },
      py::arg("ideal"), py::arg("field") = "QQ", py::arg("use_support") = false);
  m.def(
      "check_cd_bound",
      [](const Ideal& i, const std::string& field, bool support) {
        return to_py(bound_report_to_json(check_cd_bound(i, field_of(field), {support})));
      },
      py::arg("ideal"), py::arg("field") = "QQ", py::arg("use_support") = false);

  m.def(
      "verify_range",
      [](int n, int d, const std::string& field, unsigned jobs, const std::string& symmetry,
         const std::string& checkpoint, bool resume) {
        VerifyOptions o;
        o.jobs = jobs;
        o.symmetry = parse_symmetry(symmetry);
        o.checkpoint_path = checkpoint;
        o.resume = resume;
        EnumerationSummary s;
        {
          py::gil_scoped_release release;
          s = verify_range(n, d, field_of(field), o);
        }
        return to_py(s.to_json());
      },
      py::arg("n"), py::arg("d"), py::arg("field") = "QQ", py::arg("jobs") = 1, py::arg("symmetry") = "off",
      py::arg("checkpoint") = "", py::arg("resume") = false);
  m.def(
      "gcd_lemma_sweep",
      [](int n, int d, const std::string& field) { return to_py(gcd_lemma_sweep(n, d, field_of(field)).to_json()); },
      py::arg("n"), py::arg("d"), py::arg("field") = "QQ");
  m.def("golden_suite", [] {
    py::list out;
    for (const auto& c : golden_suite()) {
      py::dict row;
      row["name"] = c.name;
      row["passed"] = c.passed;
      row["detail"] = c.detail;
      out.append(row);
    }
    return out;
  });
  m.def("remark_example", [] {
    const auto ex = remark_example();
    return py::make_tuple(ex.ideal, format_monomial(ex.f), format_monomial(ex.g));
  });
}
