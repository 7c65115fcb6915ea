#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bicoalg/cli.hpp"
#include "bicoalg/comonadics.hpp"
#include "bicoalg/errors.hpp"
#include "bicoalg/examples.hpp"
#include "bicoalg/serialize.hpp"
#include "bicoalg/smash.hpp"

namespace py = pybind11;
using namespace bicoalg;

PYBIND11_MODULE(_bicoalg, m) {
  m.doc() = "Exact bicoalgebroid verification";

  py::register_exception<Error>(m, "Error");
  py::register_exception<SchemaError>(m, "SchemaError", m.attr("Error"));
  py::register_exception<BCCViolation>(m, "BCCViolation", m.attr("Error"));
  py::register_exception<NotInCotensorDomain>(m, "NotInCotensorDomain", m.attr("Error"));
  py::register_exception<SetLevelViolation>(m, "SetLevelViolation", m.attr("Error"));

  py::class_<Field>(m, "Field")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime)
      .def_property_readonly("name", &Field::name);

  py::class_<CheckReport>(m, "CheckReport")
      .def_property_readonly("passed", &CheckReport::passed)
      .def_property_readonly("failed", &CheckReport::failed_names)
      .def_property_readonly("names",
                             [](const CheckReport& r) {
                               std::vector<std::string> out;
                               for (const auto& c : r.checks()) out.push_back(c.name);
                               return out;
                             })
      .def("text", &CheckReport::text)
      .def("json", [](const CheckReport& r) { return report_json(r); })
      .def("__len__", [](const CheckReport& r) { return r.checks().size(); });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("by_name", &FiniteGroup::by_name)
      .def_readonly("order", &FiniteGroup::order)
      .def_readonly("name", &FiniteGroup::name);

  py::class_<Coalgebra>(m, "Coalgebra")
      .def_readonly("dim", &Coalgebra::dim)
      .def_readonly("label", &Coalgebra::label);
  py::class_<Bicoalgebroid>(m, "Bicoalgebroid")
      .def_property_readonly("total_dim", &Bicoalgebroid::n)
      .def_property_readonly("base_dim", &Bicoalgebroid::c)
      .def_property_readonly("cotensor_dim", [](const Bicoalgebroid& b) { return b.cotensor().dim(); })
      .def_property_readonly("label", &Bicoalgebroid::label);
  py::class_<BCCData>(m, "BCC").def_property_readonly("dim", [](const BCCData& d) { return d.coalgebra.dim; });

  m.def("grouplike_coalgebra", &grouplike_coalgebra);
  m.def("group_hopf", [](const std::string& g) { return group_hopf(FiniteGroup::by_name(g)); });
  m.def("coenveloping", [](std::size_t n) { return coenveloping_bico(grouplike_coalgebra(n)); }, py::arg("grouplikes"));
  m.def("conjugation_bcc", [](const std::string& g, const Bicoalgebroid& h) { return conjugation_bcc(FiniteGroup::by_name(g), h); });
  m.def("regular_bcc", [](const std::string& g, const Bicoalgebroid& h) { return regular_bcc(FiniteGroup::by_name(g), h); });
  m.def("right_regular_bcc", [](const std::string& g, const Bicoalgebroid& h) {
    FiniteGroup grp = FiniteGroup::by_name(g);
    return action_groupoid_bcc(grp, GSet::regular(grp), h);
  });
  m.def("action_groupoid_bico", [](const std::string& g) {
    FiniteGroup grp = FiniteGroup::by_name(g);
    return finite_groupoid_bico(action_groupoid(grp, GSet::regular(grp)));
  });
  m.def("in_field", py::overload_cast<const Bicoalgebroid&, const Field&>(&in_field));

  m.def("verify_bicoalgebroid", [](const Bicoalgebroid& b, std::uint64_t seed, bool second) {
    return verify_bicoalgebroid(b, VerifyOptions{seed, second, false});
  }, py::arg("b"), py::arg("seed") = 1, py::arg("second_extension") = false);
  m.def("verify_bcc", &verify_bcc);
  m.def("scalar_extension", &scalar_extension);
  m.def("verify_bicomonad", [](const Bicoalgebroid& b) {
    return verify_bicomonad(b, {Bicomodule::regular(b.base()), regular_bicomodule(b), free_bicomodule(b.base())},
                            {unit_h_comodule(b), regular_h_comodule(b)});
  });
  m.def("verify_opmonoidal", [](const BCCData& d, const Bicoalgebroid& b) {
    return verify_opmonoidal_comonad(d, b, {unit_h_comodule(b), regular_h_comodule(b)});
  });
  m.def("compare", [](const Bicoalgebroid& a, const Bicoalgebroid& b) {
    std::vector<std::size_t> pt(a.n()), pb(a.c());
    for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = i;
    for (std::size_t i = 0; i < pb.size(); ++i) pb[i] = i;
    return compare_bicoalgebroids(a, b, pt, pb);
  });

  m.def("to_json", [](const Bicoalgebroid& b, const Field& f) {
    Document d;
    d.field = f;
    d.bicoalgebroid = b;
    return write_document(d);
  }, py::arg("b"), py::arg("field") = Field::rationals());
  m.def("bicoalgebroid_from_json", [](const std::string& text) {
    Document d = parse_document(text);
    if (!d.bicoalgebroid) throw SchemaError("/bicoalgebroid", "missing required field");
    return *d.bicoalgebroid;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
