#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "bialg/cli.hpp"
#include "bialg/corpus.hpp"
#include "bialg/error.hpp"
#include "bialg/io.hpp"

namespace py = pybind11;
using namespace bialg;

namespace {

MonoidTable table_from_rows(const std::vector<std::vector<std::size_t>>& rows) {
  MonoidTable m = MonoidTable::from_rows(rows);
  validate_monoid(m);
  return m;
}

py::object document_to_python(Document d) {
  return std::visit(
      [](auto&& v) -> py::object {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MonoidTable>)
          return py::cast(v.rows());
        else if constexpr (std::is_same_v<T, json>)
          return py::module_::import("json").attr("loads")(v.dump());
        else
          return py::cast(std::move(v));
      },
      std::move(d));
}

template <typename T>
std::string dump(const T& v) {
  return to_json(v).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cocommutative bialgebras, split extensions and commutators in FinSet and FinVect";
  m.attr("__version__") = kVersion;

  // Translators run newest first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<FieldMismatch>(m, "FieldMismatch", base);
  py::register_exception<BackendMismatch>(m, "BackendMismatch", base);
  py::register_exception<ShapeError>(m, "ShapeError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);
  py::register_exception<CapExceeded>(m, "CapExceeded", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<Field>(m, "Field")
      .def(py::init<>())
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("parse", &Field::parse, py::arg("name"), py::arg("p") = 0)
      .def_property_readonly("name", &Field::name)
      .def("__repr__", [](const Field& f) { return "Field(" + f.name() + ")"; });

  py::class_<Report>(m, "Report")
      .def_readonly("check", &Report::check)
      .def_readonly("notes", &Report::notes)
      .def_property_readonly("passed", &Report::passed)
      .def_property_readonly("clauses",
                             [](const Report& r) {
                               std::vector<py::dict> out;
                               for (const auto& c : r.clauses) {
                                 py::dict d;
                                 d["id"] = c.id;
                                 d["description"] = c.description;
                                 d["passed"] = c.passed;
                                 d["witness"] = c.witness ? py::cast(*c.witness) : py::none();
                                 d["note"] = c.note;
                                 out.push_back(d);
                               }
                               return out;
                             })
      .def("first_failure",
           [](const Report& r) -> py::object {
             const Clause* c = r.first_failure();
             return c ? py::cast(c->id) : py::none();
           })
      .def("summary", &Report::summary)
      .def("to_json", [](const Report& r) { return report_to_json(r, 0).dump(); })
      .def("__bool__", &Report::passed)
      .def("__repr__", [](const Report& r) { return r.summary(); });

  py::class_<Bialgebra>(m, "Bialgebra")
      .def_readonly("name", &Bialgebra::name)
      .def_property_readonly("size", &Bialgebra::size)
      .def_property_readonly("backend", [](const Bialgebra& b) { return to_string(b.backend()); })
      .def_property_readonly("field", &Bialgebra::field)
      .def("to_json", &dump<Bialgebra>)
      .def("__repr__", [](const Bialgebra& b) {
        return "Bialgebra(" + to_string(b.backend()) + ", size " + std::to_string(b.size()) + ")";
      });

  py::class_<BialgMorphism>(m, "BialgMorphism")
      .def_readonly("source", &BialgMorphism::source)
      .def_readonly("target", &BialgMorphism::target)
      .def("to_json", &dump<BialgMorphism>);

  py::class_<Action>(m, "Action")
      .def_readonly("B", &Action::B)
      .def_readonly("X", &Action::X)
      .def("to_json", &dump<Action>);

  py::class_<SplitExtension>(m, "SplitExtension")
      .def_readonly("X", &SplitExtension::X)
      .def_readonly("A", &SplitExtension::A)
      .def_readonly("B", &SplitExtension::B)
      .def_readonly("name", &SplitExtension::name)
      .def("to_json", &dump<SplitExtension>);

  py::class_<SCocEquivRelation>(m, "Relation")
      .def_property_readonly("R", &SCocEquivRelation::R)
      .def_property_readonly("A", &SCocEquivRelation::A)
      .def_readonly("name", &SCocEquivRelation::name)
      .def("to_json", &dump<SCocEquivRelation>);

  // Monoids are passed as lists of rows with the identity at 0.
  m.def("enumerate_monoids",
        [](std::size_t n) {
          std::vector<std::vector<std::vector<std::size_t>>> out;
          for (const auto& t : enumerate_monoids(n)) out.push_back(t.rows());
          return out;
        },
        py::arg("n"), "All monoids of order n up to isomorphism (n <= 4).");
  m.def("is_schreier",
        [](const std::vector<std::vector<std::size_t>>& a, const std::vector<std::vector<std::size_t>>& b,
           const Map& alpha, const Map& e) {
          auto r = is_schreier({table_from_rows(a), table_from_rows(b), alpha, e});
          return py::make_tuple(r.schreier, r.schreier ? py::cast(r.lambda) : py::none());
        },
        py::arg("A"), py::arg("B"), py::arg("alpha"), py::arg("e"));
  m.def("monoid_bialgebra",
        [](const std::vector<std::vector<std::size_t>>& rows, const std::string& name) {
          return monoid_bialgebra(table_from_rows(rows), name);
        },
        py::arg("table"), py::arg("name") = "");
  m.def("monoid_algebra",
        [](const std::vector<std::vector<std::size_t>>& rows, Field f, const std::string& name) {
          return monoid_algebra(table_from_rows(rows), f, name);
        },
        py::arg("table"), py::arg("field") = Field(), py::arg("name") = "");
  m.def("cyclic_group", [](std::size_t n) { return cyclic_group(n).rows(); }, py::arg("n"));
  m.def("symmetric_group", [](std::size_t n) { return symmetric_group(n).rows(); }, py::arg("n"));
  m.def("linearize", py::overload_cast<const Bialgebra&, Field>(&linearize), py::arg("b"),
        py::arg("field") = Field());
  m.def("linearize_extension", py::overload_cast<const SplitExtension&, Field>(&linearize),
        py::arg("s"), py::arg("field") = Field());

  m.def("check_bialgebra", &check_bialgebra);
  m.def("check_split_extension", &check_split_extension);
  m.def("check_derived_conditions", &check_derived_conditions);
  m.def("check_action", &check_action);
  m.def("check_relation", &check_relation);
  m.def("roundtrip_verify", &roundtrip_verify);

  m.def("trivial_extension", &trivial_extension);
  m.def("product_point", &product_point, py::arg("X"), py::arg("B"));
  m.def("product_splitext", &product_splitext);
  m.def("compose_splitext", &compose_splitext);
  m.def("pullback_along_unit", [](const SplitExtension& s) {
    Bialgebra i = trivial_bialgebra(s.B.backend(), s.B.field());
    return pullback_splitext(s, {i, s.B, s.B.unit});
  });
  m.def("action_from_extension", &action_from_extension);
  m.def("semidirect_extension", &semidirect_extension);

  m.def("huq_commute_subgroups",
        [](const std::vector<std::vector<std::size_t>>& g, const std::vector<std::size_t>& x,
           const std::vector<std::size_t>& y, Field f) {
          MonoidTable t = table_from_rows(g);
          auto h = huq_commute(submonoid_algebra(t, x, f), submonoid_algebra(t, y, f));
          return py::make_tuple(h.report, h.witness ? py::cast(*h.witness) : py::none());
        },
        py::arg("group"), py::arg("x"), py::arg("y"), py::arg("field") = Field(),
        "Huq commutation of the subgroup algebras k[x], k[y] of k[group].");
  m.def("kernel_pair_relation",
        [](const Bialgebra& a, const Bialgebra& b, const Map& f) {
          return kernel_pair_relation({a, b, Morph::from_table(a.carrier, b.carrier, f)});
        },
        py::arg("A"), py::arg("B"), py::arg("f"));
  m.def("discrete_relation", &discrete_relation);
  m.def("indiscrete_relation", &indiscrete_relation);
  m.def("smith_is_huq",
        [](const SCocEquivRelation& r, const SCocEquivRelation& s) {
          auto res = smith_is_huq_verify(r, s);
          return py::make_tuple(res.report, res.huq,
                                res.connector ? py::cast(*res.connector) : py::none());
        },
        py::arg("R"), py::arg("S"));

  m.def("load", [](const std::filesystem::path& p) { return document_to_python(parse_file(p)); },
        py::arg("path"), "Parses a JSON document file.");
  m.def("loads",
        [](const std::string& text) { return document_to_python(parse_document(json::parse(text))); },
        py::arg("text"));
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one bialg command; returns (exit code, stdout, stderr).");
}
