#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadtile/area.hpp"
#include "quadtile/certificate.hpp"
#include "quadtile/constructor.hpp"
#include "quadtile/criteria.hpp"
#include "quadtile/document.hpp"
#include "quadtile/error.hpp"
#include "quadtile/search.hpp"
#include "quadtile/svg.hpp"

namespace py = pybind11;
using namespace quadtile;

namespace {

py::dict report_dict(const VerifyReport& r, bool bounds_ok) {
  py::list failures;
  for (const auto& f : r.failures) failures.append(py::make_tuple(f.tiles, f.reason));
  py::dict d;
  d["contained"] = r.contained;
  d["disjoint"] = r.disjoint;
  d["covered"] = r.covered;
  d["ratios_ok"] = r.ratios_ok;
  d["guillotine"] = r.guillotine;
  d["bounds_ratio_ok"] = bounds_ok;
  d["ok"] = r.exact_dissection() && r.ratios_ok && bounds_ok;
  d["failures"] = failures;
  return d;
}

py::dict decide_json(const std::string& problem) {
  const ShapeSpec spec = parse_problem(problem);
  const Decision d = decide(spec);
  py::dict out;
  out["verdict"] = d.yes() ? "YES" : "NO";
  out["case"] = describe(d.classification);
  out["reason"] = d.reason;
  return out;
}

std::string tile_json(const std::string& problem) { return tiling_to_json(construct(parse_problem(problem))).dump(); }

std::string plan_text(const std::string& problem) { return plan(parse_problem(problem)).str(); }

py::dict verify_json(const std::string& problem, const std::string& tiling) {
  const ShapeSpec spec = parse_problem(problem);
  const Tiling t = parse_tiling(tiling);
  if (!t.field()->same_field(*spec.ctx)) throw Error(ErrorKind::ContextMismatch, "tiling and problem differ in p");
  const VerifyReport r = verify_all(t, spec.shapes);
  return report_dict(r, t.width.sign() > 0 && t.ratio() == spec.target);
}

std::string certify_json(const std::string& problem) { return bundle_to_json(make_bundle(parse_problem(problem))).dump(); }

bool check_bundle_json(const std::string& problem, const std::string& bundle) {
  return check_bundle(bundle_from_json(json::parse(bundle)), parse_problem(problem));
}

std::optional<std::string> search_json(const std::string& problem, std::size_t depth, std::size_t width) {
  const ShapeSpec spec = parse_problem(problem);
  const auto r = bounded_closure_search(spec.target, spec.shapes, {.depth = depth, .width = width});
  if (!r) return std::nullopt;
  return r->str();
}

bool additivity_json(const std::string& tiling, const std::string& a, const std::string& b, const std::string& c) {
  const AreaCoeffs k{Rational::parse(a), Rational::parse(b), Rational::parse(c)};
  return area_additivity_check(parse_tiling(tiling), k);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rectangle dissections with side ratios in Q[sqrt(p)]";

  static py::exception<Error> error(m, "QuadtileError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error.ptr())(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<FieldContext, std::shared_ptr<FieldContext>>(m, "Field")
      .def(py::init([](const std::string& p) {
             return std::const_pointer_cast<FieldContext>(validate_context(Rational::parse(p)));
           }),
           py::arg("p"))
      .def_property_readonly("p", [](const FieldContext& f) { return f.p().str(); })
      .def("__call__",
           [](const FieldContext& f, const std::string& e, const std::string& g) {
             return f.make(Rational::parse(e), Rational::parse(g));
           },
           py::arg("e"), py::arg("f") = "0")
      .def("__repr__", [](const FieldContext& f) { return "Field('" + f.p().str() + "')"; });

  py::class_<Quad>(m, "Quad")
      .def_property_readonly("e", [](const Quad& q) { return q.e().str(); })
      .def_property_readonly("f", [](const Quad& q) { return q.f().str(); })
      .def_property_readonly("p", [](const Quad& q) { return q.p().str(); })
      .def("sign", &Quad::sign)
      .def("conj", &Quad::conj)
      .def("norm", [](const Quad& q) { return q.norm().str(); })
      .def("inv", &Quad::inv)
      .def("__float__", &Quad::approx)
      .def("__add__", [](const Quad& a, const Quad& b) { return a + b; })
      .def("__sub__", [](const Quad& a, const Quad& b) { return a - b; })
      .def("__mul__", [](const Quad& a, const Quad& b) { return a * b; })
      .def("__truediv__", [](const Quad& a, const Quad& b) { return a / b; })
      .def("__neg__", [](const Quad& a) { return -a; })
      .def("__eq__", [](const Quad& a, const Quad& b) { return a == b; })
      .def("__lt__", [](const Quad& a, const Quad& b) { return a < b; })
      .def("__le__", [](const Quad& a, const Quad& b) { return a <= b; })
      .def("__hash__", [](const Quad& q) { return py::hash(py::make_tuple(q.e().str(), q.f().str(), q.p().str())); })
      .def("__str__", &Quad::str)
      .def("__repr__", [](const Quad& q) { return "Quad(" + q.str() + ")"; });

  m.def("decide", &decide_json, py::arg("problem"), "Verdict for a problem document (JSON text).");
  m.def("tile", &tile_json, py::arg("problem"), "Verified tiling document for a YES instance.");
  m.def("plan", &plan_text, py::arg("problem"), "Construction recipe as text.");
  m.def("verify", &verify_json, py::arg("problem"), py::arg("tiling"), "Verification report for a tiling.");
  m.def("certify", &certify_json, py::arg("problem"), "Certificate bundle document for a NO instance.");
  m.def("check_certificate", &check_bundle_json, py::arg("problem"), py::arg("bundle"));
  m.def("search", &search_json, py::arg("problem"), py::arg("depth") = 4, py::arg("width") = 48);
  m.def("area_additivity", &additivity_json, py::arg("tiling"), py::arg("A"), py::arg("B"), py::arg("C"));
  m.def("render_svg", [](const std::string& tiling) { return render_svg(parse_tiling(tiling)); }, py::arg("tiling"));
}
