#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "apollonius/classic.hpp"
#include "apollonius/errors.hpp"
#include "apollonius/geom.hpp"
#include "apollonius/locus.hpp"
#include "apollonius/oracle.hpp"
#include "apollonius/power.hpp"
#include "apollonius/scene.hpp"
#include "apollonius/selftest.hpp"
#include "apollonius/triple.hpp"

namespace py = pybind11;
using namespace apollonius;

namespace {

py::tuple as_tuple(Point p) { return py::make_tuple(p.x, p.y); }

py::object locus_geometry(const Locus& l) {
  switch (l.kind()) {
    case LocusKind::RealCircle: return py::cast(l.circle());
    case LocusKind::Line: return py::cast(l.line());
    case LocusKind::SinglePoint: return as_tuple(l.point());
    default: return py::none();
  }
}

py::object thresholds_to_python(const KThresholds& th) {
  if (const auto* t = std::get_if<TwoRoots>(&th)) return py::make_tuple("two", t->k_minus, t->k_plus);
  if (const auto* d = std::get_if<DoubleRoot>(&th)) return py::make_tuple("double", d->k);
  if (const auto* l = std::get_if<LinearCase>(&th)) return py::make_tuple("linear", l->k);
  return py::make_tuple("none");
}

// Scene text in, (report text, svg text or None) out; parse errors carry the line number.
py::tuple run_scene_text(const std::string& text, bool svg, double tol) {
  const scene::Scene s = scene::parse_scene(text);
  const scene::Report r = scene::run_scene(s, Tolerance::uniform(tol));
  return py::make_tuple(scene::emit_report(r), svg ? py::object(py::str(scene::emit_svg(s, r))) : py::none());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Power-ratio loci of circles";

  // Exception types live for the interpreter's lifetime; the handles are deliberately leaked.
  static py::handle geometry_error = py::exception<GeometryError>(m, "GeometryError", PyExc_ValueError).release();
  static py::handle scene_error = py::exception<scene::SceneError>(m, "SceneError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const scene::SceneError& e) {
      py::object err = scene_error(e.what());
      err.attr("line") = e.line();
      PyErr_SetObject(scene_error.ptr(), err.ptr());
    } catch (const GeometryError& e) {
      py::object err = geometry_error(e.what());
      err.attr("code") = std::string(describe(e.code()));
      PyErr_SetObject(geometry_error.ptr(), err.ptr());
    }
  });

  py::class_<Point>(m, "Point")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def(py::init([](py::tuple t) {
        if (t.size() != 2) throw py::value_error("expected (x, y)");
        return Point{t[0].cast<double>(), t[1].cast<double>()};
      }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__iter__", [](const Point& p) { return py::iter(as_tuple(p)); })
      .def("__repr__", [](const Point& p) { return "Point(" + scene::format_number(p.x) + ", " +
                                                   scene::format_number(p.y) + ")"; });
  py::implicitly_convertible<py::tuple, Point>();

  py::class_<Circle>(m, "Circle")
      .def(py::init<Point, double>(), py::arg("center"), py::arg("radius"))
      .def_property_readonly("center", &Circle::center)
      .def_property_readonly("radius", &Circle::radius)
      .def("__repr__", [](const Circle& c) {
        return "Circle(center=" + scene::format_point(c.center()) + ", r=" + scene::format_number(c.radius()) + ")";
      });

  py::class_<Line>(m, "Line")
      .def_static("from_equation", &Line::from_equation, py::arg("a"), py::arg("b"), py::arg("offset"))
      .def_property_readonly("normal", &Line::normal)
      .def_property_readonly("offset", &Line::offset)
      .def("signed_distance", &Line::signed_distance)
      .def("__repr__", [](const Line& l) { return "Line(" + scene::format_line(l) + ")"; });

  py::class_<PowerRatio>(m, "PowerRatio")
      .def(py::init<double, double>(), py::arg("num"), py::arg("den") = 1.0)
      .def_static("infinite", &PowerRatio::infinite)
      .def_property_readonly("num", &PowerRatio::num)
      .def_property_readonly("den", &PowerRatio::den)
      .def("value", &PowerRatio::value);
  py::implicitly_convertible<py::float_, PowerRatio>();
  py::implicitly_convertible<py::int_, PowerRatio>();

  py::class_<Locus>(m, "Locus")
      .def_property_readonly("kind", [](const Locus& l) { return std::string(to_string(l.kind())); })
      .def_property_readonly("geometry", &locus_geometry)
      .def("__repr__", [](const Locus& l) { return "Locus(" + scene::format_locus(l) + ")"; });

  m.def("power", &power, py::arg("circle"), py::arg("point"));
  m.def("radical_axis", [](const Circle& a, const Circle& b) { return radical_axis(a, b); });
  m.def("circumcircle", [](Point a, Point b, Point c) { return circumcircle(a, b, c); });
  m.def("circle_intersection", [](const Circle& a, const Circle& b) { return circle_intersection(a, b); });

  m.def("generalized_locus",
        [](const Circle& c1, const Circle& c2, const PowerRatio& k) { return generalized_locus(c1, c2, k); },
        py::arg("c1"), py::arg("c2"), py::arg("k"));
  m.def("classify", [](const Circle& c1, const Circle& c2, const PowerRatio& k) {
    return std::string(to_string(classify(c1, c2, k)));
  });
  m.def("k_thresholds", [](const Circle& c1, const Circle& c2) { return thresholds_to_python(k_thresholds(c1, c2)); });
  m.def("apollonius_of_point", [](Point a, const Circle& c1, const Circle& c2) {
    return apollonius_of_point(a, c1, c2);
  });

  m.def("classic_apollonius", [](Point a, Point b, Point c) { return classic_apollonius(a, b, c).locus; });
  m.def("bisector_feet", [](Point a, Point b, Point c) {
    const BisectorFeet f = bisector_feet(a, b, c);
    return py::make_tuple(f.internal, f.external);
  });
  m.def("lemoine_data", [](Point a, Point b, Point c) {
    const LemoineData d = lemoine_data(a, b, c);
    py::dict out;
    out["m"] = py::make_tuple(d.m_a, d.m_b, d.m_c);
    out["s"] = py::make_tuple(d.s1, d.s2);
    out["o"] = d.o;
    out["line"] = d.lemoine;
    return out;
  });

  const auto triple = [](const Circle& a, const Circle& b, const Circle& c) { return CircleTriple(a, b, c); };
  m.def("menelaus_product",
        [=](const Circle& a, const Circle& b, const Circle& c) { return menelaus_product(triple(a, b, c)); });
  m.def("collinearity_balance", [=](const Circle& a, const Circle& b, const Circle& c) {
    const CollinearityBalance bal = collinearity_balance(triple(a, b, c));
    return py::make_tuple(bal.lhs, bal.rhs);
  });
  m.def("collinearity_predicate",
        [=](const Circle& a, const Circle& b, const Circle& c) { return collinearity_predicate(triple(a, b, c)); });
  m.def("generalized_centers", [=](const Circle& a, const Circle& b, const Circle& c) {
    const GeneralizedCenters g = generalized_centers(triple(a, b, c));
    return py::make_tuple(g.m[0], g.m[1], g.m[2]);
  });
  m.def("k_radical_axes", [=](const Circle& a, const Circle& b, const Circle& c) {
    const KRadicalAxes ax = k_radical_axes(triple(a, b, c));
    return py::make_tuple(py::make_tuple(ax.axes[0], ax.axes[1], ax.axes[2]), ax.o);
  });
  m.def("circumcenter_power", [=](const Circle& a, const Circle& b, const Circle& c, int index) {
    return circumcenter_power(triple(a, b, c), index);
  });

  m.def("grid_scan",
        [](const Circle& c1, const Circle& c2, const PowerRatio& k, double x0, double x1, double y0, double y1,
           double step) { return oracle::grid_scan(c1, c2, k, {x0, x1, y0, y1, step}); },
        py::arg("c1"), py::arg("c2"), py::arg("k"), py::arg("x_min"), py::arg("x_max"), py::arg("y_min"),
        py::arg("y_max"), py::arg("step"));
  m.def("fit_circle", [](const std::vector<Point>& pts) {
    const oracle::FitResult f = oracle::fit_circle(pts);
    return py::make_tuple(f.circle, f.rms_residual);
  });

  m.def("run_scene", &run_scene_text, py::arg("text"), py::arg("svg") = false, py::arg("tol") = 1e-9);
  m.def("selftest", [](std::uint64_t seed) {
    const auto results = selftest::run(seed);
    return py::make_tuple(selftest::all_passed(results), selftest::format(seed, results));
  }, py::arg("seed") = 0);
}
