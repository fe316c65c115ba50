#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mtree/covering.hpp"
#include "mtree/distance_matrix.hpp"
#include "mtree/document.hpp"
#include "mtree/gallery.hpp"
#include "mtree/noncompactness.hpp"
#include "mtree/report.hpp"
#include "mtree/structure.hpp"

namespace py = pybind11;
using namespace mtree;

namespace {

// Reports travel as JSON so Python sees the same shapes as the CLI.
py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Tolerance tolerance(std::optional<double> tol) {
  Tolerance t;
  if (tol) t.abs_eps = t.rel_eps = *tol;
  return t;
}

std::vector<std::string> labels_or_all(const TreeDocument& doc,
                                       std::optional<std::vector<std::string>> names) {
  std::vector<std::string> labels;
  if (names) {
    labels = *names;
  } else {
    for (const NamedPoint& p : doc.points) labels.push_back(p.name);
  }
  if (labels.empty()) throw Error(ErrorCode::kEmptySet, "no points selected");
  return labels;
}

PointSet resolve(const TreeDocument& doc, const std::vector<std::string>& labels) {
  std::vector<TreePoint> points;
  for (const std::string& label : labels) points.push_back(doc.require(label));
  return PointSet(doc.tree, std::move(points));
}

py::object measure(const TreeDocument& doc, std::optional<std::vector<std::string>> points,
                   std::optional<std::size_t> n_max) {
  const std::vector<std::string> labels = labels_or_all(doc, std::move(points));
  const PointSet set = resolve(doc, labels);
  const MeasureReport report = measure_report(set, n_max.value_or(set.distinct().size()));
  return to_python(measure_json(doc, labels, report));
}

py::object cover(const TreeDocument& doc, double radius,
                 std::optional<std::vector<std::string>> points) {
  const std::vector<std::string> labels = labels_or_all(doc, std::move(points));
  return to_python(ball_cover_json(doc, labels, min_ball_cover(resolve(doc, labels), radius)));
}

py::object partition(const TreeDocument& doc, double bound,
                     std::optional<std::vector<std::string>> points) {
  const std::vector<std::string> labels = labels_or_all(doc, std::move(points));
  return to_python(
      partition_json(labels, min_diameter_partition(resolve(doc, labels), bound)));
}

py::object profile(const TreeDocument& doc, const std::string& kind,
                   std::optional<std::vector<std::string>> points,
                   std::optional<std::size_t> n_max) {
  const PointSet set = resolve(doc, labels_or_all(doc, std::move(points)));
  const std::size_t n = n_max.value_or(set.distinct().size());
  CoverProfile p;
  if (kind == "alpha") {
    p = alpha_profile(set, n);
  } else if (kind == "beta") {
    p = beta_profile(set, n);
  } else if (kind == "beta_star") {
    p = beta_star_profile(set, n);
  } else {
    throw Error(ErrorCode::kBadParams, "unknown profile '" + kind + "'");
  }
  return py::cast(p.values);
}

}  // namespace

PYBIND11_MODULE(_mtree, m) {
  m.doc() = "Finite metric trees: geodesics, covering profiles and structure checks";

  static py::exception<Error> error_type(m, "MtreeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("indices") = e.indices();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<TreeDocument>(m, "Tree")
      .def_static(
          "parse", [](const std::string& text, std::optional<double> tol) {
            return parse_tree(text, tolerance(tol));
          },
          py::arg("text"), py::arg("tol") = py::none())
      .def_static(
          "load", [](const std::string& path, std::optional<double> tol) {
            return parse_tree(read_text_file(path), tolerance(tol));
          },
          py::arg("path"), py::arg("tol") = py::none())
      .def_static(
          "gallery",
          [](const std::string& name, std::size_t size, double length) {
            return gallery(name, {size, length});
          },
          py::arg("name"), py::arg("size") = 3, py::arg("length") = 1.0)
      .def("to_text", &serialize_tree)
      .def_property_readonly("node_count",
                             [](const TreeDocument& d) { return d.tree.node_count(); })
      .def_property_readonly("edge_count",
                             [](const TreeDocument& d) { return d.tree.edge_count(); })
      .def_readonly("node_names", &TreeDocument::node_names)
      .def_property_readonly("point_names",
                             [](const TreeDocument& d) {
                               std::vector<std::string> names;
                               for (const NamedPoint& p : d.points) names.push_back(p.name);
                               return names;
                             })
      .def("distance",
           [](const TreeDocument& d, const std::string& a, const std::string& b) {
             return d.tree.distance(d.require(a), d.require(b));
           })
      .def("is_between",
           [](const TreeDocument& d, const std::string& x, const std::string& y,
              const std::string& z) {
             return d.tree.is_between(d.require(x), d.require(y), d.require(z));
           })
      .def("median",
           [](const TreeDocument& d, const std::string& x, const std::string& y,
              const std::string& z) {
             return to_python(
                 point_json(d, d.tree.median(d.require(x), d.require(y), d.require(z))));
           })
      .def("midpoint",
           [](const TreeDocument& d, const std::string& x, const std::string& y) {
             return to_python(point_json(d, d.tree.midpoint(d.require(x), d.require(y))));
           })
      .def("leaves",
           [](const TreeDocument& d) {
             std::vector<std::string> names;
             for (const TreePoint& leaf : leaves(d.tree).leaves) {
               names.push_back(d.node_name(leaf.node()));
             }
             return names;
           })
      .def("profile", &profile, py::arg("kind"), py::arg("points") = py::none(),
           py::arg("n_max") = py::none())
      .def("measure", &measure, py::arg("points") = py::none(), py::arg("n_max") = py::none())
      .def("cover", &cover, py::arg("radius"), py::arg("points") = py::none())
      .def("partition", &partition, py::arg("diameter"), py::arg("points") = py::none())
      .def(
          "kappa",
          [](const TreeDocument& d, std::size_t trials, std::uint64_t seed) {
            return to_python(kappa_json(kappa_probe(d.tree, trials, seed)));
          },
          py::arg("trials") = 200, py::arg("seed") = 1);

  m.def(
      "check_four_point",
      [](const std::string& text, std::optional<double> tol) {
        const DistanceMatrix matrix = parse_distance_matrix(text, tolerance(tol));
        return to_python(four_point_json(matrix, check_four_point(matrix)));
      },
      py::arg("matrix_text"), py::arg("tol") = py::none(),
      "Four-point verdict for a CSV or lower-triangle distance matrix.");
  m.def(
      "tree_from_distances",
      [](const std::string& text, std::optional<double> tol) {
        return tree_from_distances(parse_distance_matrix(text, tolerance(tol)));
      },
      py::arg("matrix_text"), py::arg("tol") = py::none());
  m.def(
      "lifschitz_counterexample",
      [](double radius, double a, std::size_t samples) {
        return to_python(counterexample_json(lifschitz_counterexample(radius, a, samples)));
      },
      py::arg("radius"), py::arg("a"), py::arg("samples") = 64);
  m.def("gallery_names", [] {
    std::vector<std::string> names;
    for (std::string_view n : gallery_names()) names.emplace_back(n);
    return names;
  });
}
