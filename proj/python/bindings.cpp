#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maggraph/bounds.hpp"
#include "maggraph/errors.hpp"
#include "maggraph/generate.hpp"
#include "maggraph/serialize.hpp"

namespace py = pybind11;
using namespace maggraph;

namespace {

LaplacianKind kind_of(bool plain) { return plain ? LaplacianKind::plain : LaplacianKind::magnetic; }

SearchMode mode_of(bool exact) { return exact ? SearchMode::exact : SearchMode::heuristic; }

// nlohmann -> Python objects by way of the json module
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

template <class Records>
py::object records_to_py(const Records& records) {
    Json arr = Json::array();
    for (const auto& r : records) {
        arr.push_back(to_json(r));
    }
    return to_py(arr);
}

py::object distance_to_py(const Distance& d) { return d ? py::object(py::int_(*d)) : py::object(py::none()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Magnetic graphs: Laplacians, curvature, lifts, frustration and spectral bounds";

    // translators run newest first, so subclasses are registered after the base
    auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<EmptySubsetError>(m, "EmptySubsetError", base.ptr());

    py::class_<MagneticGraph>(m, "Graph")
        .def(py::init([](int num_vertices, int ell, const std::vector<std::tuple<int, int, double, int>>& edges) {
                 std::vector<Edge> es;
                 for (const auto& [u, v, w, s] : edges) {
                     es.push_back({u, v, w, s});
                 }
                 return MagneticGraph(num_vertices, ell, std::move(es));
             }),
             py::arg("num_vertices"), py::arg("ell"), py::arg("edges"),
             "edges: iterable of (u, v, w, s) with s the exponent for orientation u -> v")
        .def_static("from_json", [](const std::string& text) { return load_graph(text); })
        .def_static("load", &load_graph_file)
        .def("to_json", &dump_graph)
        .def_property_readonly("num_vertices", &MagneticGraph::num_vertices)
        .def_property_readonly("ell", &MagneticGraph::ell)
        .def_property_readonly("edges",
                               [](const MagneticGraph& g) {
                                   std::vector<std::tuple<int, int, double, int>> out;
                                   for (const Edge& e : g.edges()) {
                                       out.emplace_back(e.u, e.v, e.w, e.s);
                                   }
                                   return out;
                               })
        .def_property_readonly("degrees",
                               [](const MagneticGraph& g) {
                                   return std::vector<double>(g.degrees().begin(), g.degrees().end());
                               })
        .def("is_connected", &MagneticGraph::is_connected)
        .def("__repr__", [](const MagneticGraph& g) {
            return "<Graph num_vertices=" + std::to_string(g.num_vertices()) + " ell=" + std::to_string(g.ell()) +
                   " edges=" + std::to_string(g.edges().size()) + ">";
        });

    m.def("random_graph",
          [](int vertices, double edge_prob, int ell, std::uint64_t seed) {
              return random_magnetic_graph({vertices, edge_prob, ell, seed});
          },
          py::arg("vertices"), py::arg("edge_prob"), py::arg("ell"), py::arg("seed") = 0);

    m.def("diameter", [](const MagneticGraph& g) { return distance_to_py(diameter(g)); });
    m.def("signature_status", [](const MagneticGraph& g) {
        const SignatureStatus st = signature_status(g);
        return py::make_tuple(st.balanced, st.entire);
    });

    m.def("laplacian_matrix", [](const MagneticGraph& g, bool plain) { return laplacian_matrix(g, kind_of(plain)); },
          py::arg("g"), py::arg("plain") = false);
    m.def("energy",
          [](const MagneticGraph& g, const CVector& f, bool plain) { return energy(g, f, kind_of(plain)); },
          py::arg("g"), py::arg("f"), py::arg("plain") = false);
    m.def("spectrum",
          [](const MagneticGraph& g, bool plain) {
              const SpectralData sd = spectrum(g, kind_of(plain));
              return py::make_tuple(sd.eigenvalues, sd.eigenvectors);
          },
          py::arg("g"), py::arg("plain") = false, "(eigenvalues ascending, eigenvectors as columns)");

    m.def("kappa_max",
          [](const MagneticGraph& g, double n, bool plain) { return to_py(to_json(kappa_max(g, n, kind_of(plain)))); },
          py::arg("g"), py::arg("n") = 2.0, py::arg("plain") = false);
    m.def("cd_check",
          [](const MagneticGraph& g, double n, double kappa, bool plain) {
              return cd_check_graph(g, n, kappa, kind_of(plain)).pass;
          },
          py::arg("g"), py::arg("n"), py::arg("kappa"), py::arg("plain") = false);

    m.def("lift", [](const MagneticGraph& g) { return build_lift(g).graph(); });
    m.def("lift_function", &lift_function, py::arg("g"), py::arg("f"));
    m.def("lift_diameter_check", [](const MagneticGraph& g) { return to_py(to_json(lift_diameter_check(g))); });

    m.def("magnetic_girth",
          [](const MagneticGraph& g, long long budget) { return distance_to_py(magnetic_girth(g, budget)); },
          py::arg("g"), py::arg("budget") = kDefaultBudget);
    m.def("frustration_index",
          [](const MagneticGraph& g, std::optional<std::vector<int>> subset, bool exact, long long budget,
             std::uint64_t seed) {
              std::vector<int> s;
              if (subset) {
                  s = *subset;
              } else {
                  for (int x = 0; x < g.num_vertices(); ++x) {
                      s.push_back(x);
                  }
              }
              return to_py(to_json(frustration_index(g, s, mode_of(exact), budget, seed)));
          },
          py::arg("g"), py::arg("subset") = py::none(), py::arg("exact") = true, py::arg("budget") = kDefaultBudget,
          py::arg("seed") = 0);
    m.def("cheeger_number",
          [](const MagneticGraph& g, bool exact, long long budget, std::uint64_t seed) {
              return to_py(to_json(cheeger_number(g, mode_of(exact), budget, seed)));
          },
          py::arg("g"), py::arg("exact") = true, py::arg("budget") = kDefaultBudget, py::arg("seed") = 0);

    m.def("harnack_check",
          [](const MagneticGraph& g, double n, std::optional<double> kappa, bool plain) {
              return records_to_py(harnack_check(g, n, kappa, kind_of(plain)));
          },
          py::arg("g"), py::arg("n") = 2.0, py::arg("kappa") = py::none(), py::arg("plain") = false);
    m.def("eigenvalue_lower_bound",
          [](const MagneticGraph& g, double n, std::optional<double> kappa) {
              return to_py(to_json(eigenvalue_lower_bound(g, n, kappa)));
          },
          py::arg("g"), py::arg("n") = 2.0, py::arg("kappa") = py::none());
    m.def("verify",
          [](const MagneticGraph& g, double n, std::optional<double> kappa, long long budget) {
              return to_py(to_json(verify(g, n, kappa, budget)));
          },
          py::arg("g"), py::arg("n") = 2.0, py::arg("kappa") = py::none(), py::arg("budget") = kDefaultBudget);
}
