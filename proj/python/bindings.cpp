#include "virmtc/cli.hpp"
#include "virmtc/errors.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace virmtc;

namespace {

std::shared_ptr<const MinimalCategory> category(int p, int q, bool cache) {
    return (cache ? Cache::from_env() : Cache::disabled()).category(p, q);
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Premodular subcategories of Virasoro minimal model categories.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    m.def("run", &run, py::arg("args"), "Run one CLI command; returns (exit code, stdout, stderr).");

    m.def("central_charge", [](int p, int q) { return to_string(central_charge(MinimalModel(p, q))); });
    m.def(
        "weight",
        [](int p, int q, const std::string& label) {
            return to_string(conformal_weight(MinimalModel(p, q), KacLabel::parse(label)));
        },
        py::arg("p"), py::arg("q"), py::arg("label"));

    py::class_<MinimalCategory, std::shared_ptr<MinimalCategory>>(m, "MinimalCategory")
        .def(py::init([](int p, int q, bool cache) {
                 return std::const_pointer_cast<MinimalCategory>(category(p, q, cache));
             }),
             py::arg("p"), py::arg("q"), py::arg("cache") = true)
        .def_property_readonly("p", [](const MinimalCategory& C) { return C.model.p(); })
        .def_property_readonly("q", [](const MinimalCategory& C) { return C.model.q(); })
        .def_property_readonly("rank", [](const MinimalCategory& C) { return C.model.rank(); })
        .def_property_readonly("labels",
                               [](const MinimalCategory& C) {
                                   std::vector<std::string> v;
                                   for (const auto& x : C.model.simples()) v.push_back(x.str());
                                   return v;
                               })
        .def_property_readonly("s_matrix", [](const MinimalCategory& C) { return C.data.s_float(); })
        .def_property_readonly("fpdims", [](const MinimalCategory& C) { return C.dims; })
        .def("qdim", [](const MinimalCategory& C, const std::string& a) { return C.data.qdim(C.index(a)); })
        .def("theta", [](const MinimalCategory& C, const std::string& a) {
            return to_string(C.data.theta_exponent(C.index(a)));
        })
        .def("fuse",
             [](const MinimalCategory& C, const std::string& a, const std::string& b) {
                 std::vector<std::pair<std::string, int>> v;
                 for (const auto& [c, k] : C.ring.product(C.index(a), C.index(b))) v.emplace_back(C.ring.name(c), k);
                 return v;
             })
        .def("subcategories_json",
             [](const MinimalCategory& C) {
                 json j = json::array();
                 for (const auto& s : enumerate_subcats(C)) j.push_back(subcat_record(C, s));
                 return j.dump();
             })
        .def("export_json", [](const MinimalCategory& C) { return export_modular_data(C).dump(); })
        .def("__repr__", [](const MinimalCategory& C) {
            return "MinimalCategory(" + std::to_string(C.model.p()) + ", " + std::to_string(C.model.q()) + ")";
        });

    m.def(
        "glue_json",
        [](int p1, int q1, const std::string& n1, int p2, int q2, const std::string& n2) {
            auto A = category(p1, q1, true), B = category(p2, q2, true);
            json j = json::array();
            for (const auto& g : gluing_candidates(*A, named_subcategory(*A, n1), *B, named_subcategory(*B, n2)))
                j.push_back(candidate_json(g));
            return j.dump();
        },
        py::arg("p1"), py::arg("q1"), py::arg("name1"), py::arg("p2"), py::arg("q2"), py::arg("name2"));

    m.def(
        "extension_json",
        [](int p) {
            ExtensionCategory E(p);
            return extension_ring_json(E).dump();
        },
        py::arg("p"));
}
