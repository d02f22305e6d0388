#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entropy_kit/bounds.hpp"
#include "entropy_kit/entropies.hpp"
#include "entropy_kit/verify.hpp"

namespace py = pybind11;
using namespace entropy_kit;

namespace {

ProbabilityDistribution dist(std::vector<double> p) { return ProbabilityDistribution(std::move(p)); }

DensityOperator state(const Matrix& m) { return DensityOperator(m); }

std::vector<GridPoint> grid(const std::vector<std::pair<double, double>>& pts) {
    std::vector<GridPoint> g;
    for (const auto& [q, s] : pts) g.push_back({q, s});
    return g;
}

}  // namespace

PYBIND11_MODULE(_entropy_kit, m) {
    m.doc() = "Unified (q,s)-entropies, continuity bounds and inequality checks";

    auto base = py::register_exception<Error>(m, "EntropyKitError", PyExc_ValueError);
    py::register_exception<OutOfValidity>(m, "OutOfValidity", base.ptr());

    m.def("shannon", [](std::vector<double> p) { return shannon(dist(std::move(p))); }, py::arg("p"));
    m.def("renyi", [](std::vector<double> p, double q) { return renyi(dist(std::move(p)), q); }, py::arg("p"),
          py::arg("q"));
    m.def("tsallis", [](std::vector<double> p, double q) { return tsallis(dist(std::move(p)), q); }, py::arg("p"),
          py::arg("q"));
    m.def("type_q", [](std::vector<double> p, double q) { return type_q_entropy(dist(std::move(p)), q); },
          py::arg("p"), py::arg("q"));
    m.def(
        "unified",
        [](std::vector<double> p, double q, double s) { return unified_classical(dist(std::move(p)), {q, s}); },
        py::arg("p"), py::arg("q"), py::arg("s"));

    m.def("von_neumann", [](const Matrix& rho) { return von_neumann(state(rho)); }, py::arg("rho"));
    m.def(
        "unified_quantum", [](const Matrix& rho, double q, double s) { return unified_quantum(state(rho), {q, s}); },
        py::arg("rho"), py::arg("q"), py::arg("s"));
    m.def(
        "trace_distance", [](const Matrix& a, const Matrix& b) { return trace_distance(state(a), state(b)); },
        py::arg("rho"), py::arg("omega"));

    m.def(
        "fannes_tsallis_low_q",
        [](double q, std::uint64_t d, double eps) { return fannes_tsallis_low_q({q, 0.0, d, eps}); }, py::arg("q"),
        py::arg("d"), py::arg("eps"));
    m.def(
        "fannes_tsallis_high_q",
        [](double q, std::uint64_t d, double eps) { return fannes_tsallis_high_q({q, 1.0, d, eps}); }, py::arg("q"),
        py::arg("d"), py::arg("eps"));
    m.def(
        "unified_fannes_bound",
        [](double q, double s, std::uint64_t d, double eps) { return unified_fannes_bound({q, s, d, eps}); },
        py::arg("q"), py::arg("s"), py::arg("d"), py::arg("eps"));
    m.def("lipschitz_bound", &lipschitz_bound, py::arg("eps"), py::arg("q"));
    m.def("max_unified", &max_unified, py::arg("q"), py::arg("s"), py::arg("d"));
    m.def(
        "stability_ratio_bound",
        [](double q, double s, std::uint64_t d, double eps) { return stability_ratio_bound({q, s, d, eps}); },
        py::arg("q"), py::arg("s"), py::arg("d"), py::arg("eps"));
    m.def("thermodynamic_limit_ratio", &thermodynamic_limit_ratio, py::arg("q"), py::arg("s"), py::arg("eps"));

    m.def(
        "stability_ratio",
        [](int example, double eps, std::uint64_t d, double q, double s) {
            if (example != 0 && example != 1) throw InvalidIndex("example must be 0 or 1");
            const auto v = example == 0 ? StabilityVariant::Example0 : StabilityVariant::Example1;
            return stability_ratio(StabilityExample(v, eps, d, q, s));
        },
        py::arg("example"), py::arg("eps"), py::arg("d"), py::arg("q"), py::arg("s"));

    m.def("check_names", &check_names);
    // Reports cross the boundary as JSON text; the Python wrapper decodes them.
    m.def(
        "_run_check",
        [](const std::string& name, std::size_t trials, std::uint64_t seed,
           const std::vector<std::pair<double, double>>& params, const std::vector<double>& q_grid,
           const std::vector<std::size_t>& dims, bool reversed) {
            CheckConfig cfg;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.params = grid(params);
            cfg.q_grid = q_grid;
            cfg.dims = dims;
            cfg.reversed = reversed;
            std::vector<CheckReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_check(name, cfg);
            }
            std::vector<std::pair<std::string, bool>> out;
            for (const auto& r : reports) out.emplace_back(r.to_json().dump(), report_ok(r));
            return out;
        },
        py::arg("name"), py::arg("trials"), py::arg("seed"), py::arg("params"), py::arg("q_grid"), py::arg("dims"),
        py::arg("reversed"));
}
