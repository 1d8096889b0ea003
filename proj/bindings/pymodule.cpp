#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ecd/ecd_core.hpp"
#include "ecd/grid.hpp"
#include "ecd/majorization.hpp"
#include "ecd/montecarlo.hpp"
#include "ecd/ordering.hpp"
#include "ecd/systems.hpp"

namespace py = pybind11;
using namespace ecd;

namespace {

ComponentSet make_components(const std::vector<std::array<double, 3>>& rows) {
    std::vector<ECDParams> comps;
    comps.reserve(rows.size());
    for (const auto& r : rows) comps.emplace_back(r[0], r[1], r[2]);
    return ComponentSet(std::move(comps));
}

SystemSpec make_system(const std::vector<std::array<double, 3>>& rows,
                       const std::string& kind) {
    SystemKind k;
    if (kind == "series")
        k = SystemKind::Series;
    else if (kind == "parallel")
        k = SystemKind::Parallel;
    else
        throw std::invalid_argument("kind must be 'series' or 'parallel'");
    return SystemSpec{make_components(rows), k};
}

Relation make_relation(const std::string& r) {
    if (r == "st") return Relation::ST;
    if (r == "hr") return Relation::HR;
    if (r == "rh") return Relation::RH;
    if (r == "lr") return Relation::LR;
    throw std::invalid_argument("relation must be one of 'st', 'hr', 'rh', 'lr'");
}

const char* direction_str(Direction d) {
    switch (d) {
        case Direction::A_le_B: return "A_le_B";
        case Direction::B_le_A: return "B_le_A";
        case Direction::Neither: return "Neither";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_ecd, m) {
    m.doc() = "exponentiated-Chen component and system lifetimes";

    py::class_<ECDParams>(m, "Params")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"),
             py::arg("lambda_"))
        .def_readonly("alpha", &ECDParams::alpha)
        .def_readonly("beta", &ECDParams::beta)
        .def_readonly("lambda_", &ECDParams::lambda)
        .def("__repr__", [](const ECDParams& p) {
            std::ostringstream s;
            s << "Params(alpha=" << p.alpha << ", beta=" << p.beta
              << ", lambda_=" << p.lambda << ")";
            return s.str();
        });

    m.def("cdf", [](const ECDParams& p, double x) { return static_cast<double>(cdf(p, x)); },
          py::arg("params"), py::arg("x"));
    m.def("sf", [](const ECDParams& p, double x) { return static_cast<double>(sf(p, x)); },
          py::arg("params"), py::arg("x"));
    m.def("pdf", &pdf, py::arg("params"), py::arg("x"));
    m.def("log_cdf", [](const ECDParams& p, double x) { return static_cast<double>(log_cdf(p, x)); },
          py::arg("params"), py::arg("x"));
    m.def("log_sf", [](const ECDParams& p, double x) { return static_cast<double>(log_sf(p, x)); },
          py::arg("params"), py::arg("x"));
    m.def("hazard", &hazard, py::arg("params"), py::arg("x"));
    m.def("reversed_hazard", &reversed_hazard, py::arg("params"), py::arg("x"));
    m.def("quantile", &quantile, py::arg("params"), py::arg("p"));

    m.def(
        "system_sf",
        [](const std::vector<std::array<double, 3>>& comps, const std::string& kind,
           double x) { return std::exp(system_logs(make_system(comps, kind), x).log_sf); },
        py::arg("components"), py::arg("kind"), py::arg("x"),
        "survival of a series/parallel system of (alpha, beta, lambda) components");
    m.def(
        "system_cdf",
        [](const std::vector<std::array<double, 3>>& comps, const std::string& kind,
           double x) { return std::exp(system_logs(make_system(comps, kind), x).log_cdf); },
        py::arg("components"), py::arg("kind"), py::arg("x"));

    m.def(
        "order_check",
        [](const std::vector<std::array<double, 3>>& a,
           const std::vector<std::array<double, 3>>& b, const std::string& kind,
           const std::string& relation, double lo, double hi, std::size_t n) {
            const SystemSpec sa = make_system(a, kind), sb = make_system(b, kind);
            const Grid g = logspace_grid(lo, hi, n);
            OrderingVerdict v;
            switch (make_relation(relation)) {
                case Relation::ST: v = check_st(sa, sb, g); break;
                case Relation::HR: v = check_hr(sa, sb, g); break;
                case Relation::RH: v = check_rh(sa, sb, g); break;
                case Relation::LR: v = check_lr(sa, sb, g); break;
            }
            py::dict out;
            out["relation"] = relation;
            out["direction"] = direction_str(v.direction);
            out["degenerate_equal"] = v.degenerate_equal;
            out["saturated_points"] = v.saturated_points;
            py::list pts;
            for (const auto& w : v.point_witnesses) {
                py::dict d;
                d["x"] = w.x;
                d["value_a"] = w.value_a;
                d["value_b"] = w.value_b;
                pts.append(d);
            }
            out["point_witnesses"] = pts;
            py::list triples;
            for (const auto& w : v.triple_witnesses) {
                py::dict d;
                d["x"] = py::make_tuple(w.x1, w.x2, w.x3);
                d["ratio"] = py::make_tuple(w.r1, w.r2, w.r3);
                triples.append(d);
            }
            out["triple_witnesses"] = triples;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("kind"), py::arg("relation"),
        py::arg("grid_min"), py::arg("grid_max"), py::arg("grid_count") = 400,
        "compare two systems under st/hr/rh/lr on a log-spaced grid");

    m.def(
        "sample_system",
        [](const std::vector<std::array<double, 3>>& comps, const std::string& kind,
           std::size_t n, std::uint64_t seed) {
            return sample_system(make_system(comps, kind), n, seed).draws;
        },
        py::arg("components"), py::arg("kind"), py::arg("n"), py::arg("seed"),
        "deterministic inverse-transform draws of the system lifetime");

    m.def(
        "majorizes",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return majorizes(ParamVector(a), ParamVector(b));
        },
        py::arg("a"), py::arg("b"),
        "is a majorized by b (a has the more even spread; equal totals required)");
}
