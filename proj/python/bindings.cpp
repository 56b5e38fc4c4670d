// Python bindings for the planner core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trochoid/bench.hpp"
#include "trochoid/dubins.hpp"
#include "trochoid/planner.hpp"

namespace py = pybind11;
using namespace trochoid;

namespace {

py::list samples_of(const SampledPath& path) {
    py::list out;
    for (const PathSample& s : path.samples)
        out.append(py::make_tuple(s.t, s.pose.x, s.pose.y, s.pose.z, s.pose.psi));
    return out;
}

py::dict report_dict(const BenchReport& r) {
    py::dict words, blocks;
    for (int i = 0; i < 4; ++i)
        words[to_string(static_cast<PathWord>(i))] = r.word_distribution[i];
    for (int l = 1; l <= 4; ++l)
        for (int m = 1; m <= 4; ++m)
            blocks[("a" + std::to_string(l) + std::to_string(m)).c_str()] =
                r.block_distribution[4 * (l - 1) + (m - 1)];
    py::dict d;
    d["schema"] = 1;
    d["n_samples"] = r.n_samples;
    d["seed"] = r.seed;
    d["word_distribution"] = words;
    d["block_distribution"] = blocks;
    d["pct_d_gt_4R"] = r.pct_d_gt_4r;
    d["mean_numeric_solves"] = r.mean_numeric_solves;
    d["mean_candidates"] = r.mean_candidates;
    d["mean_time_reduced"] = r.mean_time_reduced;
    d["mean_time_baseline"] = r.mean_time_baseline;
    d["mismatches"] = r.mismatches;
    d["n_d_gt_4R"] = r.n_d_gt_4r;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Time-optimal turn-rate-constrained paths in uniform wind";

    py::register_exception<WindTooStrong>(m, "WindTooStrongError", PyExc_ValueError);
    py::register_exception<DegeneratePoints>(m, "DegeneratePointsError", PyExc_ValueError);
    py::register_exception<NoSolution>(m, "NoSolutionError", PyExc_RuntimeError);

    py::enum_<PathWord>(m, "PathWord")
        .value("LSL", PathWord::LSL)
        .value("LSR", PathWord::LSR)
        .value("RSL", PathWord::RSL)
        .value("RSR", PathWord::RSR);

    py::class_<Pose>(m, "Pose")
        .def(py::init<double, double, double, double>(), py::arg("x"), py::arg("y"),
             py::arg("z"), py::arg("psi"))
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("psi"))
        .def_readonly("x", &Pose::x)
        .def_readonly("y", &Pose::y)
        .def_readonly("z", &Pose::z)
        .def_readonly("psi", &Pose::psi)
        .def("__repr__", [](const Pose& p) {
            return "Pose(x=" + std::to_string(p.x) + ", y=" + std::to_string(p.y) +
                   ", z=" + std::to_string(p.z) + ", psi=" + std::to_string(p.psi) + ")";
        });

    py::class_<Wind>(m, "Wind")
        .def(py::init([](double wx, double wy) { return Wind{wx, wy}; }), py::arg("wx"),
             py::arg("wy"))
        .def_readonly("wx", &Wind::wx)
        .def_readonly("wy", &Wind::wy)
        .def("speed", &Wind::speed)
        .def("angle", &Wind::angle);

    py::class_<VehicleLimits>(m, "VehicleLimits")
        .def(py::init<double, double>(), py::arg("airspeed"), py::arg("max_turn_rate"))
        .def_readonly("airspeed", &VehicleLimits::airspeed)
        .def_readonly("max_turn_rate", &VehicleLimits::max_turn_rate)
        .def("radius", &VehicleLimits::radius)
        .def("period", &VehicleLimits::period);

    py::class_<PlanResult>(m, "PlanResult")
        .def_property_readonly("word", [](const PlanResult& r) { return r.word; })
        .def_property_readonly("total_time", [](const PlanResult& r) { return r.total_time; })
        .def_property_readonly("candidates_evaluated",
                               [](const PlanResult& r) { return r.candidates_evaluated; })
        .def_property_readonly("numeric_solves",
                               [](const PlanResult& r) { return r.numeric_solves; })
        .def_property_readonly("regime",
                               [](const PlanResult& r) { return std::string(to_string(r.regime)); })
        .def("samples", [](const PlanResult& r) { return samples_of(r.best); },
             "sampled path as (t, x, y, z, psi) tuples in the inertial frame");

    m.def("plan", &plan, py::arg("start"), py::arg("goal"), py::arg("wind"), py::arg("limits"),
          py::arg("dt") = 0.1, "reduced-candidate time-optimal plan");
    m.def("baseline_plan", &baseline_plan, py::arg("start"), py::arg("goal"), py::arg("wind"),
          py::arg("limits"), py::arg("dt") = 0.1, "exhaustive four-word plan");

    m.def(
        "shortest_dubins",
        [](double alpha, double beta, double d) {
            const DubinsSolution s = shortest_dubins(alpha, beta, d);
            py::dict out;
            out["word"] = s.word;
            out["t"] = s.t;
            out["p"] = s.p;
            out["q"] = s.q;
            out["length"] = s.length();
            return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("d"),
        "shortest no-wind Dubins word for a radius-normalized problem");

    m.def(
        "decision_table",
        [](int l, int m_, bool corrected) {
            std::vector<std::string> words;
            for (PathWord w : decision_table({l, m_}, corrected))
                words.emplace_back(to_string(w));
            return words;
        },
        py::arg("l"), py::arg("m"), py::arg("corrected") = true,
        "candidate words of decision-table block a_lm");

    m.def(
        "validate_table",
        [](double d, int grid_n, bool corrected) {
            const TableReport r = validate_table(d, grid_n, corrected);
            py::dict out;
            out["d"] = r.d;
            out["grid_n"] = r.grid_n;
            out["corrected"] = r.corrected;
            out["total_violations"] = r.total_violations();
            py::list violations;
            for (const TableViolation& v : r.violations) {
                py::dict jv;
                jv["l"] = v.l;
                jv["m"] = v.m;
                jv["alpha"] = v.alpha;
                jv["beta"] = v.beta;
                jv["optimal"] = std::string(to_string(v.optimal));
                violations.append(jv);
            }
            out["violations"] = violations;
            return out;
        },
        py::arg("d") = 4.01, py::arg("grid_n") = 200, py::arg("corrected") = true,
        "grid-check the decision table against the shortest-path oracle");

    m.def(
        "run_bench",
        [](int n_samples, std::uint64_t seed, double position_range, double wind_min,
           double wind_max, double radius_min, double radius_max, double airspeed, double dt) {
            BenchConfig cfg;
            cfg.n_samples = n_samples;
            cfg.seed = seed;
            cfg.position_range = position_range;
            cfg.wind_min = wind_min;
            cfg.wind_max = wind_max;
            cfg.radius_min = radius_min;
            cfg.radius_max = radius_max;
            cfg.airspeed = airspeed;
            cfg.dt = dt;
            return report_dict(run_bench(cfg));
        },
        py::arg("n_samples") = 10000, py::arg("seed") = 0, py::arg("position_range") = 1000.0,
        py::arg("wind_min") = 1.0, py::arg("wind_max") = 15.0, py::arg("radius_min") = 10.0,
        py::arg("radius_max") = 1000.0, py::arg("airspeed") = 20.0, py::arg("dt") = 0.1,
        "Monte-Carlo reduced-vs-baseline benchmark");
}
