#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swcontract/certify.hpp"
#include "swcontract/json_io.hpp"
#include "swcontract/models.hpp"
#include "swcontract/norms.hpp"
#include "swcontract/repro.hpp"
#include "swcontract/simsw.hpp"
#include "swcontract/transact.hpp"

namespace py = pybind11;

namespace {

// Norms and matrices cross the boundary as JSON-compatible Python objects
// (the same schemas the CLI uses), which keeps the binding surface small.

swc::Json to_json(const py::object& obj) {
    const py::module_ json = py::module_::import("json");
    const std::string dumped = json.attr("dumps")(obj).cast<std::string>();
    return swc::Json::parse(dumped);
}

py::object from_json(const swc::Json& j) {
    const py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

swc::Mat mat_arg(const py::object& rows) { return swc::matrix_from_json(to_json(rows), "A"); }
swc::NormSpec norm_arg(const py::object& spec) { return swc::norm_from_json(to_json(spec), "norm"); }

swc::SwitchingSignal signal_arg(const py::object& spec) {
    return swc::signal_from_json(to_json(spec), "signal");
}

}  // namespace

PYBIND11_MODULE(_swcontract, m) {
    m.doc() = "Contraction certificates and simulation for switched systems";

    py::register_exception<swc::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<swc::UnsupportedPair>(m, "UnsupportedPair", PyExc_ValueError);
    py::register_exception<swc::Infeasible>(m, "Infeasible", PyExc_ValueError);
    py::register_exception<swc::MissingBound>(m, "MissingBound", PyExc_ValueError);
    py::register_exception<swc::UnsupportedGraph>(m, "UnsupportedGraph", PyExc_ValueError);

    m.def(
        "matrix_measure",
        [](const py::object& norm, const py::object& a) {
            return from_json(swc::measure_to_json(swc::matrix_measure(norm_arg(norm), mat_arg(a))));
        },
        py::arg("norm"), py::arg("a"),
        "Matrix measure (logarithmic norm) of a square matrix under a norm spec");

    m.def(
        "induced_norm",
        [](const py::object& norm, const py::object& a) {
            return swc::induced_matrix_norm(norm_arg(norm), mat_arg(a));
        },
        py::arg("norm"), py::arg("a"));

    m.def(
        "norm_eval",
        [](const py::object& norm, const swc::Vec& x) { return swc::norm_eval(norm_arg(norm), x); },
        py::arg("norm"), py::arg("x"));

    m.def(
        "beta",
        [](const py::object& from, const py::object& to, const std::string& method, int samples,
           uint64_t seed) {
            swc::BetaResult r;
            if (method == "exact")
                r = swc::beta_exact(norm_arg(from), norm_arg(to));
            else if (method == "fallback")
                r = swc::beta_with_fallback(norm_arg(from), norm_arg(to));
            else if (method == "sampled")
                r = swc::sampled_sup(norm_arg(from), norm_arg(to), samples, seed);
            else
                throw swc::InvalidInput("beta: method must be exact, fallback or sampled");
            return from_json(swc::beta_to_json(r));
        },
        py::arg("from_norm"), py::arg("to_norm"), py::arg("method") = "exact",
        py::arg("samples") = 2000, py::arg("seed") = 0,
        "Transaction coefficient sup |x|_to / |x|_from");

    m.def(
        "certify_staircase",
        [](const std::map<int, double>& alpha,
           const std::vector<std::tuple<int, int, double>>& beta, const py::object& signal,
           double T0, double Tmax, double c_min) {
            swc::ModeBounds bounds;
            bounds.alpha = alpha;
            for (const auto& [f, t, v] : beta) bounds.beta[{f, t}] = v;
            const swc::SwitchingSignal sig = signal_arg(signal);
            return from_json(swc::certificate_to_json(
                swc::certify_staircase(bounds, sig, sig.t0(), T0, Tmax, c_min)));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("signal"), py::arg("T0") = 0.0,
        py::arg("Tmax") = 0.0, py::arg("c_min") = 0.0);

    m.def(
        "certify_ltv_two_mode",
        [](double mu1, double mu2, double beta12, double beta21, double phi_r) {
            return from_json(swc::certificate_to_json(
                swc::certify_ltv_two_mode(mu1, mu2, beta12, beta21, phi_r)));
        },
        py::arg("mu1"), py::arg("mu2"), py::arg("beta12"), py::arg("beta21"), py::arg("phi_r"));

    m.def(
        "solve_min_period",
        [](double mu0, double mu1, double beta01, double beta10, double duty_off, double c_min) {
            return swc::solve_min_period(mu0, mu1, beta01, beta10, duty_off, c_min);
        },
        py::arg("mu0"), py::arg("mu1"), py::arg("beta01"), py::arg("beta10"),
        py::arg("duty_off") = 0.25, py::arg("c_min") = 0.0);

    m.def(
        "simulate_linear",
        [](const std::map<int, std::pair<py::object, swc::Vec>>& modes, const py::object& signal,
           const swc::Vec& x0, double t0, double tf, double dt) {
            std::map<int, swc::ModeDynamics> dyn;
            int dim = static_cast<int>(x0.size());
            for (const auto& [id, ab] : modes) dyn[id] = swc::linear_mode(mat_arg(ab.first), ab.second);
            const swc::Trajectory traj =
                swc::simulate(swc::SwitchedSystem(std::move(dyn), dim), signal_arg(signal), x0, t0,
                              tf, dt);
            py::dict out;
            out["times"] = traj.times;
            out["states"] = traj.states;
            out["modes"] = traj.modes;
            out["diverged"] = traj.diverged;
            return out;
        },
        py::arg("modes"), py::arg("signal"), py::arg("x0"), py::arg("t0"), py::arg("tf"),
        py::arg("dt") = 1e-3, "Integrate a switched linear system; modes maps id -> (A, B)");

    m.def("lambda2_graph", [](const py::object& graph) {
        return swc::lambda2(swc::graph_from_json(to_json(graph), "graph"));
    });

    m.def("sample_graph10",
          []() { return from_json(swc::graph_to_json(swc::sample_graph10())); });

    m.def("repro_report", []() { return from_json(swc::repro_to_json(swc::repro_rows())); });
}
