// Copyright 2026 The qrws Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrws/errors.hpp"
#include "qrws/hill.hpp"
#include "qrws/neighborhood.hpp"
#include "qrws/robustness.hpp"
#include "qrws/walk.hpp"

namespace py = pybind11;
using namespace qrws;

namespace {

py::dict simulate(int m, std::vector<Node> marked, double phi, double zeta, std::optional<int> iterations,
                  const std::string &mode, const std::string &variant) {
    RunConfig cfg;
    cfg.m = m;
    cfg.marked = std::move(marked);
    cfg.coin = {m, phi, zeta};
    cfg.iterations = iterations;
    cfg.mode = parse_mode(mode);
    cfg.variant = parse_variant(variant);
    SimulationResult r;
    {
        py::gil_scoped_release release;
        r = run(cfg);
    }
    py::dict out;
    out["distribution"] = r.distribution;
    out["trace"] = r.trace;
    out["oracle_calls"] = r.oracle_calls;
    out["iterations_run"] = r.iterations_run;
    return out;
}

py::dict sweep(int m, const std::string &law, Node marked, double step, std::map<int, double> alpha) {
    PhiSweep s;
    {
        py::gil_scoped_release release;
        s = sweep_phi(m, DependenceLaw::parse(law, std::move(alpha)), marked, phi_grid(step));
    }
    py::dict out;
    out["phi"] = s.phi;
    out["zeta"] = s.zeta;
    out["p_w"] = s.p_w;
    out["p_f"] = s.p_f;
    out["p_s"] = s.p_s;
    return out;
}

}  // namespace

PYBIND11_MODULE(_qrws, mod) {
    mod.doc() = "Quantum random walk search on the hypercube";

    static py::exception<Error> error(mod, "QrwsError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            error(e.what());
        }
    });

    mod.def("iteration_count", &iteration_count, py::arg("m"));
    mod.def("simulate", &simulate, py::arg("m"), py::arg("marked") = std::vector<Node>{2}, py::arg("phi") = kPi,
            py::arg("zeta") = kPi, py::arg("iterations") = py::none(), py::arg("mode") = "standard",
            py::arg("variant") = "with_shift");
    mod.def(
        "aggregate",
        [](const std::vector<double> &distribution, Node marked, int m) {
            const auto a = aggregate(distribution, marked, m);
            return py::dict(py::arg("p_w") = a.p_w(), py::arg("first") = a.p_first_sum,
                            py::arg("second") = a.p_second_sum, py::arg("residue") = a.residue,
                            py::arg("p_f") = a.p_f(), py::arg("p_s") = a.p_s());
        },
        py::arg("distribution"), py::arg("marked"), py::arg("m"));
    mod.def(
        "zeta_of_phi",
        [](const std::string &law, double phi, int m, std::map<int, double> alpha) {
            return zeta_of_phi(DependenceLaw::parse(law, std::move(alpha)), phi, m);
        },
        py::arg("law"), py::arg("phi"), py::arg("m"), py::arg("alpha") = std::map<int, double>{});
    mod.def("phi_grid", &phi_grid, py::arg("step") = kDefaultPhiStep);
    mod.def("sweep", &sweep, py::arg("m"), py::arg("law"), py::arg("marked") = 2, py::arg("step") = kDefaultPhiStep,
            py::arg("alpha") = std::map<int, double>{});
    mod.def(
        "robustness_epsilon",
        [](const std::vector<double> &phi, const std::vector<double> &p, double omega) {
            const auto r = robustness_epsilon(phi, p, omega);
            return py::dict(py::arg("phi_max") = r.phi_max, py::arg("p_max") = r.p_max,
                            py::arg("epsilon") = r.epsilon, py::arg("edge_bounded") = r.edge_bounded);
        },
        py::arg("phi"), py::arg("p"), py::arg("omega") = kDefaultOmega);
    mod.def("hill_eval", py::overload_cast<double, double, double, double>(&hill_eval), py::arg("phi"),
            py::arg("b"), py::arg("kappa"), py::arg("eta"));
    mod.def(
        "hill_fit",
        [](const std::vector<double> &phi, const std::vector<double> &p, double lo, double hi) {
            const auto f = hill_fit(phi, p, FitWindow{lo, hi});
            return py::dict(py::arg("b") = f.params.b, py::arg("kappa") = f.params.kappa,
                            py::arg("eta") = f.params.eta, py::arg("sigma") = f.sigma,
                            py::arg("samples") = f.samples);
        },
        py::arg("phi"), py::arg("p"), py::arg("lo") = 0.0, py::arg("hi") = kTwoPi);
    mod.def("epsilon_tilde", &epsilon_tilde, py::arg("kappa"), py::arg("eta"), py::arg("omega") = kDefaultOmega);
}
