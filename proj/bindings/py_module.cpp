#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdmp/analysis.hpp"
#include "pdmp/cli.hpp"
#include "pdmp/coupling.hpp"
#include "pdmp/fm.hpp"
#include "pdmp/models.hpp"

namespace py = pybind11;
using namespace pdmp;

PYBIND11_MODULE(_core, m) {
  m.doc() = "simulation and ergodicity analysis for randomly switched jump processes";

  py::class_<HybridState>(m, "HybridState")
      .def(py::init<>())
      .def(py::init([](Vec y, int regime) { return HybridState{std::move(y), regime}; }),
           py::arg("y"), py::arg("regime"))
      .def_readwrite("y", &HybridState::y)
      .def_readwrite("regime", &HybridState::regime)
      .def("__eq__", [](const HybridState& a, const HybridState& b) { return a == b; })
      .def("__repr__", [](const HybridState& x) {
        std::string s = "HybridState(y=[";
        for (std::size_t k = 0; k < x.y.size(); ++k)
          s += (k ? "," : "") + std::to_string(x.y[k]);
        return s + "], regime=" + std::to_string(x.regime) + ")";
      });

  py::class_<HybridMetric>(m, "HybridMetric")
      .def(py::init<double>(), py::arg("c"))
      .def_readonly("c", &HybridMetric::c);

  m.def("hybrid_distance", &hybrid_distance);
  m.def("truncated_distance", &truncated_distance);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("trajectory"))
      .def("uniform", &RngStream::uniform)
      .def("exponential", &RngStream::exponential);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def_readonly("lambda_", &ModelSpec::lambda)
      .def_readonly("pi", &ModelSpec::pi)
      .def_readonly("ystar", &ModelSpec::ystar)
      .def_property_readonly("c", [](const ModelSpec& ms) { return ms.metric.c; })
      .def("num_regimes", &ModelSpec::num_regimes);

  py::class_<ChainTrajectory>(m, "ChainTrajectory")
      .def_readonly("states", &ChainTrajectory::states)
      .def_readonly("jump_times", &ChainTrajectory::jump_times);

  py::class_<CoupledState>(m, "CoupledState")
      .def_readonly("x1", &CoupledState::x1)
      .def_readonly("x2", &CoupledState::x2)
      .def_readonly("tau", &CoupledState::tau);

  py::class_<CoupledTrace>(m, "CoupledTrace")
      .def_readonly("states", &CoupledTrace::states)
      .def_readonly("kappa", &CoupledTrace::kappa)
      .def_property_readonly("branches", [](const CoupledTrace& t) {
        std::vector<std::string> out;
        for (BranchFlag f : t.branch_flags) out.push_back(f == BranchFlag::Q ? "Q" : "R");
        return out;
      });

  py::class_<ConstantsReport>(m, "ConstantsReport")
      .def_readonly("a", &ConstantsReport::a)
      .def_readonly("b", &ConstantsReport::b)
      .def_readonly("R", &ConstantsReport::R)
      .def_readonly("M_L", &ConstantsReport::M_L)
      .def_readonly("M_phi", &ConstantsReport::M_phi)
      .def_readonly("K_phi", &ConstantsReport::K_phi)
      .def_readonly("t0", &ConstantsReport::t0)
      .def_readonly("c_min", &ConstantsReport::c_min)
      .def_readonly("hypotheses_ok", &ConstantsReport::hypotheses_ok);

  py::class_<RateEstimate>(m, "RateEstimate")
      .def_readonly("rate", &RateEstimate::rate)
      .def_readonly("intercept", &RateEstimate::intercept)
      .def_readonly("r_squared", &RateEstimate::r_squared)
      .def_readonly("n_points", &RateEstimate::n_points)
      .def_readonly("grid", &RateEstimate::grid)
      .def_readonly("mean", &RateEstimate::mean)
      .def_readonly("se", &RateEstimate::se);

  py::class_<CorrespondenceReport>(m, "CorrespondenceReport")
      .def_readonly("fm_phi_g_vs_psi", &CorrespondenceReport::fm_phi_g_vs_psi)
      .def_readonly("fm_psi_w_vs_phi", &CorrespondenceReport::fm_psi_w_vs_phi)
      .def_readonly("self_distance", &CorrespondenceReport::self_distance);

  py::class_<PresetBundle>(m, "PresetBundle")
      .def_readonly("model", &PresetBundle::model)
      .def_readonly("constants", &PresetBundle::constants);

  m.def(
      "build_preset",
      [](const std::string& name) { return build_preset(preset_from_name(name)); },
      py::arg("name"));

  m.def(
      "simulate_chain",
      [](const PresetBundle& b, const HybridState& x0, std::size_t n, std::uint64_t seed,
         std::uint64_t trajectory) {
        RngStream rng(seed, trajectory, StreamPurpose::Chain);
        return simulate_chain(b.model, x0, n, rng);
      },
      py::arg("bundle"), py::arg("x0"), py::arg("n"), py::arg("seed"),
      py::arg("trajectory") = 0);

  m.def(
      "process_at",
      [](const PresetBundle& b, const ChainTrajectory& traj, double t) {
        return process_at(b.model, traj, t);
      },
      py::arg("bundle"), py::arg("trajectory"), py::arg("t"));

  m.def(
      "simulate_coupled",
      [](const PresetBundle& b, const HybridState& x1, const HybridState& x2,
         std::size_t n, std::uint64_t seed, std::uint64_t trajectory,
         bool identify_regimes) {
        RngStream rng(seed, trajectory, StreamPurpose::Coupling);
        return simulate_coupled(b.model, b.jump_cert, x1, x2, n, rng, identify_regimes);
      },
      py::arg("bundle"), py::arg("x1"), py::arg("x2"), py::arg("n"), py::arg("seed"),
      py::arg("trajectory") = 0, py::arg("identify_regimes") = false);

  m.def(
      "fm_distance",
      [](const std::vector<HybridState>& mu, const std::vector<HybridState>& nu,
         double c) {
        return fm_distance(EmpiricalMeasure::uniform(mu), EmpiricalMeasure::uniform(nu),
                           HybridMetric(c));
      },
      py::arg("mu"), py::arg("nu"), py::arg("c") = 1.0);

  m.def(
      "compute_constants",
      [](const PresetBundle& b) {
        return compute_constants(b.model, b.flow_cert, b.jump_cert);
      },
      py::arg("bundle"));

  m.def(
      "estimate_chain_contraction",
      [](const PresetBundle& b, const HybridState& x1, const HybridState& x2,
         std::size_t n_steps, std::size_t n_samples, std::uint64_t seed) {
        return estimate_chain_contraction(b.model, b.jump_cert, {{x1, x2}}, n_steps,
                                          n_samples, seed);
      },
      py::arg("bundle"), py::arg("x1"), py::arg("x2"), py::arg("n_steps"),
      py::arg("n_samples"), py::arg("seed"));

  m.def(
      "invariant_correspondence_test",
      [](const PresetBundle& b, std::size_t burn_in, std::size_t n_stat, double T,
         std::size_t n_samples, std::uint64_t seed, std::size_t n_bootstrap) {
        return invariant_correspondence_test(b.model, burn_in, n_stat, T, n_samples, seed,
                                             n_bootstrap);
      },
      py::arg("bundle"), py::arg("burn_in"), py::arg("n_stat"), py::arg("T"),
      py::arg("n_samples"), py::arg("seed"), py::arg("n_bootstrap") = 50);

  m.def("cli_main", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("pdmp-ergo");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
  });
}
