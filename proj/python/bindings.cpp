#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvedyn/config.hpp"
#include "curvedyn/csvio.hpp"
#include "curvedyn/elasticity.hpp"
#include "curvedyn/geometry.hpp"
#include "curvedyn/pointdyn.hpp"
#include "curvedyn/runner.hpp"
#include "curvedyn/solver.hpp"

namespace py = pybind11;
using namespace curvedyn;

namespace {

using PyMat = std::array<std::array<double, 2>, 2>;

Mat2 to_mat(const PyMat& a) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = a[i][j];
    return m;
}

PyMat from_mat(const Mat2& m) {
    return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Covariant elastodynamics of residually-stressed annuli on "
              "constant-curvature surfaces";

    py::enum_<WarpKind>(m, "WarpKind")
        .value("Spherical", WarpKind::Spherical)
        .value("Hyperbolic", WarpKind::Hyperbolic)
        .value("Flat", WarpKind::Flat);

    py::class_<CurvatureProfile>(m, "CurvatureProfile")
        .def(py::init<WarpKind, double>(), py::arg("kind"), py::arg("curvature"))
        .def_static("spherical", &CurvatureProfile::spherical, py::arg("curvature"))
        .def_static("hyperbolic", &CurvatureProfile::hyperbolic, py::arg("curvature"))
        .def_static("flat", &CurvatureProfile::flat)
        .def_readwrite("kind", &CurvatureProfile::kind)
        .def_readwrite("curvature", &CurvatureProfile::curvature)
        .def("max_radius", &CurvatureProfile::max_radius)
        .def("contains", &CurvatureProfile::contains, py::arg("R"))
        .def("warp", &CurvatureProfile::warp, py::arg("R"))
        .def("warp_derivative", &CurvatureProfile::warp_derivative, py::arg("R"))
        .def("warp_second_derivative", &CurvatureProfile::warp_second_derivative,
             py::arg("R"));

    py::class_<AzimuthalMetric>(m, "AzimuthalMetric")
        .def(py::init<CurvatureProfile>(), py::arg("profile"))
        .def_property_readonly("profile", &AzimuthalMetric::profile)
        .def("warp", &AzimuthalMetric::warp, py::arg("r"))
        .def("g_thetatheta", &AzimuthalMetric::g_thetatheta, py::arg("r"))
        .def("determinant", &AzimuthalMetric::determinant, py::arg("r"))
        .def("christoffel", [](const AzimuthalMetric& g, double r) {
            const auto c = g.christoffel(r);
            return py::make_tuple(c.r_thetatheta, c.theta_rtheta);
        }, py::arg("r"));

    py::class_<ParticleState>(m, "ParticleState")
        .def(py::init([](double r, double theta, double vr, double vtheta,
                         double mass) {
                 return ParticleState{r, theta, vr, vtheta, mass};
             }),
             py::arg("r"), py::arg("theta"), py::arg("vr"), py::arg("vtheta"),
             py::arg("mass") = 1.0)
        .def_readwrite("r", &ParticleState::r)
        .def_readwrite("theta", &ParticleState::theta)
        .def_readwrite("vr", &ParticleState::vr)
        .def_readwrite("vtheta", &ParticleState::vtheta)
        .def_readwrite("mass", &ParticleState::mass);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("time", &Trajectory::time)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("completed", &Trajectory::completed);

    m.def("speed_squared", &speed_squared, py::arg("state"), py::arg("metric"));
    m.def("covariant_rhs",
          [](const ParticleState& s, const AzimuthalMetric& g, py::object force) {
              ForceField f;
              if (!force.is_none())
                  f = [force](double r, double theta) {
                      return force(r, theta).cast<std::array<double, 2>>();
                  };
              const auto a = covariant_rhs(s, g, f);
              return py::make_tuple(a[0], a[1]);
          },
          py::arg("state"), py::arg("metric"), py::arg("force") = py::none());
    m.def("integrate_particle",
          [](const ParticleState& s, const AzimuthalMetric& g, py::object force,
             double dt, int steps) {
              ForceField f;
              if (!force.is_none())
                  f = [force](double r, double theta) {
                      return force(r, theta).cast<std::array<double, 2>>();
                  };
              return integrate_particle(s, g, f, dt, steps);
          },
          py::arg("initial"), py::arg("metric"), py::arg("force") = py::none(),
          py::arg("dt") = 1e-3, py::arg("steps") = 1000);

    py::class_<Jet1>(m, "Jet1")
        .def(py::init([](std::array<double, 2> body, std::array<double, 2> space,
                         const PyMat& deriv) {
                 return Jet1{body, space, to_mat(deriv)};
             }),
             py::arg("body_point"), py::arg("space_point"), py::arg("deriv"))
        .def_readwrite("body_point", &Jet1::body_point)
        .def_readwrite("space_point", &Jet1::space_point)
        .def_property("deriv",
                      [](const Jet1& j) { return from_mat(j.deriv); },
                      [](Jet1& j, const PyMat& d) { j.deriv = to_mat(d); });

    py::class_<MaterialLaw>(m, "MaterialLaw")
        .def(py::init([](double lam, double mu) { return MaterialLaw{lam, mu}; }),
             py::arg("lam") = 0.0, py::arg("mu") = 1.0)
        .def_readwrite("lam", &MaterialLaw::lambda)
        .def_readwrite("mu", &MaterialLaw::mu);

    py::class_<StressDensity>(m, "StressDensity")
        .def_readonly("R_comp", &StressDensity::R_comp)
        .def_property_readonly("S_comp", [](const StressDensity& s) {
            return from_mat(s.S_comp);
        });

    py::class_<RadialEnergyDerivatives>(m, "RadialEnergyDerivatives")
        .def_readonly("dW_dfprime", &RadialEnergyDerivatives::dW_dfprime)
        .def_readonly("dW_dthetaTheta", &RadialEnergyDerivatives::dW_dthetaTheta)
        .def_readonly("dW_df", &RadialEnergyDerivatives::dW_df);

    m.def("metric_matrix",
          [](const CurvatureProfile& p, double R) { return from_mat(metric_matrix(p, R)); },
          py::arg("profile"), py::arg("R"));
    m.def("pullback_metric",
          [](const Jet1& jet, const AzimuthalMetric& space) {
              return from_mat(pullback_metric(jet, space));
          },
          py::arg("jet"), py::arg("space"));
    m.def("strain",
          [](const PyMat& pullback, const PyMat& G) {
              return from_mat(strain(to_mat(pullback), to_mat(G)));
          },
          py::arg("pullback"), py::arg("G"));
    m.def("energy_density",
          [](const PyMat& eps, const PyMat& G, const MaterialLaw& mat) {
              return energy_density(to_mat(eps), to_mat(G), mat);
          },
          py::arg("strain"), py::arg("G"), py::arg("material"));
    m.def("energy_density_at_jet",
          [](const Jet1& jet, const AzimuthalMetric& body,
             const AzimuthalMetric& space, const MaterialLaw& mat) {
              return energy_density(jet, body, space, mat);
          },
          py::arg("jet"), py::arg("body"), py::arg("space"), py::arg("material"));
    m.def("stress_density", &stress_density, py::arg("jet"), py::arg("body"),
          py::arg("space"), py::arg("material"));
    m.def("fd_fiber_derivative", &fd_fiber_derivative, py::arg("jet"),
          py::arg("body"), py::arg("space"), py::arg("material"),
          py::arg("h") = 1e-5);
    m.def("radial_energy_derivatives", &radial_energy_derivatives, py::arg("f"),
          py::arg("fprime"), py::arg("R"), py::arg("body"), py::arg("space"));

    py::class_<RadialGrid>(m, "RadialGrid")
        .def(py::init([](double r_min, double r_max, int n) {
                 return RadialGrid{r_min, r_max, n};
             }),
             py::arg("r_min") = 0.2, py::arg("r_max") = 1.0, py::arg("n") = 401)
        .def_readwrite("r_min", &RadialGrid::r_min)
        .def_readwrite("r_max", &RadialGrid::r_max)
        .def_readwrite("n", &RadialGrid::n)
        .def("spacing", &RadialGrid::spacing)
        .def("node", &RadialGrid::node, py::arg("j"))
        .def("nodes", &RadialGrid::nodes);

    py::class_<RadialState>(m, "RadialState")
        .def(py::init<>())
        .def(py::init([](std::vector<double> f, std::vector<double> f_t, double t) {
                 return RadialState{std::move(f), std::move(f_t), t};
             }),
             py::arg("f"), py::arg("f_t"), py::arg("time") = 0.0)
        .def_readwrite("f", &RadialState::f)
        .def_readwrite("f_t", &RadialState::f_t)
        .def_readwrite("time", &RadialState::time);

    py::class_<EnergyReport>(m, "EnergyReport")
        .def_readonly("kinetic", &EnergyReport::kinetic)
        .def_readonly("potential", &EnergyReport::potential)
        .def_readonly("total", &EnergyReport::total);

    py::class_<Perturbation>(m, "Perturbation")
        .def(py::init([](double amplitude, int mode) {
                 return Perturbation{amplitude, mode};
             }),
             py::arg("amplitude") = 0.01, py::arg("mode") = 1)
        .def_readwrite("amplitude", &Perturbation::amplitude)
        .def_readwrite("mode", &Perturbation::mode);

    py::class_<ProblemConfig>(m, "ProblemConfig")
        .def(py::init<>())
        .def_readwrite("body", &ProblemConfig::body)
        .def_readwrite("space", &ProblemConfig::space)
        .def_readwrite("grid", &ProblemConfig::grid)
        .def_readwrite("dt_auto", &ProblemConfig::dt_auto)
        .def_readwrite("dt", &ProblemConfig::dt)
        .def_readwrite("t_end", &ProblemConfig::t_end)
        .def_readwrite("mass_growth_rate", &ProblemConfig::mass_growth_rate)
        .def_readwrite("perturbation", &ProblemConfig::perturbation)
        .def_readwrite("output_interval", &ProblemConfig::output_interval)
        .def("validate", &ProblemConfig::validate);

    py::class_<EquilibriumResult>(m, "EquilibriumResult")
        .def_readonly("state", &EquilibriumResult::state)
        .def_readonly("residual", &EquilibriumResult::residual)
        .def_readonly("iterations", &EquilibriumResult::iterations)
        .def_readonly("residual_history", &EquilibriumResult::residual_history);

    py::class_<SeriesSample>(m, "SeriesSample")
        .def_readonly("t", &SeriesSample::t)
        .def_readonly("distance", &SeriesSample::distance)
        .def_readonly("energy", &SeriesSample::energy);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("series", &SimulationResult::series)
        .def_readonly("snapshots", &SimulationResult::snapshots);

    m.def("apply_boundary",
          [](const std::vector<double>& f, const RadialGrid& grid) {
              const auto [lo, hi] = apply_boundary(f, grid);
              return py::make_tuple(lo, hi);
          },
          py::arg("f"), py::arg("grid"));
    m.def("ghost_derivative",
          [](const std::vector<double>& f, const RadialGrid& grid) {
              return ghost_derivative(f, grid);
          },
          py::arg("f"), py::arg("grid"));
    m.def("radial_rhs", &radial_rhs, py::arg("state"), py::arg("config"));
    m.def("stable_dt", &stable_dt, py::arg("state"), py::arg("config"));
    m.def("step_dynamics", &step_dynamics, py::arg("state"), py::arg("config"),
          py::arg("dt"));
    m.def("total_energy", &total_energy, py::arg("state"), py::arg("config"));
    m.def("boundary_distance", &boundary_distance, py::arg("state"));
    m.def("solve_equilibrium", &solve_equilibrium, py::arg("config"),
          py::arg("tolerance") = 1e-10);
    m.def("initial_condition", &initial_condition, py::arg("config"));
    m.def("simulate", &simulate, py::arg("config"));

    m.def("parse_config", [](const std::string& text) { return parse_config(text); },
          py::arg("text"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
    m.def("gradient_check_max_error", &cli::gradient_check_max_error,
          py::arg("count") = 100, py::arg("h") = 1e-5, py::arg("seed") = 20240817);

    py::register_exception<ConvergenceError>(m, "ConvergenceError");
    py::register_exception<BlowUpError>(m, "BlowUpError");
    py::register_exception<ConfigError>(m, "ConfigError");
}
