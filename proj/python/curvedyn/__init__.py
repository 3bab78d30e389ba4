"""Covariant elastodynamics of residually-stressed annuli on constant-curvature surfaces."""

from ._core import (
    AzimuthalMetric,
    BlowUpError,
    ConfigError,
    ConvergenceError,
    CurvatureProfile,
    EnergyReport,
    EquilibriumResult,
    Jet1,
    MaterialLaw,
    ParticleState,
    Perturbation,
    ProblemConfig,
    RadialEnergyDerivatives,
    RadialGrid,
    RadialState,
    SeriesSample,
    SimulationResult,
    StressDensity,
    Trajectory,
    WarpKind,
    apply_boundary,
    boundary_distance,
    covariant_rhs,
    energy_density,
    energy_density_at_jet,
    fd_fiber_derivative,
    ghost_derivative,
    gradient_check_max_error,
    initial_condition,
    integrate_particle,
    metric_matrix,
    parse_config,
    pullback_metric,
    radial_energy_derivatives,
    radial_rhs,
    serialize_config,
    simulate,
    solve_equilibrium,
    speed_squared,
    stable_dt,
    step_dynamics,
    strain,
    stress_density,
    total_energy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
