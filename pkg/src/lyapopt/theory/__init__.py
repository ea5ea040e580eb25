from .checks import (
    check_dissipation,
    check_displacement_inequality,
    check_energy_monotone,
    check_mean_evals,
    check_rmsprop_displacement,
    check_step_ceiling,
    check_step_floor,
    check_warm_start,
    monotone_energy_violations,
)
from .constants import (
    NoClosedFormError,
    mean_evals_bound,
    momentum_rate_denominator,
    momentum_step_floor,
    rmsprop_denominator_cap,
    rmsprop_denominator_cap_sequence,
    rmsprop_step_floor,
)
from .envelopes import (
    DegenerateFitError,
    LojasiewiczSpec,
    RateBound,
    RateFit,
    first_entry_index,
    momentum_convergence_envelope,
    power_exponent,
    rate_fit,
    rmsprop_convergence_envelope,
)
from .gronwall import (
    GRONWALL_KINDS,
    HypothesisViolatedError,
    check_gronwall,
    gronwall_bounds,
)

__all__ = [
    "DegenerateFitError",
    "GRONWALL_KINDS",
    "HypothesisViolatedError",
    "LojasiewiczSpec",
    "NoClosedFormError",
    "RateBound",
    "RateFit",
    "check_dissipation",
    "check_displacement_inequality",
    "check_energy_monotone",
    "check_gronwall",
    "check_mean_evals",
    "check_rmsprop_displacement",
    "check_step_ceiling",
    "check_step_floor",
    "check_warm_start",
    "first_entry_index",
    "gronwall_bounds",
    "mean_evals_bound",
    "momentum_convergence_envelope",
    "momentum_rate_denominator",
    "momentum_step_floor",
    "monotone_energy_violations",
    "power_exponent",
    "rate_fit",
    "rmsprop_convergence_envelope",
    "rmsprop_denominator_cap",
    "rmsprop_denominator_cap_sequence",
    "rmsprop_step_floor",
]
