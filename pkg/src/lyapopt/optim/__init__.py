from .config import BacktrackConfig, ConfigError, StopCriterion
from .engine import (
    BacktrackResult,
    GDState,
    LinesearchStallError,
    MomentumState,
    RMSPropState,
    adaptive_momentum_step,
    adaptive_rmsprop_step,
    backtrack,
    constant_momentum_step,
    constant_rmsprop_step,
    gd_armijo_step,
    lyapunov_momentum,
    momentum_accept,
    momentum_dissipation,
    momentum_trial,
    rmsprop_accept,
    rmsprop_dissipation,
    rmsprop_trial,
)
from .optimizers import (
    AdaptiveMomentum,
    AdaptiveRMSProp,
    ConstantMomentum,
    ConstantRMSProp,
    GDArmijo,
    StepInfo,
)
from .runner import RunResult, run
from .trace import IterationTrace, TraceRow

__all__ = [
    "AdaptiveMomentum",
    "AdaptiveRMSProp",
    "BacktrackConfig",
    "BacktrackResult",
    "ConfigError",
    "ConstantMomentum",
    "ConstantRMSProp",
    "GDArmijo",
    "GDState",
    "IterationTrace",
    "LinesearchStallError",
    "MomentumState",
    "RMSPropState",
    "RunResult",
    "StepInfo",
    "StopCriterion",
    "TraceRow",
    "adaptive_momentum_step",
    "adaptive_rmsprop_step",
    "backtrack",
    "constant_momentum_step",
    "constant_rmsprop_step",
    "gd_armijo_step",
    "lyapunov_momentum",
    "momentum_accept",
    "momentum_dissipation",
    "momentum_trial",
    "rmsprop_accept",
    "rmsprop_dissipation",
    "rmsprop_trial",
    "run",
]
