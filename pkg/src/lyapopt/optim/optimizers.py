"""The five optimizers behind a common stepping protocol.

Each optimizer provides ``init_state``, ``initial_value`` (the single energy
evaluation that opens a run), and ``step``, which returns the new state, the
energy at the new state, and a :class:`StepInfo` for the trace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..objectives.base import Objective, ObjectiveOverflowError
from .config import BacktrackConfig
from .engine import (
    GDState,
    MomentumState,
    RMSPropState,
    adaptive_momentum_step,
    adaptive_rmsprop_step,
    constant_momentum_step,
    constant_rmsprop_step,
    gd_armijo_step,
    lyapunov_momentum,
)


@dataclass(frozen=True)
class StepInfo:
    eta0: float
    eta: float
    trials: int
    dissipation: float = math.nan


class AdaptiveMomentum:
    """Momentum with the energy-dissipation linesearch."""

    name = "momentum-adaptive"

    def __init__(self, cfg: BacktrackConfig):
        self.cfg = cfg.validate_momentum()

    def init_state(self, theta0: np.ndarray) -> MomentumState:
        return MomentumState(theta0.copy(), np.zeros_like(theta0), self.cfg.eta_max)

    def initial_value(self, obj: Objective, state: MomentumState) -> float:
        return lyapunov_momentum(obj, state.theta, state.v)

    def step(self, obj, state, value, grad):
        res = adaptive_momentum_step(state, obj, self.cfg, value0=value, grad=grad)
        return res.state, res.value, StepInfo(res.eta0, res.eta, res.trials, res.dissipation)


class AdaptiveRMSProp:
    """RMSProp with the loss-dissipation linesearch."""

    name = "rmsprop-adaptive"

    def __init__(self, cfg: BacktrackConfig):
        self.cfg = cfg.validate_rmsprop()

    def init_state(self, theta0: np.ndarray) -> RMSPropState:
        return RMSPropState(
            theta0.copy(), np.zeros_like(theta0), self.cfg.eta_max, self.cfg.eps_a
        )

    def initial_value(self, obj: Objective, state: RMSPropState) -> float:
        return obj.value(state.theta)

    def step(self, obj, state, value, grad):
        res = adaptive_rmsprop_step(state, obj, self.cfg, value0=value, grad=grad)
        return res.state, res.value, StepInfo(res.eta0, res.eta, res.trials, res.dissipation)


class ConstantMomentum:
    """Fixed-step momentum with averaging weight ``1 - beta_bar * eta``."""

    name = "momentum"

    def __init__(self, eta: float, beta_bar: float):
        if not 0.0 < eta <= 1.0 / beta_bar:
            raise ValueError(f"eta={eta} outside (0, {1.0 / beta_bar}]")
        self.eta = float(eta)
        self.beta_bar = float(beta_bar)

    def init_state(self, theta0: np.ndarray) -> MomentumState:
        return MomentumState(theta0.copy(), np.zeros_like(theta0), self.eta)

    def initial_value(self, obj: Objective, state: MomentumState) -> float:
        return lyapunov_momentum(obj, state.theta, state.v)

    def step(self, obj, state, value, grad):
        new = constant_momentum_step(state, obj, self.eta, self.beta_bar, grad=grad)
        try:
            new_value = lyapunov_momentum(obj, new.theta, new.v)
        except ObjectiveOverflowError:
            new_value = math.inf
        return new, new_value, StepInfo(self.eta, self.eta, 1)


class ConstantRMSProp:
    """Fixed-step rmsprop with a fixed averaging weight ``beta``."""

    name = "rmsprop"

    def __init__(self, eta: float, beta: float, eps_a: float):
        if not eta > 0.0:
            raise ValueError("eta must be positive")
        if not 0.0 < beta < 1.0:
            raise ValueError(f"beta={beta} outside (0, 1)")
        if not eps_a > 0.0:
            raise ValueError("eps_a must be positive")
        self.eta = float(eta)
        self.beta = float(beta)
        self.eps_a = float(eps_a)

    def init_state(self, theta0: np.ndarray) -> RMSPropState:
        return RMSPropState(theta0.copy(), np.zeros_like(theta0), self.eta, self.eps_a)

    def initial_value(self, obj: Objective, state: RMSPropState) -> float:
        return obj.value(state.theta)

    def step(self, obj, state, value, grad):
        new = constant_rmsprop_step(state, obj, self.eta, self.beta, self.eps_a, grad=grad)
        try:
            new_value = obj.value(new.theta)
        except ObjectiveOverflowError:
            new_value = math.inf
        return new, new_value, StepInfo(self.eta, self.eta, 1)


class GDArmijo:
    """Plain gradient descent with the sufficient-decrease linesearch."""

    name = "gd-armijo"

    def __init__(self, lam: float, f1: float = 2.0, f2: float = 1e4, eta_init: float = 1.0):
        if not 0.0 < lam < 1.0:
            raise ValueError(f"lam={lam} outside (0, 1)")
        self.lam = float(lam)
        self.f1 = float(f1)
        self.f2 = float(f2)
        self.eta_init = float(eta_init)

    def init_state(self, theta0: np.ndarray) -> GDState:
        return GDState(theta0.copy(), self.eta_init)

    def initial_value(self, obj: Objective, state: GDState) -> float:
        return obj.value(state.theta)

    def step(self, obj, state, value, grad):
        res = gd_armijo_step(
            state.theta, obj, self.lam, self.f1, self.f2,
            eta_prev=state.eta, eta_init=self.eta_init, value0=value, grad=grad,
        )
        new = res.state
        new.n = state.n + 1
        return new, res.value, StepInfo(res.eta0, res.eta, res.trials, res.dissipation)
