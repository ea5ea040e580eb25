"""Trial-step maps, energy acceptance tests, and the backtracking engine.

A linesearch iteration departs from a saved state, applies the optimizer's
trial map at a candidate step ``eta``, and accepts the first candidate whose
energy decrease meets the dissipation budget.  Rejected candidates are
discarded wholesale -- the trial maps are pure, so the departure state is
never touched.  The gradient at the departure point is evaluated once and
shared by every trial of the iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..objectives.base import Objective, ObjectiveOverflowError
from .config import BacktrackConfig


class LinesearchStallError(RuntimeError):
    """The trial step underflowed without acceptance.

    Under local gradient smoothness the backtracking provably terminates, so
    a stall signals a contract violation (e.g. a non-smooth or inconsistent
    objective) and is reported loudly instead of accepting a bogus step.
    """

    def __init__(self, eta: float, trials: int):
        super().__init__(
            f"linesearch stall: step shrank to {eta!r} after {trials} trials"
        )
        self.eta = eta
        self.trials = trials


# states ---------------------------------------------------------------


@dataclass
class MomentumState:
    """Parameters, velocity, last accepted step, and iteration index."""

    theta: np.ndarray
    v: np.ndarray
    eta: float
    n: int = 0


@dataclass
class RMSPropState:
    """Parameters, second-moment accumulator, last accepted step, iteration index."""

    theta: np.ndarray
    s: np.ndarray
    eta: float
    eps_a: float = 0.1
    n: int = 0


@dataclass
class GDState:
    """Parameters and last accepted step of the plain gradient linesearch."""

    theta: np.ndarray
    eta: float
    n: int = 0


# trial maps -----------------------------------------------------------


def _momentum_update(theta, v, grad, eta, beta):
    v_new = beta * v + eta * grad
    theta_new = theta - eta * v_new
    return theta_new, v_new


def momentum_trial(theta, v, grad, eta: float, beta_bar: float):
    """One velocity/parameter update with averaging weight ``1 - beta_bar*eta``.

    Pure map; no objective evaluation.  Requires ``0 < eta <= 1/beta_bar`` so
    the averaging weight stays non-negative.
    """
    if not 0.0 < eta <= 1.0 / beta_bar:
        raise ValueError(f"eta={eta} outside (0, {1.0 / beta_bar}]")
    return _momentum_update(theta, v, grad, eta, 1.0 - beta_bar * eta)


def _rmsprop_update(theta, s, grad, eta, beta, eps_a):
    s_new = beta * s + (1.0 - beta) * grad * grad
    theta_new = theta - eta * grad / (eps_a + np.sqrt(s_new))
    return theta_new, s_new


def rmsprop_trial(theta, s, grad, eta: float, beta_bar: float, eps_a: float):
    """One accumulator/parameter update, component-wise, with ``beta = 1 - beta_bar*eta``."""
    if not 0.0 < eta <= 1.0 / beta_bar:
        raise ValueError(f"eta={eta} outside (0, {1.0 / beta_bar}]")
    if np.any(s < 0.0):
        raise ValueError("second-moment accumulator must be non-negative")
    return _rmsprop_update(theta, s, grad, eta, 1.0 - beta_bar * eta, eps_a)


# energies and acceptance tests ------------------------------------------------


def lyapunov_momentum(obj: Objective, theta, v) -> float:
    """Mechanical energy ``R(theta) + |v|^2 / 2``; costs one value evaluation."""
    return obj.value(theta) + 0.5 * float(np.dot(v, v))


def momentum_dissipation(v_new, eta: float, lam: float, beta_bar: float) -> float:
    return -lam * beta_bar * eta * float(np.dot(v_new, v_new))


def momentum_accept(v_new_value: float, v_old_value: float, eta: float, v_new,
                    lam: float, beta_bar: float) -> bool:
    """Exact comparison ``V_new - V_old <= -lam*beta_bar*eta*|v_new|^2`` (no slack)."""
    return v_new_value - v_old_value <= momentum_dissipation(v_new, eta, lam, beta_bar)


def rmsprop_dissipation(grad, s_new, eta: float, lam: float, eps_a: float) -> float:
    return -lam * eta * float(np.sum(grad * grad / (eps_a + np.sqrt(s_new))))


def rmsprop_accept(r_new: float, r_old: float, eta: float, grad, s_new,
                   lam: float, eps_a: float) -> bool:
    """Exact comparison against the scaled squared-gradient dissipation."""
    return r_new - r_old <= rmsprop_dissipation(grad, s_new, eta, lam, eps_a)


# backtracking engine ----------------------------------------------------------


@dataclass
class BacktrackResult:
    state: object
    value: float
    eta0: float
    eta: float
    trials: int
    grad: np.ndarray = field(repr=False)
    dissipation: float = math.nan


def backtrack(state, obj: Objective, cfg, trial_fn, accept_fn,
              value0: float | None = None, grad: np.ndarray | None = None,
              value_fn=None) -> BacktrackResult:
    """Warm-started backtracking around pure trial maps.

    Starts at ``eta0 = min(f2 * state.eta, eta_max)`` and divides by ``f1``
    until ``accept_fn`` passes, re-trialing from the saved state each time.
    Each trial costs exactly one value evaluation; a non-finite trial energy
    counts as a rejection.  Contracts:

    * ``trial_fn(state, grad, eta) -> candidate state`` (pure),
    * ``value_fn(obj, candidate) -> float`` (one value evaluation),
    * ``accept_fn(candidate, value, value0, eta, grad) -> (bool, dissipation)``.

    ``value0`` defaults to ``value_fn(obj, state)``; pass the cached energy of
    the current point to avoid the extra evaluation.  Likewise ``grad`` may be
    the precomputed gradient at ``state.theta``.
    """
    if grad is None:
        grad = obj.gradient(state.theta)
    if value0 is None:
        value0 = value_fn(obj, state)
    eta0 = min(cfg.f2 * state.eta, cfg.eta_max)
    eta = eta0
    trials = 0
    while True:
        trials += 1
        candidate = trial_fn(state, grad, eta)
        try:
            value = value_fn(obj, candidate)
        except ObjectiveOverflowError:
            value = math.inf
        ok, dissipation = accept_fn(candidate, value, value0, eta, grad)
        if ok:
            candidate.eta = eta
            candidate.n = state.n + 1
            return BacktrackResult(candidate, value, eta0, eta, trials, grad, dissipation)
        eta = eta / cfg.f1
        if eta < cfg.stall_floor:
            raise LinesearchStallError(eta, trials)


# optimizer-specific engine plumbing --------------------------------------------


def _momentum_pieces(cfg: BacktrackConfig):
    def trial(state: MomentumState, grad, eta):
        theta_new, v_new = _momentum_update(
            state.theta, state.v, grad, eta, 1.0 - cfg.beta_bar * eta
        )
        return MomentumState(theta_new, v_new, eta, state.n)

    def value(obj, state: MomentumState):
        return lyapunov_momentum(obj, state.theta, state.v)

    def accept(state: MomentumState, value, value0, eta, grad):
        budget = momentum_dissipation(state.v, eta, cfg.lam, cfg.beta_bar)
        return value - value0 <= budget, budget

    return trial, value, accept


def _rmsprop_pieces(cfg: BacktrackConfig):
    def trial(state: RMSPropState, grad, eta):
        theta_new, s_new = _rmsprop_update(
            state.theta, state.s, grad, eta, 1.0 - cfg.beta_bar * eta, cfg.eps_a
        )
        return RMSPropState(theta_new, s_new, eta, state.eps_a, state.n)

    def value(obj, state: RMSPropState):
        return obj.value(state.theta)

    def accept(state: RMSPropState, value, value0, eta, grad):
        budget = rmsprop_dissipation(grad, state.s, eta, cfg.lam, cfg.eps_a)
        return value - value0 <= budget, budget

    return trial, value, accept


def adaptive_momentum_step(state: MomentumState, obj: Objective, cfg: BacktrackConfig,
                           value0: float | None = None,
                           grad: np.ndarray | None = None) -> BacktrackResult:
    """One accepted momentum step; the energy never increases across it."""
    trial, value, accept = _momentum_pieces(cfg)
    return backtrack(state, obj, cfg, trial, accept, value0, grad, value_fn=value)


def adaptive_rmsprop_step(state: RMSPropState, obj: Objective, cfg: BacktrackConfig,
                          value0: float | None = None,
                          grad: np.ndarray | None = None) -> BacktrackResult:
    """One accepted rmsprop step; the loss never increases across it."""
    trial, value, accept = _rmsprop_pieces(cfg)
    return backtrack(state, obj, cfg, trial, accept, value0, grad, value_fn=value)


def constant_momentum_step(state: MomentumState, obj: Objective, eta: float,
                           beta_bar: float, grad: np.ndarray | None = None) -> MomentumState:
    """One unconditional momentum update at a fixed step (one gradient evaluation)."""
    if grad is None:
        grad = obj.gradient(state.theta)
    theta_new, v_new = momentum_trial(state.theta, state.v, grad, eta, beta_bar)
    return MomentumState(theta_new, v_new, eta, state.n + 1)


def constant_rmsprop_step(state: RMSPropState, obj: Objective, eta: float,
                          beta: float, eps_a: float,
                          grad: np.ndarray | None = None) -> RMSPropState:
    """One unconditional rmsprop update at fixed ``eta`` and averaging weight ``beta``."""
    if not 0.0 < beta < 1.0:
        raise ValueError(f"beta={beta} outside (0, 1)")
    if not eta > 0.0:
        raise ValueError("eta must be positive")
    if grad is None:
        grad = obj.gradient(state.theta)
    theta_new, s_new = _rmsprop_update(state.theta, state.s, grad, eta, beta, eps_a)
    return RMSPropState(theta_new, s_new, eta, eps_a, state.n + 1)


@dataclass(frozen=True)
class _GDSearchParams:
    """Engine-facing view of the plain gradient linesearch constants."""

    lam: float
    f1: float
    f2: float
    eta_max: float
    stall_floor: float = 1e-30


def gd_armijo_step(theta, obj: Objective, lam: float, f1: float, f2: float,
                   eta_prev: float, eta_init: float = 1.0,
                   value0: float | None = None,
                   grad: np.ndarray | None = None) -> BacktrackResult:
    """Sufficient-decrease gradient step, warm-started like the adaptive pair.

    Backtracks from ``min(f2 * eta_prev, eta_init)`` until
    ``R(theta - eta*g) - R(theta) <= -lam * eta * |g|^2``.
    """
    if not 0.0 < lam < 1.0:
        raise ValueError(f"lam={lam} outside (0, 1)")
    params = _GDSearchParams(lam, f1, f2, eta_max=eta_init)
    state = GDState(np.asarray(theta, dtype=float), eta_prev)

    def trial(st: GDState, g, eta):
        return GDState(st.theta - eta * g, eta, st.n)

    def value(obj_, st: GDState):
        return obj_.value(st.theta)

    def accept(st: GDState, val, val0, eta, g):
        budget = -lam * eta * float(np.dot(g, g))
        return val - val0 <= budget, budget

    return backtrack(state, obj, params, trial, accept, value0, grad, value_fn=value)
