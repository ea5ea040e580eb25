"""Trace-level verifiers for the dissipation, displacement, and complexity claims."""

from __future__ import annotations

import math

import numpy as np

from ..optim.config import BacktrackConfig
from ..optim.trace import IterationTrace
from .constants import mean_evals_bound
from .envelopes import LojasiewiczSpec


def check_dissipation(trace: IterationTrace, tol: float = 1e-12) -> bool:
    """Every accepted step sheds at least its recorded dissipation budget."""
    energy = trace.lyapunov_closed()
    budget = trace.dissipation
    drop = energy[1:] - energy[:-1]
    return bool(np.all(drop <= budget + tol * (1.0 + np.abs(energy[:-1]))))


def check_energy_monotone(trace: IterationTrace, tol: float = 0.0) -> bool:
    """The monitored energy column never increases along the run."""
    energy = trace.lyapunov_closed()
    return bool(np.all(energy[1:] - energy[:-1] <= tol * (1.0 + np.abs(energy[:-1]))))


def check_step_ceiling(trace: IterationTrace, eta_max: float) -> bool:
    """Accepted steps never exceed the cap (exact comparison)."""
    return bool(np.all(trace.eta <= eta_max))


def check_step_floor(trace: IterationTrace, eta_floor: float) -> bool:
    """Accepted steps never fall below the guaranteed floor (exact comparison)."""
    return bool(np.all(trace.eta >= eta_floor))


def check_warm_start(trace: IterationTrace, cfg, eta_init: float) -> bool:
    """Each linesearch opened at exactly ``min(f2 * previous_eta, eta_max)``."""
    prev = eta_init
    for row in trace.rows:
        if row.eta0 != min(cfg.f2 * prev, cfg.eta_max):
            return False
        prev = row.eta
    return True


def check_rmsprop_displacement(trace: IterationTrace, dim: int, beta_bar: float,
                               tol: float = 1e-12) -> bool:
    """Each rmsprop step moved at most ``sqrt(eta_n * dim / beta_bar)``.

    For a fixed-weight run pass the effective friction ``(1 - beta) / eta``.
    """
    bound = np.sqrt(trace.eta * dim / beta_bar)
    return bool(np.all(trace.delta <= bound + tol))


def check_displacement_inequality(trace: IterationTrace, loj: LojasiewiczSpec,
                                  cfg: BacktrackConfig, v_star: float = 0.0,
                                  start: int = 1, end: int | None = None,
                                  rel_tol: float = 1e-9) -> bool:
    """Two-step displacement/energy inequality of the momentum analysis.

    With ``d_m`` the displacement of step ``m`` and shifted energies
    ``E_m``, checks for each index n in ``[start, end)``::

        d_n <= (d_{n-1} - d_n)/2 + 2 A_n / (lam a c bb eta_{n-1} eta_n) * (E_n^a - E_{n+1}^a)

    where ``A_n = max(eta_{n-1}, eta_n (eta_n + beta_n))``.  The caller is
    responsible for choosing a window whose iterates lie inside the
    neighborhood where the gradient-domination constants are valid.
    """
    if start < 1:
        raise ValueError("start must be at least 1 (the inequality spans two steps)")
    energy = trace.lyapunov_closed() - v_star
    etas = trace.eta
    deltas = trace.delta
    end = len(trace) if end is None else end
    alpha, c = loj.alpha, loj.c
    for n in range(start, end):
        eta_n, eta_prev = etas[n], etas[n - 1]
        beta_n = 1.0 - cfg.beta_bar * eta_n
        a_n = max(eta_prev, eta_n * (eta_n + beta_n))
        gain = (2.0 * a_n / (cfg.lam * alpha * c * cfg.beta_bar * eta_prev * eta_n)) * (
            max(energy[n], 0.0) ** alpha - max(energy[n + 1], 0.0) ** alpha
        )
        rhs = 0.5 * (deltas[n - 1] - deltas[n]) + gain
        if deltas[n] > rhs + rel_tol * (1.0 + abs(rhs)):
            return False
    return True


def check_mean_evals(trace: IterationTrace, f1: float, f2: float, beta_bar: float,
                     eta_floor: float | None = None, start: int = 1) -> bool:
    """Measured evaluations per linesearch stay under the predicted bound.

    ``eta_floor`` defaults to the smallest accepted step of the trace, which
    is always a valid lower bound on the realized steps.
    """
    if len(trace) < start + 1:
        return True
    if eta_floor is None:
        eta_floor = float(np.min(trace.eta))
    cum = trace.cum_evals
    for n in range(start, len(trace)):
        if cum[n] / n > mean_evals_bound(f1, f2, beta_bar, eta_floor, n):
            return False
    return True


def monotone_energy_violations(trace: IterationTrace) -> int:
    """Count of steps on which the monitored energy increased."""
    energy = trace.lyapunov_closed()
    return int(np.sum(energy[1:] > energy[:-1]))
