"""The optimization run loop."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from ..objectives.base import Objective, ObjectiveOverflowError
from .config import StopCriterion
from .engine import LinesearchStallError
from .trace import IterationTrace, TraceRow


@dataclass
class RunResult:
    converged: bool
    n_iter: int
    theta: np.ndarray = field(repr=False)
    final_value: float
    final_grad_norm: float
    wall_time_s: float
    value_evals: int
    grad_evals: int
    trace: IterationTrace = field(repr=False)
    error: str | None = None


def run(obj: Objective, theta0, optimizer, stop: StopCriterion,
        record_params: bool = False) -> RunResult:
    """Iterate ``optimizer`` until the gradient norm reaches the tolerance.

    The stopping test is applied at every visited point, including the
    initial one, so a run started at a critical point converges after zero
    steps.  A run that exhausts ``max_epochs`` steps is flagged
    non-convergent.  Evaluation failures (overflow, linesearch stall) end the
    run with ``error`` set instead of raising.
    """
    theta0 = np.asarray(theta0, dtype=float)
    t_start = time.perf_counter()
    v_before = obj.n_value_evals
    g_before = obj.n_grad_evals

    state = optimizer.init_state(theta0)
    trace = IterationTrace(record_params)
    trace.record_theta(state.theta)
    converged = False
    grad_norm = math.nan
    value = math.nan
    error = None
    cum_evals = 0
    try:
        value = optimizer.initial_value(obj, state)
        cum_evals = 1
        for n in range(stop.max_epochs + 1):
            grad = obj.gradient(state.theta)
            grad_norm = float(np.linalg.norm(grad))
            if grad_norm <= stop.eps_grad:
                converged = True
                break
            if n == stop.max_epochs:
                break
            theta_prev = state.theta
            state, new_value, info = optimizer.step(obj, state, value, grad)
            cum_evals += info.trials
            delta = float(np.linalg.norm(state.theta - theta_prev))
            trace.append(
                TraceRow(
                    n=n,
                    eta0=info.eta0,
                    eta=info.eta,
                    lyapunov=value,
                    grad_norm=grad_norm,
                    delta=delta,
                    trials=info.trials,
                    cum_evals=cum_evals,
                    dissipation=info.dissipation,
                )
            )
            trace.record_theta(state.theta)
            value = new_value
    except (ObjectiveOverflowError, LinesearchStallError) as exc:
        error = f"{type(exc).__name__}: {exc}"

    trace.final_lyapunov = value
    trace.final_grad_norm = grad_norm
    return RunResult(
        converged=converged,
        n_iter=len(trace),
        theta=np.array(state.theta, copy=True),
        final_value=value,
        final_grad_norm=grad_norm,
        wall_time_s=time.perf_counter() - t_start,
        value_evals=obj.n_value_evals - v_before,
        grad_evals=obj.n_grad_evals - g_before,
        trace=trace,
        error=error,
    )
