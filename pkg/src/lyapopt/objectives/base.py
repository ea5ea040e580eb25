"""Differentiable objective contract with evaluation accounting.

Every optimizer in this package talks to an :class:`Objective`: a pure,
deterministic map ``theta -> (value, gradient)`` over a fixed-dimension
parameter vector.  The base class owns the evaluation counters used by the
linesearch-complexity bookkeeping, so subclasses only implement the raw
mathematics (``_value`` / ``_gradient``).
"""

from __future__ import annotations

import numpy as np


class ObjectiveOverflowError(RuntimeError):
    """An evaluation produced a non-finite value or gradient component.

    Carries the offending parameter vector so callers (typically a
    backtracking loop) can decide whether to shrink the step or abort.
    """

    def __init__(self, message: str, theta=None):
        super().__init__(message)
        self.theta = None if theta is None else np.array(theta, dtype=float, copy=True)


class InvalidObjectiveError(ValueError):
    """Raised when an objective factory receives inadmissible data."""


class Objective:
    """Base class for differentiable objectives.

    Subclasses implement ``_value(theta) -> float`` and
    ``_gradient(theta) -> ndarray`` (optionally ``_value_and_gradient`` when a
    shared forward pass is cheaper).  Both must be pure: the same ``theta``
    yields bit-identical results.

    ``n_value_evals`` / ``n_grad_evals`` increase by exactly one per
    evaluation, including evaluations that end in an overflow error.  The
    counters are plain ints: concurrent runs must each own a private handle
    (the experiment harness builds one objective per seed).
    """

    def __init__(self, dim: int):
        self.dim = int(dim)
        self.n_value_evals = 0
        self.n_grad_evals = 0

    # hooks ------------------------------------------------------------
    def _value(self, theta: np.ndarray) -> float:
        raise NotImplementedError

    def _gradient(self, theta: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _value_and_gradient(self, theta: np.ndarray):
        return self._value(theta), self._gradient(theta)

    # public entry points ------------------------------------------------
    def value(self, theta) -> float:
        theta = self._check_input(theta)
        self.n_value_evals += 1
        with np.errstate(all="ignore"):
            val = float(self._value(theta))
        if not np.isfinite(val):
            raise ObjectiveOverflowError("objective overflow in value evaluation", theta)
        return val

    def gradient(self, theta) -> np.ndarray:
        theta = self._check_input(theta)
        self.n_grad_evals += 1
        with np.errstate(all="ignore"):
            grad = np.asarray(self._gradient(theta), dtype=float)
        if not np.all(np.isfinite(grad)):
            raise ObjectiveOverflowError("objective overflow in gradient evaluation", theta)
        return grad

    def value_and_grad(self, theta):
        """Evaluate value and gradient together; bumps both counters once."""
        theta = self._check_input(theta)
        self.n_value_evals += 1
        self.n_grad_evals += 1
        with np.errstate(all="ignore"):
            val, grad = self._value_and_gradient(theta)
            val = float(val)
            grad = np.asarray(grad, dtype=float)
        if not np.isfinite(val) or not np.all(np.isfinite(grad)):
            raise ObjectiveOverflowError("objective overflow in joint evaluation", theta)
        return val, grad

    def _check_input(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if theta.shape != (self.dim,):
            raise ValueError(
                f"parameter vector has shape {theta.shape}, expected ({self.dim},)"
            )
        return theta


def value_and_grad(obj: Objective, theta):
    """Free-function alias for :meth:`Objective.value_and_grad`."""
    return obj.value_and_grad(theta)


def central_difference_gradient(func, theta, rel_step: float = 1e-6) -> np.ndarray:
    """Second-order finite-difference gradient of a scalar function.

    Uses a per-component step ``rel_step * (1 + |theta_i|)``.  ``func`` is any
    callable accepting a vector; evaluation counters are whatever the callable
    does, so pass ``obj.value`` when counting matters and ``obj._value`` when
    it does not.
    """
    theta = np.asarray(theta, dtype=float)
    grad = np.empty_like(theta)
    for i in range(theta.size):
        h = rel_step * (1.0 + abs(theta[i]))
        up = theta.copy()
        dn = theta.copy()
        up[i] += h
        dn[i] -= h
        grad[i] = (func(up) - func(dn)) / (2.0 * h)
    return grad
