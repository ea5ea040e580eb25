"""Discrete Gronwall-type decay verifiers.

Four lemma shapes are covered, keyed by how many back-steps the recurrence
spans and whether the forcing is linear or a power:

* ``one-step-exp``:    u_{n+1} - u_n <= -w_n u_n          =>  u_n <= u_0 exp(-sum w)
* ``one-step-power``:  u_{n+1} - u_n <= -w_n u_n^g, g>1   =>  algebraic decay
* ``two-step-exp``:    u_{n-2} - u_n >= w_{n-1} u_{n-1}   =>  u_n <= e^{sqrt(u_0 u_1)} exp(-sum w / 2)
* ``two-step-power``:  same with power g>1                =>  algebraic decay

``check_gronwall`` first verifies the selected lemma's hypotheses exactly
(raising :class:`HypothesisViolatedError` otherwise) and then reports whether
the conclusion bound holds at every index.  The verifiers are restricted to
non-negative sequences, which is the only regime they are used in (energies).
"""

from __future__ import annotations

import numpy as np

GRONWALL_KINDS = ("one-step-exp", "one-step-power", "two-step-exp", "two-step-power")


class HypothesisViolatedError(ValueError):
    """The input sequences do not satisfy the selected lemma's premises."""


def _validate_common(kind, u, w, gamma):
    if kind not in GRONWALL_KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {GRONWALL_KINDS}")
    u = np.asarray(u, dtype=float)
    w = np.asarray(w, dtype=float)
    if u.ndim != 1 or w.ndim != 1:
        raise ValueError("u and w must be one-dimensional")
    if len(w) != len(u) - 1:
        raise ValueError("need len(w) == len(u) - 1")
    if not np.all(np.isfinite(u)) or not np.all(np.isfinite(w)):
        raise HypothesisViolatedError("sequences must be finite")
    if np.any(w <= 0.0):
        raise HypothesisViolatedError("w must be positive")
    if np.any(u < 0.0):
        raise HypothesisViolatedError("verifier requires non-negative u")
    if kind.endswith("power"):
        if gamma is None or not gamma > 1.0:
            raise HypothesisViolatedError("power kinds require gamma > 1")
    else:
        if gamma not in (None, 1, 1.0):
            raise HypothesisViolatedError("exp kinds fix gamma = 1")
        gamma = 1.0
    return u, w, float(gamma)


def _one_step_bounds(u, w, gamma):
    cum = np.concatenate([[0.0], np.cumsum(w)])  # sum_{k<n} w_k
    if gamma == 1.0:
        return u[0] * np.exp(-cum)
    with np.errstate(divide="ignore"):
        base = u[0] ** (1.0 - gamma) + (gamma - 1.0) * cum
        return base ** (-1.0 / (gamma - 1.0))


def _two_step_bounds(u, w, gamma):
    # Bound valid from index 2; indices 0 and 1 are anchored at the data itself.
    cum = np.concatenate([[0.0], np.cumsum(w[1:])])  # sum_{k=1..n-1} w_k at position n-1
    bounds = np.array(u, copy=True)
    n = np.arange(2, len(u))
    if gamma == 1.0:
        anchor = np.exp(np.sqrt(u[0] * u[1]))
        bounds[2:] = anchor * np.exp(-0.5 * cum[n - 1])
    else:
        with np.errstate(divide="ignore"):
            denom = u[0] ** (1.0 - gamma) + u[1] ** (1.0 - gamma) + (gamma - 1.0) * cum[n - 1]
            bounds[2:] = (2.0 / denom) ** (1.0 / (gamma - 1.0))
    return bounds


def gronwall_bounds(kind: str, u, w, gamma: float | None = None) -> np.ndarray:
    """Conclusion bound of the selected lemma, evaluated at every index."""
    u, w, gamma = _validate_common(kind, u, w, gamma)
    _check_hypothesis(kind, u, w, gamma)
    if kind.startswith("one-step"):
        return _one_step_bounds(u, w, gamma)
    return _two_step_bounds(u, w, gamma)


def _check_hypothesis(kind, u, w, gamma):
    # Equality-case recurrences wobble by an ulp once evaluated in floats, so
    # the premises get the same relative allowance as the conclusion check.
    slack = 1e-12 * (1.0 + np.abs(u[:-2] if kind.startswith("two") else u[:-1]))
    with np.errstate(all="ignore"):
        if kind.startswith("one-step"):
            lhs = u[1:] - u[:-1]
            rhs = -w * u[:-1] ** gamma
            if np.any(lhs > rhs + slack):
                raise HypothesisViolatedError("recurrence u_{n+1} - u_n <= -w_n u_n^g fails")
        else:
            if np.any(u[1:] > u[:-1]):
                raise HypothesisViolatedError("two-step lemmas require decreasing u")
            if len(u) >= 3:
                lhs = u[:-2] - u[2:]
                rhs = w[1:] * u[1:-1] ** gamma
                if np.any(lhs < rhs - slack):
                    raise HypothesisViolatedError(
                        "recurrence u_{n-2} - u_n >= w_{n-1} u_{n-1}^g fails"
                    )


def check_gronwall(kind: str, u, w, gamma: float | None = None,
                   rel_tol: float = 1e-12) -> bool:
    """True iff the lemma's conclusion holds at every index of the inputs."""
    u_arr = np.asarray(u, dtype=float)
    bounds = gronwall_bounds(kind, u, w, gamma)
    return bool(np.all(u_arr <= bounds * (1.0 + rel_tol) + 1e-300))
