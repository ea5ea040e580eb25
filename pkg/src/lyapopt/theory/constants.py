"""Closed-form constants: guaranteed step sizes, rate denominators, evaluation bounds.

Everything here is a pure formula in the smoothness constant ``L``, the
gradient-domination constants, and the linesearch hyperparameters; the
functions exist so that runs can be checked against the predictions rather
than the other way around.
"""

from __future__ import annotations

import math

import numpy as np


class NoClosedFormError(ValueError):
    """No closed-form guaranteed step is implemented for this friction value."""


def momentum_step_floor(L: float, lam: float, beta_bar: float) -> float:
    """Largest step guaranteed to pass the momentum energy test on an L-smooth region.

    Closed forms exist for friction 1 and 2; other frictions admit a positive
    floor but no tractable formula, so they are refused.
    """
    if L <= 0.0:
        raise ValueError("L must be positive")
    if beta_bar == 1.0:
        if not 0.0 < lam <= 0.5:
            raise ValueError(f"friction 1 requires 0 < lam <= 0.5, got {lam}")
        return min(1.0, (1.0 - 2.0 * lam) / L)
    if beta_bar == 2.0:
        if not 0.0 < lam < 0.25:
            raise ValueError(f"friction 2 requires 0 < lam < 0.25, got {lam}")
        lo = 2.0 * (1.0 - 2.0 * lam) - 2.0 * math.sqrt(1.0 - 4.0 * lam)
        hi = 2.0 * (1.0 - 2.0 * lam) + 2.0 * math.sqrt(1.0 - 4.0 * lam)
        if lo < L < hi:
            eta_root = 0.5
        else:
            eta_root = (
                0.5
                - 2.0 * lam / L
                - math.sqrt(0.25 + (2.0 * lam - 1.0) / L + 4.0 * lam * lam / (L * L))
            )
        return min(eta_root, 0.5)
    raise NoClosedFormError(
        f"no closed form for friction {beta_bar}; only 1 and 2 are supported"
    )


def rmsprop_step_floor(L: float, lam: float, beta_bar: float, eps_a: float,
                       f1: float = 2.0) -> tuple[float, float]:
    """Guaranteed-accept step and resulting linesearch floor for rmsprop.

    Returns ``(eta_accept, eta_accept / f1)``: every step at most
    ``eta_accept`` passes the loss-dissipation test on an L-smooth region, so
    the backtracking never settles below ``eta_accept / f1``.
    """
    if min(L, lam, beta_bar, eps_a, f1) <= 0.0 or lam >= 1.0:
        raise ValueError("need L, beta_bar, eps_a, f1 > 0 and lam in (0, 1)")
    eta_accept = min(2.0 * eps_a * (1.0 - lam) / L, 1.0 / beta_bar)
    return eta_accept, eta_accept / f1


def momentum_rate_denominator(eta_k: float, eta_prev: float, lam: float,
                              beta_bar: float, c: float) -> float:
    """Per-step denominator of the momentum exponential rate.

    The energy contracts like ``exp(-sum 1/D_k / 4)`` where this function
    yields ``D_k`` from two consecutive accepted steps.
    """
    if eta_k <= 0.0 or eta_prev <= 0.0:
        raise ValueError("step sizes must be positive")
    ratio = eta_k / eta_prev
    bracket = (1.0 - beta_bar) * eta_k + 1.0
    return (2.0 / (lam * beta_bar * c * c * eta_k**3)) * max(1.0, ratio * bracket * bracket)


def rmsprop_denominator_cap(eta_floor: float, beta_bar: float, L: float,
                            dim: int, eps_a: float) -> tuple[float, float]:
    """Uniform caps on the rmsprop scaling denominator near convergence.

    Returns ``(acc_cap, denom_sq_cap)``: once the gradient enters the unit
    sup-norm ball, every component of the second-moment accumulator stays
    below ``acc_cap`` and ``(eps_a + sqrt(s_i))^2`` below ``denom_sq_cap``.
    """
    x = beta_bar * eta_floor
    if not 0.0 < x <= 1.0:
        raise ValueError("need 0 < beta_bar * eta_floor <= 1")
    acc_cap = (
        1.0 / x
        + 2.0 * L * math.sqrt(dim) * (1.0 - x) / (beta_bar**3 * eta_floor**2)
        + L * L * dim * (1.0 - x) * (2.0 - x) / (beta_bar**5 * eta_floor**3)
    )
    return acc_cap, (eps_a + math.sqrt(acc_cap)) ** 2


def rmsprop_denominator_cap_sequence(etas, L: float, dim: int, beta_bar: float,
                                     eps_a: float) -> np.ndarray:
    """Per-step denominator caps from the realized step-size history.

    Element ``k`` caps ``(eps_a + sqrt(s_i))^2`` for the accumulator produced
    by step ``k``; tighter than the uniform cap because the geometric-series
    bounds are replaced by the actual finite history sums.
    """
    etas = np.asarray(etas, dtype=float)
    if np.any(etas <= 0.0) or np.any(beta_bar * etas > 1.0 + 1e-15):
        raise ValueError("steps must lie in (0, 1/beta_bar]")
    betas = 1.0 - beta_bar * etas
    sqrt_eta = np.sqrt(etas)
    cum_sqrt = np.concatenate([[0.0], np.cumsum(sqrt_eta)])
    coef1 = 2.0 * L * math.sqrt(dim / beta_bar)
    coef2 = L * L * dim / beta_bar
    out = np.empty_like(etas)
    for n in range(len(etas)):
        # weights B_{n-j} = beta_bar*eta_{n-j} * prod_{l=n-j+1..n} beta_l, j = 0..n
        rev_eta = etas[n::-1]
        suffix = np.concatenate([[1.0], np.cumprod(betas[n:0:-1])])
        weights = beta_bar * rev_eta * suffix
        # T_j = sqrt(eta_{n-1}) + ... + sqrt(eta_{n-j})
        idx = np.arange(n, -1, -1)
        travel = cum_sqrt[n] - cum_sqrt[idx]
        acc = float(np.sum(weights * (1.0 + coef1 * travel + coef2 * travel * travel)))
        out[n] = (eps_a + math.sqrt(acc)) ** 2
    return out


def mean_evals_bound(f1: float, f2: float, beta_bar: float, eta_floor: float,
                     n: int) -> float:
    """Upper bound on mean value evaluations per linesearch after n iterations.

    The leading term depends only on the backtracking factors; the stiffness
    and friction enter a deviation that vanishes like 1/n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if min(eta_floor, beta_bar) <= 0.0 or f1 <= 1.0 or f2 <= 1.0:
        raise ValueError("need f1, f2 > 1 and positive eta_floor, beta_bar")
    lead = 1.0 + math.log(f2) / math.log(f1)
    deviation = math.log(f1 * f1 / (beta_bar * eta_floor)) / math.log(f1)
    return lead + deviation / n
