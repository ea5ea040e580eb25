"""Convergence-rate envelopes and empirical rate fits.

An envelope is an explicit upper bound on ``|theta_n - theta*|`` valid from
the first iterate inside a stated neighborhood of the limit.  Envelopes are
inequalities: runs are checked to stay below them, never to match them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..optim.config import BacktrackConfig
from ..optim.trace import IterationTrace
from .constants import momentum_rate_denominator


class DegenerateFitError(ValueError):
    """Not enough usable tail points to fit a rate."""


@dataclass(frozen=True)
class LojasiewiczSpec:
    """Local gradient-domination data: ``|grad| >= c |value - min|^(1-alpha)``.

    ``radius`` is the neighborhood in which the inequality is trusted; the
    envelope anchors itself at the first iterate inside that ball.
    """

    alpha: float
    c: float
    radius: float = 0.1

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie in (0, 1)")
        if self.c <= 0.0 or self.radius <= 0.0:
            raise ValueError("c and radius must be positive")


@dataclass
class RateBound:
    """A predicted convergence envelope.

    ``kind`` is ``exponential`` (per-step decay ``weights``, explicit
    ``envelope`` values aligned to iterates ``n1 .. n1+len-1``), ``power``
    (a log-log ``exponent`` with no computable constant), or ``finite-time``.
    """

    kind: str
    n1: int
    constant: float = math.nan
    weights: np.ndarray | None = field(default=None, repr=False)
    exponent: float = math.nan
    envelope: np.ndarray | None = field(default=None, repr=False)

    def envelope_at(self, n: int) -> float:
        if self.envelope is None:
            raise ValueError(f"no pointwise envelope for kind {self.kind!r}")
        if n < self.n1 or n - self.n1 >= len(self.envelope):
            raise IndexError(f"envelope defined on [{self.n1}, {self.n1 + len(self.envelope) - 1}]")
        return float(self.envelope[n - self.n1])


def power_exponent(alpha: float) -> float:
    """Algebraic decay exponent ``-alpha / (1 - 2 alpha)`` of the sub-exponential regime."""
    if not 0.0 < alpha < 0.5:
        raise ValueError("power regime requires alpha in (0, 0.5)")
    return -alpha / (1.0 - 2.0 * alpha)


def first_entry_index(distances, radius: float) -> int:
    """Index of the first iterate inside the ball of the given radius."""
    inside = np.flatnonzero(np.asarray(distances, dtype=float) <= radius)
    if inside.size == 0:
        raise ValueError(f"no iterate enters the radius-{radius} ball")
    return int(inside[0])


def momentum_convergence_envelope(trace: IterationTrace, loj: LojasiewiczSpec,
                                  cfg: BacktrackConfig, theta_star,
                                  v_star: float = 0.0,
                                  eta_floor: float | None = None) -> RateBound:
    """Envelope on ``|theta_n - theta*|`` for an adaptive momentum run.

    For ``alpha = 1/2`` the energy obeys a two-step decay recurrence whose
    per-step weights are the reciprocals of
    :func:`momentum_rate_denominator`; the distance envelope combines the
    resulting energy bound with the displacement-from-energy estimate.  The
    anchor must not be the initial iterate (the displacement estimate needs
    one preceding step).

    ``eta_floor`` is any valid lower bound on the accepted steps; defaults to
    the smallest accepted step of the trace.
    """
    etas = trace.eta
    distances = trace.distances(theta_star)
    energy = trace.lyapunov_closed() - v_star
    n1 = first_entry_index(distances, loj.radius)
    if loj.alpha > 0.5:
        return RateBound(kind="finite-time", n1=n1)
    if loj.alpha < 0.5:
        weights = _momentum_weights(etas, cfg, loj.c, start=max(n1, 1))
        return RateBound(kind="power", n1=n1, exponent=power_exponent(loj.alpha),
                         weights=weights)

    if n1 < 1:
        raise ValueError("anchor at the initial iterate is unsupported; start farther out")
    if n1 + 1 >= len(energy):
        raise ValueError("run enters the neighborhood too late to anchor an envelope")
    if eta_floor is None:
        eta_floor = float(np.min(etas))
    weights = _momentum_weights(etas, cfg, loj.c, start=n1 + 1)
    a_star = (2.0 / (cfg.lam * loj.alpha * loj.c * cfg.beta_bar)) * (
        1.0 / eta_floor + (1.0 + cfg.beta_bar) * cfg.f2
    )

    n_total = len(etas)  # iterate indices run 0 .. n_total
    anchor = math.exp(math.sqrt(max(energy[n1] * energy[n1 + 1], 0.0)))
    decay = np.concatenate([[0.0], np.cumsum(weights)])  # sum over k = n1+1 .. m-1

    def energy_bound(m: int) -> float:
        if m <= n1 + 1:
            return max(float(energy[m]), 0.0)
        return anchor * math.exp(-0.5 * decay[m - n1 - 1])

    envelope = np.empty(n_total - n1 + 1)
    for m in range(n1, n_total + 1):
        drift = 0.5 / cfg.beta_bar * math.sqrt(energy_bound(m - 1) / cfg.lam)
        envelope[m - n1] = drift + a_star * math.sqrt(energy_bound(m))
    return RateBound(kind="exponential", n1=n1, constant=a_star,
                     weights=weights, envelope=envelope)


def _momentum_weights(etas, cfg, c, start):
    return np.array(
        [
            1.0 / momentum_rate_denominator(etas[k], etas[k - 1], cfg.lam, cfg.beta_bar, c)
            for k in range(start, len(etas))
        ]
    )


def rmsprop_convergence_envelope(trace: IterationTrace, loj: LojasiewiczSpec,
                                 denom_sq_cap, lam: float, eps_a: float,
                                 theta_star, r_star: float = 0.0) -> RateBound:
    """Envelope on ``|theta_n - theta*|`` for an adaptive rmsprop run.

    ``denom_sq_cap`` bounds the squared scaling denominator; pass either the
    uniform cap or a per-step sequence aligned with the trace rows.  For
    ``alpha = 1/2`` the loss decays exponentially with per-step weight
    ``lam c^2 eta_k / (2 sqrt(cap_k))`` and the distance envelope carries the
    constant ``2 sqrt(cap) / (lam c eps_a) * (loss at the anchor)``.
    """
    distances = trace.distances(theta_star)
    n1 = first_entry_index(distances, loj.radius)
    if loj.alpha > 0.5:
        return RateBound(kind="finite-time", n1=n1)

    etas = trace.eta
    caps = np.broadcast_to(np.asarray(denom_sq_cap, dtype=float), etas.shape)
    if loj.alpha < 0.5:
        weights = lam * loj.c**2 * etas[n1:] / np.sqrt(caps[n1:])
        return RateBound(kind="power", n1=n1, exponent=power_exponent(loj.alpha),
                         weights=weights)

    if n1 >= len(etas):
        raise ValueError("run enters the neighborhood too late to anchor an envelope")
    loss = trace.lyapunov_closed() - r_star
    weights = lam * loj.c**2 * etas[n1:] / (2.0 * np.sqrt(caps[n1:]))
    constant = 2.0 * math.sqrt(float(np.max(caps))) / (lam * loj.c * eps_a) * max(
        float(loss[n1]), 0.0
    )
    decay = np.concatenate([[0.0], np.cumsum(weights)])
    envelope = constant * np.exp(-decay)
    return RateBound(kind="exponential", n1=n1, constant=constant,
                     weights=weights, envelope=envelope)


@dataclass(frozen=True)
class RateFit:
    """Least-squares decay fit of a convergent run's distance tail."""

    model: str
    slope: float
    n_points: int

    @property
    def factor(self) -> float:
        """Per-step contraction factor implied by an exponential fit."""
        return math.exp(self.slope)


_DISTANCE_FLOOR = 10.0 * np.finfo(float).eps


def rate_fit(trace: IterationTrace, model: str, tail_fraction: float = 0.5,
             theta_star=None) -> RateFit:
    """Fit the tail of ``log |theta_n - theta*|`` against n (or log n).

    ``theta_star`` defaults to the final iterate, in which case the final
    point itself is excluded.  Indices whose distance sits at the
    floating-point floor are skipped; fewer than ten usable points raise
    :class:`DegenerateFitError`.
    """
    if model not in ("exponential", "power"):
        raise ValueError("model must be 'exponential' or 'power'")
    if not 0.0 < tail_fraction <= 1.0:
        raise ValueError("tail_fraction must lie in (0, 1]")
    if trace.params is None:
        raise ValueError("trace was not recorded with parameters")
    if theta_star is None:
        theta_star = trace.params[-1]
        distances = trace.distances(theta_star)[:-1]
    else:
        distances = trace.distances(theta_star)
    n = np.arange(len(distances))
    start = int(math.floor(len(distances) * (1.0 - tail_fraction)))
    keep = (n >= max(start, 1 if model == "power" else 0)) & (distances > _DISTANCE_FLOOR)
    if np.count_nonzero(keep) < 10:
        raise DegenerateFitError(
            f"only {np.count_nonzero(keep)} usable tail points; need at least 10"
        )
    y = np.log(distances[keep])
    x = n[keep].astype(float) if model == "exponential" else np.log(n[keep].astype(float))
    slope = float(np.polyfit(x, y, 1)[0])
    return RateFit(model=model, slope=slope, n_points=int(np.count_nonzero(keep)))
