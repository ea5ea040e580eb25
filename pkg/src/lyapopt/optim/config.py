"""Linesearch and stopping configuration."""

from __future__ import annotations

from dataclasses import dataclass


class ConfigError(ValueError):
    """Inadmissible optimizer or stopping configuration."""


@dataclass(frozen=True)
class BacktrackConfig:
    """Constants of the energy-dissipation backtracking.

    ``lam`` is the fraction of the continuous-time dissipation the accepted
    step must realize, ``beta_bar`` the friction coefficient that couples the
    averaging weight ``beta_n = 1 - beta_bar * eta_n`` and caps the step at
    ``1/beta_bar``.  ``f1 > 1`` shrinks a rejected trial step; ``f2 > 1``
    grows the warm start from the previously accepted step.
    """

    lam: float
    beta_bar: float
    f1: float = 2.0
    f2: float = 1e4
    eps_a: float = 0.1
    stall_floor: float = 1e-30

    @property
    def eta_max(self) -> float:
        return 1.0 / self.beta_bar

    def _validate_common(self):
        if not self.f1 > 1.0:
            raise ConfigError(f"f1 must exceed 1, got {self.f1}")
        if not self.f2 > 1.0:
            raise ConfigError(f"f2 must exceed 1, got {self.f2}")
        if not self.beta_bar > 0.0:
            raise ConfigError(f"beta_bar must be positive, got {self.beta_bar}")
        if not self.stall_floor > 0.0:
            raise ConfigError("stall_floor must be positive")

    def validate_momentum(self) -> "BacktrackConfig":
        """Admissibility for the momentum linesearch: beta_bar >= 1, lam < 1/(2 beta_bar)."""
        self._validate_common()
        if self.beta_bar < 1.0:
            raise ConfigError(f"momentum requires beta_bar >= 1, got {self.beta_bar}")
        if not 0.0 < self.lam < 0.5 / self.beta_bar:
            raise ConfigError(
                f"momentum requires 0 < lam < 1/(2*beta_bar) = {0.5 / self.beta_bar}, "
                f"got {self.lam}"
            )
        return self

    def validate_rmsprop(self) -> "BacktrackConfig":
        """Admissibility for the rmsprop linesearch: lam in (0,1), eps_a > 0."""
        self._validate_common()
        if not 0.0 < self.lam < 1.0:
            raise ConfigError(f"rmsprop requires lam in (0, 1), got {self.lam}")
        if not self.eps_a > 0.0:
            raise ConfigError(f"eps_a must be positive, got {self.eps_a}")
        return self


@dataclass(frozen=True)
class StopCriterion:
    """Stop when the gradient norm drops to ``eps_grad`` or after ``max_epochs`` steps."""

    eps_grad: float = 1e-4
    max_epochs: int = 200_000

    def __post_init__(self):
        if not self.eps_grad > 0.0:
            raise ConfigError("eps_grad must be positive")
        if self.max_epochs < 1:
            raise ConfigError("max_epochs must be at least 1")
