"""Per-iteration run records."""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np


@dataclass
class TraceRow:
    """One optimizer iteration.

    ``lyapunov`` is the monitored energy at the point the step departed from
    (mechanical energy for momentum, the loss itself otherwise);
    ``dissipation`` the accepted step's required decrease (NaN when the
    optimizer imposes none); ``delta`` the displacement ``|theta' - theta|``;
    ``cum_evals`` the cumulative value-evaluation count including the single
    evaluation that opened the run.
    """

    n: int
    eta0: float
    eta: float
    lyapunov: float
    grad_norm: float
    delta: float
    trials: int
    cum_evals: int
    dissipation: float


_COLUMNS = [
    "n",
    "eta0",
    "eta",
    "lyapunov",
    "grad_norm",
    "delta",
    "trials",
    "cum_evals",
    "dissipation",
]


class IterationTrace:
    """Columnar record of a run, plus the closing state of the monitored energy.

    ``params`` optionally stores every iterate ``theta_0 .. theta_final``
    (length ``len(trace) + 1``) when the run was asked to record them.
    """

    def __init__(self, record_params: bool = False):
        self.rows: list[TraceRow] = []
        self.params: list[np.ndarray] | None = [] if record_params else None
        self.final_lyapunov: float | None = None
        self.final_grad_norm: float | None = None

    def append(self, row: TraceRow):
        self.rows.append(row)

    def record_theta(self, theta: np.ndarray):
        if self.params is not None:
            self.params.append(np.array(theta, copy=True))

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(row, name) for row in self.rows], dtype=float)

    @property
    def eta(self) -> np.ndarray:
        return self.column("eta")

    @property
    def eta0(self) -> np.ndarray:
        return self.column("eta0")

    @property
    def lyapunov(self) -> np.ndarray:
        return self.column("lyapunov")

    @property
    def grad_norm(self) -> np.ndarray:
        return self.column("grad_norm")

    @property
    def delta(self) -> np.ndarray:
        return self.column("delta")

    @property
    def trials(self) -> np.ndarray:
        return self.column("trials")

    @property
    def cum_evals(self) -> np.ndarray:
        return self.column("cum_evals")

    @property
    def dissipation(self) -> np.ndarray:
        return self.column("dissipation")

    def lyapunov_closed(self) -> np.ndarray:
        """Energy at every visited point, including the final one."""
        if self.final_lyapunov is None:
            raise ValueError("trace has no closing energy value")
        return np.append(self.lyapunov, self.final_lyapunov)

    def distances(self, theta_star) -> np.ndarray:
        """``|theta_n - theta_star|`` for every recorded iterate."""
        if self.params is None:
            raise ValueError("trace was not recorded with parameters")
        theta_star = np.asarray(theta_star, dtype=float)
        return np.array([np.linalg.norm(p - theta_star) for p in self.params])

    def to_csv(self, path):
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(_COLUMNS)
            for row in self.rows:
                writer.writerow([getattr(row, c) for c in _COLUMNS])
