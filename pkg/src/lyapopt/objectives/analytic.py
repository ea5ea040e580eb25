"""Analytic test objectives with known smoothness and gradient-domination constants.

Each objective exposes, when available:

* ``lipschitz`` -- global Lipschitz constant of the gradient,
* ``loj_alpha`` / ``loj_c`` -- the exponent and constant of the local
  gradient-domination inequality ``||grad R|| >= c |R - R*|^(1-alpha)``,
* ``theta_star`` / ``min_value`` -- the minimizer and its value.
"""

from __future__ import annotations

import numpy as np

from .base import InvalidObjectiveError, Objective


class QuadraticObjective(Objective):
    """``R(theta) = 0.5 (theta - theta*)^T A (theta - theta*)`` with A symmetric positive definite.

    The gradient is A-Lipschitz with constant ``lambda_max(A)`` and the
    gradient-domination inequality holds globally with exponent 1/2 and
    constant ``sqrt(2 lambda_min(A))``.
    """

    def __init__(self, matrix, theta_star):
        matrix = np.asarray(matrix, dtype=float)
        theta_star = np.asarray(theta_star, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidObjectiveError("invalid objective: matrix must be square")
        if theta_star.shape != (matrix.shape[0],):
            raise InvalidObjectiveError("invalid objective: minimizer/matrix shape mismatch")
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12):
            raise InvalidObjectiveError("invalid objective: matrix must be symmetric")
        eigvals = np.linalg.eigvalsh(matrix)
        if eigvals[0] <= 0.0:
            raise InvalidObjectiveError("invalid objective: matrix must be positive definite")
        super().__init__(matrix.shape[0])
        self.matrix = matrix
        self.theta_star = theta_star
        self.lipschitz = float(eigvals[-1])
        self.min_eigval = float(eigvals[0])
        self.loj_alpha = 0.5
        self.loj_c = float(np.sqrt(2.0 * eigvals[0]))
        self.min_value = 0.0

    def _value(self, theta):
        x = theta - self.theta_star
        return 0.5 * float(x @ (self.matrix @ x))

    def _gradient(self, theta):
        return self.matrix @ (theta - self.theta_star)


def make_quadratic(matrix, theta_star) -> QuadraticObjective:
    """Factory for :class:`QuadraticObjective`; validates positive definiteness."""
    return QuadraticObjective(matrix, theta_star)


class MonomialObjective(Objective):
    """``R(theta) = sum_i theta_i^p`` for an even degree p >= 2.

    At the origin the gradient-domination exponent is ``1/p`` (in one
    dimension the constant is ``p``, with equality:
    ``|R'| = p |x|^(p-1) = p R^((p-1)/p)``).  The gradient is globally
    Lipschitz only for p = 2; for p > 2 it is Lipschitz on bounded sets.
    """

    def __init__(self, degree: int, dim: int = 1):
        degree = int(degree)
        if degree < 2 or degree % 2 != 0:
            raise InvalidObjectiveError("invalid objective: degree must be even and >= 2")
        super().__init__(dim)
        self.degree = degree
        self.theta_star = np.zeros(dim)
        self.loj_alpha = 1.0 / degree
        self.loj_c = float(degree) if dim == 1 else None
        self.min_value = 0.0

    def _value(self, theta):
        return float(np.sum(theta**self.degree))

    def _gradient(self, theta):
        return self.degree * theta ** (self.degree - 1)


class RosenbrockObjective(Objective):
    """Classic 2-D banana valley ``(a - x)^2 + b (y - x^2)^2``; nonconvex."""

    def __init__(self, a: float = 1.0, b: float = 100.0):
        super().__init__(2)
        self.a = float(a)
        self.b = float(b)
        self.theta_star = np.array([a, a * a])
        self.min_value = 0.0

    def _value(self, theta):
        x, y = theta
        return (self.a - x) ** 2 + self.b * (y - x * x) ** 2

    def _gradient(self, theta):
        x, y = theta
        gx = -2.0 * (self.a - x) - 4.0 * self.b * x * (y - x * x)
        gy = 2.0 * self.b * (y - x * x)
        return np.array([gx, gy])
