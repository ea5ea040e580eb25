"""Elementwise activations and their derivatives."""

from __future__ import annotations

import numpy as np

GELU_SLOPE = 1.702


def sigmoid(x):
    """Logistic sigmoid, computed branch-wise so |x| > 700 cannot overflow."""
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty_like(arr)
    pos = arr >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-arr[pos]))
    ex = np.exp(arr[~pos])
    out[~pos] = ex / (1.0 + ex)
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(out[0])
    return out.reshape(np.shape(x))


def sigmoid_deriv(x, fx):
    return fx * (1.0 - fx)


def gelu_approx(x):
    """Smooth gelu approximation ``x * sigmoid(1.702 x)``.

    Saturates gracefully: tends to 0 for x -> -inf and to x for x -> +inf.
    Accepts scalars or arrays; returns a float for scalar input.
    """
    arr = np.asarray(x, dtype=float)
    out = arr * sigmoid(GELU_SLOPE * arr)
    if np.isscalar(x) or arr.ndim == 0:
        return float(out)
    return out


def gelu_approx_deriv(x, fx):
    s = sigmoid(GELU_SLOPE * np.asarray(x, dtype=float))
    return s + GELU_SLOPE * np.asarray(x, dtype=float) * s * (1.0 - s)


def tanh(x):
    return np.tanh(np.asarray(x, dtype=float))


def tanh_deriv(x, fx):
    return 1.0 - fx * fx


def linear(x):
    return np.asarray(x, dtype=float)


def linear_deriv(x, fx):
    return np.ones_like(np.asarray(x, dtype=float))


# Registry keyed by tag; each entry is (forward, derivative-from-(z, f(z))).
ACTIVATIONS = {
    "gelu-approx": (gelu_approx, gelu_approx_deriv),
    "tanh": (tanh, tanh_deriv),
    "sigmoid": (sigmoid, sigmoid_deriv),
    "linear": (linear, linear_deriv),
}
ACTIVATIONS["gelu"] = ACTIVATIONS["gelu-approx"]  # accepted alias


def resolve_activation(tag: str):
    try:
        return ACTIVATIONS[tag]
    except KeyError:
        raise ValueError(
            f"unknown activation {tag!r}; choose from {sorted(set(ACTIVATIONS))}"
        ) from None
