"""Full-batch feedforward network training objectives.

The parameter vector is flat: for each layer, the weight matrix entries
(``(n_in, n_out)``, row-major) followed by the biases.  The loss is the mean
squared error over the dataset; classification targets are 0/1 and the output
layer is expected to be a sigmoid in that case.
"""

from __future__ import annotations

import numpy as np

from .activations import resolve_activation
from .base import InvalidObjectiveError, Objective


def param_count(widths) -> int:
    """Number of parameters of a dense network with the given layer widths."""
    return int(sum(w_in * w_out + w_out for w_in, w_out in zip(widths[:-1], widths[1:])))


def xavier_init(widths, seed: int) -> np.ndarray:
    """Flat initial parameter vector: zero biases, weights ``N(0, 1/n_in)``.

    Each layer's weights are drawn i.i.d. standard normal and scaled by
    ``1/sqrt(n_in)``.  Deterministic for a fixed seed.
    """
    rng = np.random.default_rng(seed)
    chunks = []
    for w_in, w_out in zip(widths[:-1], widths[1:]):
        weights = rng.standard_normal((w_in, w_out)) / np.sqrt(w_in)
        chunks.append(weights.ravel())
        chunks.append(np.zeros(w_out))
    return np.concatenate(chunks)


class MLPObjective(Objective):
    """Mean-squared-error training loss of a dense network on a fixed dataset.

    Args:
        widths: layer widths, input first (e.g. ``[60, 30, 1]``).
        activations: one tag per layer transition, from
            ``{gelu-approx, tanh, sigmoid, linear}`` (``gelu`` is an alias).
        inputs: ``(M, widths[0])`` design matrix.
        targets: ``(M, widths[-1])`` target matrix.

    The gradient is computed by reverse accumulation of the layer-wise chain
    rule and shares the forward pass with the value when evaluated jointly.
    """

    def __init__(self, widths, activations, inputs, targets):
        widths = [int(w) for w in widths]
        if len(widths) < 2 or any(w <= 0 for w in widths):
            raise InvalidObjectiveError("invalid objective: bad layer widths")
        if len(activations) != len(widths) - 1:
            raise InvalidObjectiveError(
                "invalid objective: need one activation per layer transition"
            )
        inputs = np.asarray(inputs, dtype=float)
        targets = np.asarray(targets, dtype=float)
        if inputs.ndim != 2 or inputs.shape[1] != widths[0]:
            raise InvalidObjectiveError("invalid objective: inputs/widths mismatch")
        if targets.shape != (inputs.shape[0], widths[-1]):
            raise InvalidObjectiveError("invalid objective: targets shape mismatch")
        super().__init__(param_count(widths))
        self.widths = widths
        self.activation_tags = list(activations)
        self._acts = [resolve_activation(tag) for tag in activations]
        self.inputs = inputs
        self.targets = targets
        self.n_samples = inputs.shape[0]

    # parameter layout ---------------------------------------------------
    def split_params(self, theta):
        """View the flat vector as per-layer ``(W, b)`` pairs (no copies)."""
        layers = []
        offset = 0
        for w_in, w_out in zip(self.widths[:-1], self.widths[1:]):
            w = theta[offset : offset + w_in * w_out].reshape(w_in, w_out)
            offset += w_in * w_out
            b = theta[offset : offset + w_out]
            offset += w_out
            layers.append((w, b))
        return layers

    # network passes -------------------------------------------------------
    def _forward(self, theta, inputs):
        pre = []
        post = [inputs]
        a = inputs
        for (w, b), (fwd, _) in zip(self.split_params(theta), self._acts):
            z = a @ w + b
            a = fwd(z)
            pre.append(z)
            post.append(a)
        return pre, post

    def predict(self, theta, inputs) -> np.ndarray:
        """Network outputs for arbitrary inputs; no counters touched."""
        theta = self._check_input(theta)
        inputs = np.asarray(inputs, dtype=float)
        with np.errstate(all="ignore"):
            _, post = self._forward(theta, inputs)
        return post[-1]

    def _value(self, theta):
        _, post = self._forward(theta, self.inputs)
        err = post[-1] - self.targets
        return float(np.sum(err * err) / self.n_samples)

    def _value_and_gradient(self, theta):
        pre, post = self._forward(theta, self.inputs)
        err = post[-1] - self.targets
        value = float(np.sum(err * err) / self.n_samples)

        grad = np.empty_like(theta)
        layers = self.split_params(theta)
        delta = 2.0 * err / self.n_samples
        offset = self.dim
        for idx in range(len(layers) - 1, -1, -1):
            w, _ = layers[idx]
            _, deriv = self._acts[idx]
            delta = delta * deriv(pre[idx], post[idx + 1])
            db = delta.sum(axis=0)
            dw = post[idx].T @ delta
            offset -= db.size
            grad[offset : offset + db.size] = db
            offset -= dw.size
            grad[offset : offset + dw.size] = dw.ravel()
            if idx > 0:
                delta = delta @ w.T
        return value, grad

    def _gradient(self, theta):
        return self._value_and_gradient(theta)[1]
