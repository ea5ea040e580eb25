"""Deterministic synthetic stand-ins for the two benchmark datasets.

The real benchmark files are third-party downloads; these generators produce
drop-in replacements with the same shapes, label conventions, and
preprocessing needs (raw feature scales, text labels for the classification
set, a positive continuous target for the regression set).  Fixed seeds make
the files byte-reproducible.
"""

from __future__ import annotations

import numpy as np

from .loading import Dataset

CLASSIFICATION_SHAPE = (208, 60)
REGRESSION_SHAPE = (506, 13)


def make_classification_like(n_rows: int = 208, n_features: int = 60,
                             seed: int = 20240 , separation: float = 1.0) -> Dataset:
    """Two-class dataset: anisotropic Gaussian clusters with text labels.

    Class sizes follow the 111/97 imbalance of the original benchmark.  The
    clusters overlap (the task is not linearly separable in population), but
    any finite sample in general position remains interpolable by the
    benchmark network.
    """
    rng = np.random.default_rng(seed)
    n_pos = round(n_rows * 111 / 208)
    labels = np.array(["M"] * n_pos + ["R"] * (n_rows - n_pos), dtype=object)

    direction = rng.standard_normal(n_features)
    direction /= np.linalg.norm(direction)
    mixing = rng.standard_normal((8, n_features)) * 0.5
    signs = np.where(labels == "M", 1.0, -1.0)
    latent = rng.standard_normal((n_rows, 8))
    inputs = (
        np.outer(signs * separation, direction)
        + latent @ mixing
        + 0.3 * rng.standard_normal((n_rows, n_features))
    )
    # raw-looking per-feature scales and offsets; standardization undoes them
    scales = rng.uniform(0.5, 2.0, n_features)
    offsets = rng.uniform(-1.0, 1.0, n_features)
    inputs = inputs * scales + offsets

    order = rng.permutation(n_rows)
    return Dataset(
        inputs[order],
        labels[order].reshape(-1, 1),
        provenance=f"synthetic-classification(seed={seed},sep={separation})",
    )


def make_regression_like(n_rows: int = 506, n_features: int = 13,
                         seed: int = 77130) -> Dataset:
    """Regression dataset with a smooth noiseless teacher target.

    The target is a small random tanh expansion of correlated features plus a
    single interaction term, shifted to a positive price-like range; min-max
    normalization maps it onto [0, 1] exactly as the benchmark expects.
    """
    rng = np.random.default_rng(seed)
    latent = rng.standard_normal((n_rows, n_features))
    correlate = np.eye(n_features) + 0.3 * rng.standard_normal((n_features, n_features))
    feats = latent @ correlate

    n_units = 5
    w = rng.standard_normal((n_features, n_units)) / np.sqrt(n_features)
    b = rng.uniform(-0.5, 0.5, n_units)
    a = rng.uniform(0.5, 1.5, n_units) * rng.choice([-1.0, 1.0], n_units)
    teacher = np.tanh(latent @ w + b) @ a + 0.2 * latent[:, 0] * latent[:, 1]
    targets = 20.0 + 8.0 * teacher

    scales = rng.uniform(0.5, 3.0, n_features)
    offsets = rng.uniform(-2.0, 2.0, n_features)
    inputs = feats * scales + offsets
    return Dataset(
        inputs,
        targets.reshape(-1, 1),
        provenance=f"synthetic-regression(seed={seed})",
    )
