"""Feature/target normalization, label encoding, and deterministic splitting."""

from __future__ import annotations

import math

import numpy as np

from .loading import DataError, Dataset, MinMaxRecord, StandardizeRecord


def standardize(dataset: Dataset) -> Dataset:
    """Shift/scale every feature column to mean 0 and population deviation 1."""
    mean = dataset.inputs.mean(axis=0)
    std = dataset.inputs.std(axis=0)  # population (1/M) deviation
    dead = np.flatnonzero(std == 0.0)
    if dead.size:
        raise DataError(f"feature column {int(dead[0])} has zero deviation")
    record = StandardizeRecord(mean=mean, std=std)
    return dataset.with_(
        inputs=record.apply(dataset.inputs),
        feature_norm=record,
        provenance=dataset.provenance + " +standardized",
    )


def minmax_normalize(dataset: Dataset) -> Dataset:
    """Map the (numeric) targets affinely onto [0, 1]."""
    targets = _numeric_targets(dataset)
    lo = float(targets.min())
    hi = float(targets.max())
    if hi <= lo:
        raise DataError("targets are constant; min-max normalization undefined")
    record = MinMaxRecord(lo=lo, hi=hi)
    return dataset.with_(
        targets=record.apply(targets),
        target_norm=record,
        provenance=dataset.provenance + " +minmax",
    )


def label_encode(dataset: Dataset) -> Dataset:
    """Encode a two-class label column as 0/1, lexicographically smaller first."""
    raw = [str(v) for v in dataset.targets[:, 0]]
    classes = sorted(set(raw))
    if len(classes) != 2:
        raise DataError(f"label encoding requires exactly 2 classes, found {len(classes)}")
    encoded = np.array([float(classes.index(v)) for v in raw]).reshape(-1, 1)
    return dataset.with_(
        targets=encoded,
        provenance=dataset.provenance + f" +labels({classes[0]}=0,{classes[1]}=1)",
    )


def split(dataset: Dataset, test_fraction: float, seed: int,
          stratify: bool = False) -> tuple[Dataset, Dataset]:
    """Seeded shuffle split into (train, test).

    The test side receives ``ceil(M * test_fraction)`` rows.  With
    ``stratify`` (binary 0/1 targets only) each class contributes its
    proportional share, off by at most one row.
    """
    if not 0.0 < test_fraction < 1.0:
        raise DataError("test_fraction must lie strictly between 0 and 1")
    m = dataset.n_rows
    n_test = math.ceil(m * test_fraction)
    if not 0 < n_test < m:
        raise DataError("split leaves an empty side")
    rng = np.random.default_rng(seed)
    if stratify:
        test_idx = _stratified_test_indices(dataset, n_test, rng)
    else:
        test_idx = rng.permutation(m)[:n_test]
    mask = np.zeros(m, dtype=bool)
    mask[test_idx] = True
    note = f" +split(test={test_fraction},seed={seed},stratify={stratify})"
    train = dataset.with_(
        inputs=dataset.inputs[~mask], targets=dataset.targets[~mask],
        provenance=dataset.provenance + note + "[train]",
    )
    test = dataset.with_(
        inputs=dataset.inputs[mask], targets=dataset.targets[mask],
        provenance=dataset.provenance + note + "[test]",
    )
    return train, test


def _stratified_test_indices(dataset, n_test, rng):
    targets = _numeric_targets(dataset)[:, 0]
    classes = np.unique(targets)
    if len(classes) != 2:
        raise DataError("stratified split requires binary targets")
    per_class = {c: np.flatnonzero(targets == c) for c in classes}
    # Largest-remainder allocation: proportional share, off by at most one.
    quotas = {c: len(idx) * n_test / dataset.n_rows for c, idx in per_class.items()}
    counts = {c: math.floor(q) for c, q in quotas.items()}
    shortfall = n_test - sum(counts.values())
    for c in sorted(classes, key=lambda c: quotas[c] - counts[c], reverse=True):
        if shortfall <= 0:
            break
        counts[c] += 1
        shortfall -= 1
    picks = []
    for c in classes:
        idx = per_class[c]
        picks.append(rng.permutation(idx)[: counts[c]])
    return np.concatenate(picks)


def _numeric_targets(dataset) -> np.ndarray:
    if dataset.targets.dtype == object:
        raise DataError("targets are raw labels; encode them first")
    return dataset.targets.astype(float)
