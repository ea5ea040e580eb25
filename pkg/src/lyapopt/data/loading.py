"""Dataset container and CSV ingestion.

The CSV dialect is deliberately narrow: comma-separated, decimal point,
optional single header row, UTF-8, no quoting.  Feature cells must parse as
finite decimals; the designated label column may be categorical text and is
carried through untouched until encoded.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, replace

import numpy as np


class DataError(ValueError):
    """Malformed dataset file or inadmissible transform input."""


@dataclass(frozen=True)
class StandardizeRecord:
    """Per-feature shift/scale used, sufficient to invert the transform."""

    mean: np.ndarray
    std: np.ndarray

    def apply(self, inputs: np.ndarray) -> np.ndarray:
        return (inputs - self.mean) / self.std

    def invert(self, inputs: np.ndarray) -> np.ndarray:
        return inputs * self.std + self.mean


@dataclass(frozen=True)
class MinMaxRecord:
    """Affine map of targets onto [0, 1], with its inverse."""

    lo: float
    hi: float

    def apply(self, targets: np.ndarray) -> np.ndarray:
        return (targets - self.lo) / (self.hi - self.lo)

    def invert(self, targets: np.ndarray) -> np.ndarray:
        return targets * (self.hi - self.lo) + self.lo


@dataclass(frozen=True)
class Dataset:
    """Immutable (inputs, targets) pair plus normalization provenance.

    ``targets`` is an ``(M, 1)`` float matrix after encoding; straight from
    :func:`load_csv` it may be an object array of raw labels.  The
    normalization records, when present, describe transforms already applied
    and suffice to invert them.
    """

    inputs: np.ndarray
    targets: np.ndarray
    feature_norm: StandardizeRecord | None = None
    target_norm: MinMaxRecord | None = None
    provenance: str = ""

    def __post_init__(self):
        if self.inputs.ndim != 2 or self.inputs.shape[0] < 1:
            raise DataError("inputs must be a non-empty 2-D matrix")
        if self.targets.shape != (self.inputs.shape[0], 1):
            raise DataError("targets must be an (M, 1) column")

    @property
    def n_rows(self) -> int:
        return self.inputs.shape[0]

    @property
    def n_features(self) -> int:
        return self.inputs.shape[1]

    def with_(self, **changes) -> "Dataset":
        return replace(self, **changes)


def load_csv(path, label_column: int, has_header: bool = True) -> Dataset:
    """Read a rectangular CSV into a Dataset.

    Numeric cells must parse as finite decimals; a parse failure or a
    non-finite value reports its (1-based) row and column.  The label column
    is kept as raw text if any of its cells fail to parse numerically.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh)]
    if has_header and rows:
        header_offset = 2
        rows = rows[1:]
    else:
        header_offset = 1
    if not rows:
        raise DataError(f"{path}: no data rows")
    width = len(rows[0])
    if not 0 <= label_column < width:
        raise DataError(f"{path}: label column {label_column} outside 0..{width - 1}")

    features = np.empty((len(rows), width - 1))
    raw_labels: list[str] = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DataError(f"{path}: row {i + header_offset} has {len(row)} fields, expected {width}")
        k = 0
        for j, cell in enumerate(row):
            if j == label_column:
                raw_labels.append(cell.strip())
                continue
            try:
                val = float(cell)
            except ValueError:
                raise DataError(
                    f"{path}: row {i + header_offset}, column {j + 1}: cannot parse {cell!r}"
                ) from None
            if not np.isfinite(val):
                raise DataError(
                    f"{path}: row {i + header_offset}, column {j + 1}: non-finite value {cell!r}"
                )
            features[i, k] = val
            k += 1

    targets = _maybe_numeric(raw_labels, path)
    return Dataset(features, targets, provenance=f"{path} (raw)")


def _maybe_numeric(raw_labels, path):
    try:
        numeric = np.array([float(v) for v in raw_labels]).reshape(-1, 1)
    except ValueError:
        return np.array(raw_labels, dtype=object).reshape(-1, 1)
    if not np.all(np.isfinite(numeric)):
        raise DataError(f"{path}: non-finite value in label column")
    return numeric


def write_csv(dataset: Dataset, path, feature_prefix: str = "f",
              label_name: str = "label"):
    """Write inputs plus the target column (last) with a single header row."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"{feature_prefix}{j}" for j in range(dataset.n_features)] + [label_name])
        for x, y in zip(dataset.inputs, dataset.targets):
            label = y[0]
            if isinstance(label, float):
                label = repr(label)
            writer.writerow([repr(float(v)) for v in x] + [label])
