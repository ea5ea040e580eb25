"""Report emission and reloading (CSV summary, JSON with per-seed detail)."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict

from .experiment import AggregateRow, SeedResult

CSV_HEADER = [
    "config_id",
    "optimizer",
    "beta_bar",
    "eta",
    "lambda",
    "f1",
    "f2",
    "eps_a",
    "non_cv_pct",
    "median_train",
    "median_test",
    "median_time_s",
    "median_evals",
    "mean_evals_per_ls",
]

_FIELD_FOR_COLUMN = {"lambda": "lam"}


def emit_report(rows: list[AggregateRow], fmt: str, path) -> None:
    """Write aggregate rows as ``csv`` (summary) or ``json`` (plus per-seed arrays)."""
    if fmt == "csv":
        _emit_csv(rows, path)
    elif fmt == "json":
        _emit_json(rows, path)
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def _cell(value):
    return "" if value is None else value


def _emit_csv(rows, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(
                [_cell(getattr(row, _FIELD_FOR_COLUMN.get(col, col))) for col in CSV_HEADER]
            )


def _emit_json(rows, path):
    payload = {"rows": []}
    for row in rows:
        data = asdict(row)
        data["per_seed"] = data.pop("seeds")
        payload["rows"].append(data)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def load_report(path) -> list[AggregateRow]:
    """Reload a JSON report into aggregate rows (inverse of the JSON emitter)."""
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    rows = []
    for data in payload["rows"]:
        seeds = [SeedResult(**s) for s in data.pop("per_seed")]
        rows.append(AggregateRow(seeds=seeds, **data))
    return rows
