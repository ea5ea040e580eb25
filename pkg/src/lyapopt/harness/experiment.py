"""Multi-seed experiment execution and aggregation."""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..data import label_encode, load_csv, minmax_normalize, split, standardize
from ..objectives import (
    MLPObjective,
    MonomialObjective,
    QuadraticObjective,
    RosenbrockObjective,
    xavier_init,
)
from ..optim.runner import RunResult, run
from .config import ExperimentConfig, ObjectiveSpec, make_optimizer


@dataclass
class PreparedObjective:
    """Everything needed to run one seed: fresh handles, inits, metrics."""

    dim: int
    make: object  # () -> Objective
    theta0_for: object  # (seed) -> ndarray
    metrics: object  # (Objective, theta) -> (train, test)


def prepare_objective(spec: ObjectiveSpec) -> PreparedObjective:
    """Build the per-seed objective factory for a validated spec.

    Analytic objectives start every seed from the all-ones direction scaled
    to unit norm; network objectives draw their initial parameters per seed.
    Dataset preprocessing (normalization statistics on the full dataset, then
    a seeded stratified split) happens once, here.
    """
    spec.validate()
    if spec.kind == "quadratic":
        matrix = np.diag(spec.diag)
        star = np.zeros(len(spec.diag))
        return _analytic(lambda: QuadraticObjective(matrix, star), len(spec.diag))
    if spec.kind == "monomial":
        return _analytic(lambda: MonomialObjective(spec.degree, spec.dim), spec.dim)
    if spec.kind == "rosenbrock":
        return _analytic(RosenbrockObjective, 2)

    dataset = load_csv(spec.dataset, spec.label_col, spec.has_header)
    dataset = standardize(dataset)
    if spec.task == "classification":
        dataset = label_encode(dataset)
    else:
        dataset = minmax_normalize(dataset)
    train, test = split(
        dataset, spec.test_fraction, spec.split_seed,
        stratify=spec.stratify and spec.task == "classification",
    )

    def make():
        return MLPObjective(spec.widths, spec.activations, train.inputs, train.targets)

    def theta0_for(seed):
        return xavier_init(spec.widths, seed)

    if spec.task == "classification":
        def metrics(obj, theta):
            return (
                _accuracy(obj, theta, train.inputs, train.targets),
                _accuracy(obj, theta, test.inputs, test.targets),
            )
    else:
        def metrics(obj, theta):
            return (
                _mse(obj, theta, train.inputs, train.targets),
                _mse(obj, theta, test.inputs, test.targets),
            )

    widths = list(spec.widths)
    dim = sum(a * b + b for a, b in zip(widths[:-1], widths[1:]))
    return PreparedObjective(dim, make, theta0_for, metrics)


def _analytic(factory, dim):
    theta0 = np.ones(dim) / math.sqrt(dim)

    def metrics(obj, theta):
        return float(obj._value(theta)), math.nan

    return PreparedObjective(dim, factory, lambda seed: theta0.copy(), metrics)


def _accuracy(obj, theta, inputs, targets) -> float:
    predicted = (obj.predict(theta, inputs) >= 0.5).astype(float)
    return 100.0 * float(np.mean(predicted == targets))


def _mse(obj, theta, inputs, targets) -> float:
    err = obj.predict(theta, inputs) - targets
    return float(np.mean(np.sum(err * err, axis=1)))


@dataclass
class SeedResult:
    seed: int
    converged: bool
    n_iter: int
    train_metric: float
    test_metric: float
    value_evals: int
    grad_evals: int
    mean_evals_per_ls: float
    wall_time_s: float
    error: str | None = None


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    results: list[SeedResult]
    runs: list[RunResult] = field(default_factory=list, repr=False)


def run_seed(cfg: ExperimentConfig, seed: int, record_params: bool = False):
    """One seeded run; failures come back as non-convergent records."""
    prepared = prepare_objective(cfg.objective)
    obj = prepared.make()
    optimizer = make_optimizer(cfg.optimizer)
    result = run(obj, prepared.theta0_for(seed), optimizer, cfg.stop, record_params)
    if result.error is None:
        train, test = prepared.metrics(obj, result.theta)
    else:
        train = test = math.nan
    per_ls = result.value_evals / result.n_iter if result.n_iter else float(result.value_evals)
    record = SeedResult(
        seed=seed,
        converged=result.converged,
        n_iter=result.n_iter,
        train_metric=train,
        test_metric=test,
        value_evals=result.value_evals,
        grad_evals=result.grad_evals,
        mean_evals_per_ls=per_ls,
        wall_time_s=result.wall_time_s,
        error=result.error,
    )
    return record, result


def _run_seed_record(args):
    cfg_dict, seed = args
    from .config import config_from_dict

    record, _ = run_seed(config_from_dict(cfg_dict), seed)
    return record


def run_experiment(cfg: ExperimentConfig, jobs: int = 1,
                   keep_runs: bool = False) -> ExperimentResult:
    """Run every seed of a config; deterministic given the seed list.

    Seeds own private objective handles and independent initializations, so
    the result is invariant to ``jobs``.  Per-seed traces are written as CSV
    when the config asks for ``dump_traces`` (forces sequential execution).
    """
    cfg.validate()
    results: list[SeedResult] = []
    runs: list[RunResult] = []
    if jobs > 1 and not cfg.dump_traces and not keep_runs:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_seed_record, [(cfg.to_dict(), s) for s in cfg.seeds]))
    else:
        for seed in cfg.seeds:
            record, result = run_seed(cfg, seed)
            results.append(record)
            if keep_runs:
                runs.append(result)
            if cfg.dump_traces and cfg.out_dir:
                result.trace.to_csv(f"{cfg.out_dir}/trace_{cfg.config_id}_seed{seed}.csv")
    results.sort(key=lambda r: r.seed)
    return ExperimentResult(cfg, results, runs)


@dataclass
class AggregateRow:
    """Per-config summary: medians over converged runs, lower-middle tie rule."""

    config_id: str
    optimizer: str
    beta_bar: float
    eta: float
    lam: float
    f1: float
    f2: float
    eps_a: float
    non_cv_pct: float
    median_train: float | None
    median_test: float | None
    median_time_s: float | None
    median_evals: float | None
    mean_evals_per_ls: float | None
    seeds: list[SeedResult] = field(default_factory=list)


def aggregate(experiment: ExperimentResult) -> AggregateRow:
    """Reduce per-seed records to the reported medians.

    Non-convergent runs count toward ``non_cv_pct`` but are excluded from the
    metric medians; with an even count the lower of the middle pair is
    reported.  ``median_evals`` totals value plus gradient evaluations.
    """
    cfg = experiment.config
    records = experiment.results
    converged = [r for r in records if r.converged]
    non_cv = 100.0 * (len(records) - len(converged)) / len(records)

    def med(values):
        values = [v for v in values if not (isinstance(v, float) and math.isnan(v))]
        return statistics.median_low(values) if values else None

    return AggregateRow(
        config_id=cfg.config_id,
        optimizer=cfg.optimizer.name,
        beta_bar=cfg.optimizer.beta_bar,
        eta=cfg.optimizer.eta,
        lam=cfg.optimizer.lam,
        f1=cfg.optimizer.f1,
        f2=cfg.optimizer.f2,
        eps_a=cfg.optimizer.eps_a,
        non_cv_pct=non_cv,
        median_train=med([r.train_metric for r in converged]),
        median_test=med([r.test_metric for r in converged]),
        median_time_s=med([r.wall_time_s for r in converged]),
        median_evals=med([r.value_evals + r.grad_evals for r in converged]),
        mean_evals_per_ls=med([r.mean_evals_per_ls for r in converged]),
        seeds=list(records),
    )
