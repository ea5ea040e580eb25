"""Experiment configuration: validation, JSON round-tripping, optimizer factory."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from ..optim.config import BacktrackConfig, ConfigError, StopCriterion
from ..optim.optimizers import (
    AdaptiveMomentum,
    AdaptiveRMSProp,
    ConstantMomentum,
    ConstantRMSProp,
    GDArmijo,
)

OPTIMIZER_NAMES = (
    "gd-armijo",
    "momentum",
    "momentum-adaptive",
    "rmsprop",
    "rmsprop-adaptive",
)

OBJECTIVE_KINDS = ("quadratic", "monomial", "rosenbrock", "mlp")


@dataclass(frozen=True)
class ObjectiveSpec:
    """What to optimize.

    ``kind='quadratic'`` uses ``diag`` as the Hessian diagonal (minimizer at
    the origin); ``'monomial'`` a pure even power in ``dim`` variables;
    ``'mlp'`` a dense network on a CSV dataset with the whole preprocessing
    pipeline (standardize features, encode/normalize targets, split).
    """

    kind: str
    diag: tuple[float, ...] = ()
    degree: int = 4
    dim: int = 1
    widths: tuple[int, ...] = ()
    activations: tuple[str, ...] = ()
    task: str = "classification"
    dataset: str = ""
    label_col: int = -1
    has_header: bool = True
    test_fraction: float = 0.5
    split_seed: int = 7
    stratify: bool = True

    def validate(self) -> "ObjectiveSpec":
        if self.kind not in OBJECTIVE_KINDS:
            raise ConfigError(f"unknown objective kind {self.kind!r}")
        if self.kind == "quadratic" and (not self.diag or any(d <= 0 for d in self.diag)):
            raise ConfigError("quadratic objective needs a positive diagonal")
        if self.kind == "monomial" and (self.degree < 2 or self.degree % 2 or self.dim < 1):
            raise ConfigError("monomial objective needs an even degree >= 2 and dim >= 1")
        if self.kind == "mlp":
            if len(self.widths) < 2:
                raise ConfigError("mlp objective needs at least two layer widths")
            if len(self.activations) != len(self.widths) - 1:
                raise ConfigError("mlp objective needs one activation per transition")
            if self.task not in ("classification", "regression"):
                raise ConfigError(f"unknown task {self.task!r}")
            if not self.dataset:
                raise ConfigError("mlp objective needs a dataset path")
            if not 0.0 < self.test_fraction < 1.0:
                raise ConfigError("test_fraction must lie in (0, 1)")
        return self


@dataclass(frozen=True)
class OptimizerSpec:
    """Optimizer tag plus hyperparameters; unused fields are ignored per tag."""

    name: str
    beta_bar: float = 1.0
    lam: float = 0.5
    f1: float = 2.0
    f2: float = 1e4
    eps_a: float = 0.1
    eta: float = 0.0

    def validate(self) -> "OptimizerSpec":
        make_optimizer(self)
        return self


def make_optimizer(spec: OptimizerSpec):
    """Instantiate the optimizer behind a spec, validating its admissibility."""
    try:
        if spec.name == "momentum-adaptive":
            cfg = BacktrackConfig(spec.lam, spec.beta_bar, spec.f1, spec.f2, spec.eps_a)
            return AdaptiveMomentum(cfg)
        if spec.name == "rmsprop-adaptive":
            cfg = BacktrackConfig(spec.lam, spec.beta_bar, spec.f1, spec.f2, spec.eps_a)
            return AdaptiveRMSProp(cfg)
        if spec.name == "momentum":
            if spec.eta <= 0.0:
                raise ConfigError("constant momentum needs --eta > 0")
            return ConstantMomentum(spec.eta, spec.beta_bar)
        if spec.name == "rmsprop":
            if spec.eta <= 0.0:
                raise ConfigError("constant rmsprop needs --eta > 0")
            beta = 1.0 - spec.beta_bar * spec.eta
            return ConstantRMSProp(spec.eta, beta, spec.eps_a)
        if spec.name == "gd-armijo":
            eta_init = spec.eta if spec.eta > 0.0 else 1.0
            return GDArmijo(spec.lam, spec.f1, spec.f2, eta_init)
    except ValueError as exc:  # includes ConfigError
        raise ConfigError(str(exc)) from None
    raise ConfigError(f"unknown optimizer {spec.name!r}; choose from {OPTIMIZER_NAMES}")


@dataclass(frozen=True)
class ExperimentConfig:
    config_id: str
    objective: ObjectiveSpec
    optimizer: OptimizerSpec
    stop: StopCriterion = StopCriterion()
    seeds: tuple[int, ...] = (0,)
    out_dir: str = ""
    dump_traces: bool = False

    def validate(self) -> "ExperimentConfig":
        self.objective.validate()
        self.optimizer.validate()
        if not self.seeds:
            raise ConfigError("need at least one seed")
        return self

    def to_dict(self) -> dict:
        data = asdict(self)
        data["stop"] = {"eps_grad": self.stop.eps_grad, "max_epochs": self.stop.max_epochs}
        return data


def config_from_dict(data: dict) -> ExperimentConfig:
    try:
        objective = ObjectiveSpec(**_tupled(data["objective"], ("diag", "widths", "activations")))
        optimizer = OptimizerSpec(**data["optimizer"])
        stop = StopCriterion(**data.get("stop", {}))
        cfg = ExperimentConfig(
            config_id=data.get("config_id", "experiment"),
            objective=objective,
            optimizer=optimizer,
            stop=stop,
            seeds=tuple(int(s) for s in data.get("seeds", (0,))),
            out_dir=data.get("out_dir", ""),
            dump_traces=bool(data.get("dump_traces", False)),
        )
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"malformed experiment config: {exc}") from None
    return cfg.validate()


def _tupled(data: dict, keys) -> dict:
    out = dict(data)
    for key in keys:
        if key in out:
            out[key] = tuple(out[key])
    return out


def load_config(path) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return config_from_dict(json.load(fh))


def save_config(cfg: ExperimentConfig, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cfg.to_dict(), fh, indent=2)
        fh.write("\n")
