from .config import (
    ExperimentConfig,
    ObjectiveSpec,
    OptimizerSpec,
    config_from_dict,
    load_config,
    make_optimizer,
    save_config,
)
from .experiment import (
    AggregateRow,
    ExperimentResult,
    SeedResult,
    aggregate,
    prepare_objective,
    run_experiment,
    run_seed,
)
from .report import CSV_HEADER, emit_report, load_report

__all__ = [
    "AggregateRow",
    "CSV_HEADER",
    "ExperimentConfig",
    "ExperimentResult",
    "ObjectiveSpec",
    "OptimizerSpec",
    "SeedResult",
    "aggregate",
    "config_from_dict",
    "emit_report",
    "load_config",
    "load_report",
    "make_optimizer",
    "prepare_objective",
    "run_experiment",
    "run_seed",
    "save_config",
]
