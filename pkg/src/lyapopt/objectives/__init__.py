from .activations import ACTIVATIONS, gelu_approx, sigmoid
from .analytic import (
    MonomialObjective,
    QuadraticObjective,
    RosenbrockObjective,
    make_quadratic,
)
from .base import (
    InvalidObjectiveError,
    Objective,
    ObjectiveOverflowError,
    central_difference_gradient,
    value_and_grad,
)
from .mlp import MLPObjective, param_count, xavier_init

__all__ = [
    "ACTIVATIONS",
    "InvalidObjectiveError",
    "MLPObjective",
    "MonomialObjective",
    "Objective",
    "ObjectiveOverflowError",
    "QuadraticObjective",
    "RosenbrockObjective",
    "central_difference_gradient",
    "gelu_approx",
    "make_quadratic",
    "param_count",
    "sigmoid",
    "value_and_grad",
    "xavier_init",
]
