from .loading import (
    DataError,
    Dataset,
    MinMaxRecord,
    StandardizeRecord,
    load_csv,
    write_csv,
)
from .preprocess import label_encode, minmax_normalize, split, standardize
from .synthetic import make_classification_like, make_regression_like

__all__ = [
    "DataError",
    "Dataset",
    "MinMaxRecord",
    "StandardizeRecord",
    "label_encode",
    "load_csv",
    "make_classification_like",
    "make_regression_like",
    "minmax_normalize",
    "split",
    "standardize",
    "write_csv",
]
