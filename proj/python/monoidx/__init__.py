"""Monotonicity indices, orderings, signed-measure indices and weighted premiums."""

from ._core import (
    DegenerateWeight,
    Error,
    InvalidInput,
    InvalidParameter,
    UndefinedComparison,
    UndefinedIndex,
    UndefinedRatio,
    compare,
    gain_loss,
    indices,
    loading,
    measure,
    premium,
    quantile,
    survival,
    weight_catalog,
)

__all__ = [
    "DegenerateWeight",
    "Error",
    "InvalidInput",
    "InvalidParameter",
    "UndefinedComparison",
    "UndefinedIndex",
    "UndefinedRatio",
    "compare",
    "gain_loss",
    "indices",
    "loading",
    "measure",
    "premium",
    "quantile",
    "survival",
    "weight_catalog",
]
