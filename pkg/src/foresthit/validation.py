"""Input validation helpers shared by the estimators.

Anything matrix-shaped is accepted (nested lists, numpy integer or object
arrays, DataFrames, RationalMatrix) as long as every entry is exact: an
integer, a Fraction, or a rational string. Float input is refused.
"""

from __future__ import annotations

from .chain import ChainModel, WeightedUndirectedGraph
from .errors import DimensionError, RationalParseError
from .numerics import RationalMatrix


def check_rational_matrix(X, name: str = "X", square: bool = True) -> RationalMatrix:
    if isinstance(X, RationalMatrix):
        M = X
    else:
        if hasattr(X, "to_numpy"):
            X = X.to_numpy()
        dtype = getattr(X, "dtype", None)
        if dtype is not None and dtype.kind == "f":
            raise RationalParseError(
                f"{name} has floating dtype {dtype}; pass integers, Fractions or strings"
            )
        if hasattr(X, "tolist"):
            X = X.tolist()
        try:
            M = RationalMatrix(X)
        except TypeError:
            raise DimensionError(f"{name} must be a 2-D array-like") from None
    if M.n == 0:
        raise DimensionError(f"{name} is empty")
    if square and not M.is_square:
        raise DimensionError(f"{name} must be square, got shape {M.shape}")
    return M


def check_transition_matrix(X, name: str = "X") -> ChainModel:
    return ChainModel(check_rational_matrix(X, name))


def check_weight_matrix(X, name: str = "X") -> WeightedUndirectedGraph:
    if isinstance(X, WeightedUndirectedGraph):
        return X
    return WeightedUndirectedGraph.from_matrix(check_rational_matrix(X, name))
