"""Exact hitting times, Kemeny's constant and resistance distance from
spanning-forest weights of a Markov chain's digraph."""

from .chain import (
    ChainModel,
    WeightedDigraph,
    WeightedUndirectedGraph,
    load_chain,
    transition_from_laplacian_tau,
    transition_row_normalize,
)
from .errors import ForestHitError, NotErgodicError, NotWeightableError
from .estimators import ChainFromGraph, EffectiveResistance, HittingMetricStructure, HittingTimes
from .forests import ForestSequence, forest_recurrence
from .hitting import analyze_chain, resistance_via_forests, resistance_via_group_inverse
from .metrics import analyze_metrics
from .numerics import RationalMatrix, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "ChainFromGraph",
    "ChainModel",
    "EffectiveResistance",
    "ForestHitError",
    "ForestSequence",
    "HittingMetricStructure",
    "HittingTimes",
    "NotErgodicError",
    "NotWeightableError",
    "RationalMatrix",
    "WeightedDigraph",
    "WeightedUndirectedGraph",
    "analyze_chain",
    "analyze_metrics",
    "forest_recurrence",
    "format_rational",
    "load_chain",
    "parse_rational",
    "resistance_via_forests",
    "resistance_via_group_inverse",
    "transition_from_laplacian_tau",
    "transition_row_normalize",
]
