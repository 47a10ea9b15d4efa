"""Scikit-learn style front end.

The estimators take a whole matrix as ``X`` (a transition matrix or a
symmetric weight matrix) rather than a sample table, so they compose in a
:class:`~sklearn.pipeline.Pipeline`::

    Pipeline([("chain", ChainFromGraph()), ("hit", HittingTimes())]).fit(W)
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .chain import TAU_RULES, default_tau, transition_from_laplacian_tau, transition_row_normalize
from .errors import InvariantError, PreconditionError
from .hitting import (
    analyze_chain,
    first_step_residuals,
    resistance_via_forests,
    resistance_via_group_inverse,
)
from .metrics import analyze_metrics
from .numerics import parse_rational
from .validation import check_transition_matrix, check_weight_matrix

CONSTRUCTIONS = ("row-normalize", "laplacian-tau")


class ChainFromGraph(TransformerMixin, BaseEstimator):
    """Turn a symmetric weight matrix into a transition matrix.

    Parameters
    ----------
    construction : {"row-normalize", "laplacian-tau"}, default="row-normalize"
        ``diag(W 1)^-1 W`` or ``I - tau * L``.
    tau : rational or None, default=None
        Step size for ``laplacian-tau``. ``None`` derives it from the fitted
        graph with ``tau_rule``.
    tau_rule : str, default="max-degree"
        One of ``max-degree``, ``max-offdiag-degree``, ``n-1-max-weight``,
        ``n-max-weight``.
    """

    def __init__(self, construction="row-normalize", tau=None, tau_rule="max-degree"):
        self.construction = construction
        self.tau = tau
        self.tau_rule = tau_rule

    def fit(self, X, y=None):
        if self.construction not in CONSTRUCTIONS:
            raise PreconditionError(f"construction must be one of {CONSTRUCTIONS}")
        if self.tau_rule not in TAU_RULES:
            raise PreconditionError(f"tau_rule must be one of {TAU_RULES}")
        G = check_weight_matrix(X)
        self.n_vertices_ = G.n
        if self.construction == "laplacian-tau":
            self.tau_ = default_tau(G, self.tau_rule) if self.tau is None else parse_rational(self.tau)
        else:
            self.tau_ = None
        return self

    def transform(self, X):
        check_is_fitted(self, "n_vertices_")
        G = check_weight_matrix(X)
        if self.construction == "laplacian-tau":
            return transition_from_laplacian_tau(G, self.tau_).T
        return transition_row_normalize(G).T


class HittingTimes(BaseEstimator):
    """Forest-based hitting times of an irreducible chain.

    Parameters
    ----------
    first_step_check : bool, default=False
        Also verify the result against the first-step equations (always done
        for periodic chains).

    Attributes
    ----------
    chain_ : ChainModel
    sigma_ : tuple of Fraction
        Total in-forest weight per arc count.
    forest_layers_ : tuple of RationalMatrix
        The matrices ``Q_0 .. Q_{n-1}``.
    tree_weights_ : tuple of Fraction
    stationary_distribution_ : tuple of Fraction
    two_tree_weights_ : RationalMatrix
    group_inverse_ : RationalMatrix
    hitting_times_ : RationalMatrix
        Zero-diagonal hitting times.
    hitting_times_classic_ : RationalMatrix
        Diagonal holds mean return times.
    kemeny_constant_ : Fraction or None
    commute_times_ : RationalMatrix
    warnings_ : tuple of str
    """

    def __init__(self, first_step_check=False):
        self.first_step_check = first_step_check

    def fit(self, X, y=None):
        chain = check_transition_matrix(X)
        res = analyze_chain(chain)
        if self.first_step_check and first_step_residuals(chain.T, res.M_zero):
            raise InvariantError("hitting times fail the first-step equations")
        self.chain_ = chain
        self.result_ = res
        self.sigma_ = res.sequence.sigma
        self.forest_layers_ = res.sequence.Q
        self.tree_weights_ = res.q
        self.stationary_distribution_ = res.pi
        self.two_tree_weights_ = res.f
        self.group_inverse_ = res.group_inverse
        self.hitting_times_ = res.M_zero
        self.hitting_times_classic_ = res.M_classic
        self.kemeny_constant_ = res.kemeny
        self.commute_times_ = res.commute
        self.warnings_ = res.warnings
        return self

    def predict(self, pairs, classic=False):
        """Hitting times for 1-based ``(source, target)`` pairs."""
        check_is_fitted(self, "hitting_times_")
        M = self.hitting_times_classic_ if classic else self.hitting_times_
        n = M.n
        out = []
        for i, j in pairs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexError(f"pair ({i}, {j}) out of range 1..{n}")
            out.append(M[i - 1, j - 1])
        return out


class HittingMetricStructure(BaseEstimator):
    """Metric analysis of the hitting-time quasi-metric of a chain.

    ``report_`` holds every verdict; the convenience attributes are ``None``
    when the quasi-metric is not weightable.
    """

    def __init__(self, reference_vertex=1):
        self.reference_vertex = reference_vertex

    def fit(self, X, y=None):
        chain = check_transition_matrix(X)
        res = analyze_chain(chain)
        report = analyze_metrics(res.M_zero, chain.digraph, self.reference_vertex)
        self.hitting_times_ = res.M_zero
        self.report_ = report
        self.weightable_ = report.weightable
        self.weights_ = report.weight_u
        self.partial_metric_ = report.partial_P
        self.strong_shift_ = report.strong_shift
        self.strong_weights_ = report.u_strong
        self.extended_metric_ = report.extended_Cprime
        return self


class EffectiveResistance(BaseEstimator):
    """Resistance distance on a connected weighted undirected graph.

    Parameters
    ----------
    route : {"forest", "group-inverse"}, default="forest"
    """

    def __init__(self, route="forest"):
        self.route = route

    def fit(self, X, y=None):
        G = check_weight_matrix(X)
        if self.route == "forest":
            res = resistance_via_forests(G)
            self.resistance_ = res.omega
            self.spanning_tree_weight_ = res.q_prime
            self.two_forest_weights_ = res.f_prime
        elif self.route == "group-inverse":
            self.resistance_ = resistance_via_group_inverse(G)
        else:
            raise PreconditionError("route must be 'forest' or 'group-inverse'")
        return self

