"""Hitting times, Kemeny's constant, commute times and resistance distance."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chain import (
    ChainModel,
    WeightedUndirectedGraph,
    default_tau,
    transition_from_laplacian_tau,
    transition_row_normalize,
)
from .errors import (
    DegenerateSizeError,
    DisconnectedGraphError,
    DimensionError,
    InvariantError,
    NotErgodicError,
)
from .forests import (
    ForestSequence,
    forest_recurrence,
    group_inverse_direct,
    group_inverse_forest,
    stationary_distribution,
    tree_weights,
    two_tree_matrix,
)
from .numerics import RationalMatrix, parse_rational


@dataclass(frozen=True)
class HittingResult:
    """Everything derived from one chain's forest sequence.

    ``M_classic`` counts return times on the diagonal (``1 / pi_j``);
    ``M_zero`` is the zero-diagonal variant. ``kemeny`` is ``None`` for a
    one-state chain.
    """

    sequence: ForestSequence
    q: tuple[Fraction, ...]
    total_q: Fraction
    pi: tuple[Fraction, ...]
    f: RationalMatrix
    group_inverse: RationalMatrix
    M_classic: RationalMatrix
    M_zero: RationalMatrix
    kemeny: Fraction | None
    commute: RationalMatrix
    warnings: tuple[str, ...] = field(default=())


def _check_positive(q):
    for j, x in enumerate(q):
        if x <= 0:
            raise NotErgodicError(f"no spanning tree converges to state {j + 1}")


def hitting_matrix_classic(q: Sequence[Fraction], total_q: Fraction, f: RationalMatrix) -> RationalMatrix:
    """``f_ij / q_j`` off the diagonal and ``total_q / q_j`` on it."""
    _check_positive(q)
    n = len(q)
    if f.shape != (n, n):
        raise DimensionError("f and q disagree in size")
    return RationalMatrix(
        [[(total_q if i == j else f[i, j]) / q[j] for j in range(n)] for i in range(n)]
    )


def hitting_matrix_zero_diag(q: Sequence[Fraction], f: RationalMatrix) -> RationalMatrix:
    """``f_ij / q_j``; zero on the diagonal because ``f_ii = 0``."""
    _check_positive(q)
    n = len(q)
    if f.shape != (n, n):
        raise DimensionError("f and q disagree in size")
    return RationalMatrix([[f[i, j] / q[j] for j in range(n)] for i in range(n)])


def hitting_matrix_from_group_inverse(
    G: RationalMatrix, pi: Sequence[Fraction], zero_diagonal: bool = True
) -> RationalMatrix:
    """Hitting times from the group inverse ``G`` of ``L = I - T``.

    Off the diagonal ``(G_jj - G_ij) / pi_j``; on it ``0`` or ``1 / pi_j``.
    """
    n = G.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Fraction(0) if zero_diagonal else 1 / pi[j])
            else:
                row.append((G[j, j] - G[i, j]) / pi[j])
        rows.append(row)
    return RationalMatrix(rows)


def kemeny_constant(seq: ForestSequence) -> Fraction:
    """``1 + sigma[n-2] / sigma[n-1]``."""
    if seq.n < 2:
        raise DegenerateSizeError("Kemeny's constant is not defined here for n = 1")
    if seq.d != 1:
        raise NotErgodicError(f"in-forest connectivity is {seq.d}")
    return 1 + seq.sigma[seq.n - 2] / seq.sigma[seq.n - 1]


def commute_matrix(M: RationalMatrix) -> RationalMatrix:
    """``M + M^T``."""
    if not M.is_square:
        raise DimensionError("commute times need a square matrix")
    return M + M.T


def first_step_residuals(T: RationalMatrix, M: RationalMatrix) -> list[tuple[int, int, Fraction]]:
    """Violations of ``m_ij = 1 + sum_{k != j} t_ik m_kj`` for ``i != j``.

    Returns 1-based ``(i, j, residual)`` triples; empty means every equation
    holds exactly.
    """
    n = T.n
    bad = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            rhs = 1 + sum((T[i, k] * M[k, j] for k in range(n) if k != j), Fraction(0))
            if rhs != M[i, j]:
                bad.append((i + 1, j + 1, M[i, j] - rhs))
    return bad


def analyze_chain(chain: ChainModel) -> HittingResult:
    """Run the forest pipeline on ``chain`` and derive all hitting quantities.

    Raises
    ------
    NotErgodicError
        For reducible chains.
    """
    if not chain.irreducible:
        raise NotErgodicError("chain is reducible; hitting times are not all finite")
    warnings = []
    seq = forest_recurrence(chain.L)
    q, total_q = tree_weights(seq)
    pi = stationary_distribution(q, total_q)
    n = chain.n
    G = group_inverse_forest(seq)
    if n == 1:
        f = RationalMatrix.zeros(1)
        kemeny = None
        warnings.append("one-state chain: Kemeny's constant is undefined")
    else:
        f = two_tree_matrix(seq)
        kemeny = kemeny_constant(seq)
    M_classic = hitting_matrix_classic(q, total_q, f)
    M_zero = hitting_matrix_zero_diag(q, f)
    if not chain.aperiodic and n > 1:
        warnings.append(
            f"chain is periodic (period {chain.period}); results are cross-checked "
            "against the first-step equations"
        )
        if first_step_residuals(chain.T, M_zero):
            raise InvariantError("hitting times fail the first-step equations")
    return HittingResult(
        sequence=seq,
        q=q,
        total_q=total_q,
        pi=pi,
        f=f,
        group_inverse=G,
        M_classic=M_classic,
        M_zero=M_zero,
        kemeny=kemeny,
        commute=commute_matrix(M_zero),
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class ResistanceResult:
    omega: RationalMatrix
    q_prime: Fraction
    f_prime: RationalMatrix


def _require_connected(G: WeightedUndirectedGraph):
    if not G.is_connected():
        raise DisconnectedGraphError("graph is disconnected; resistance is infinite")


def resistance_via_forests(G: WeightedUndirectedGraph) -> ResistanceResult:
    """Effective resistance ``f'_ij / q'`` from the doubled digraph's forests.

    The directed double has tree weight ``n q'`` and ``f_ij + f_ji = n f'_ij``.
    """
    _require_connected(G)
    n = G.n
    if n == 1:
        return ResistanceResult(RationalMatrix.zeros(1), Fraction(1), RationalMatrix.zeros(1))
    seq = forest_recurrence(G.laplacian())
    _, total_q = tree_weights(seq)
    f = two_tree_matrix(seq)
    q_prime = total_q / n
    f_prime = (f + f.T) * Fraction(1, n)
    return ResistanceResult(omega=f_prime * (1 / q_prime), q_prime=q_prime, f_prime=f_prime)


def resistance_via_group_inverse(G: WeightedUndirectedGraph) -> RationalMatrix:
    """``g_ii + g_jj - g_ij - g_ji`` with ``g`` the group inverse of the graph Laplacian."""
    _require_connected(G)
    n = G.n
    uniform = [Fraction(1, n)] * n
    g = group_inverse_direct(G.laplacian(), uniform)
    return RationalMatrix(
        [[g[i, i] + g[j, j] - g[i, j] - g[j, i] for j in range(n)] for i in range(n)]
    )


@dataclass(frozen=True)
class ScalingCheck:
    name: str
    factor: Fraction
    holds: bool
    witness: tuple[int, int] | None  # first 1-based pair with C != factor * omega


@dataclass(frozen=True)
class ScalingReport:
    omega: RationalMatrix
    tau: Fraction
    checks: tuple[ScalingCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)


def _compare(name, C, omega, factor):
    n = C.n
    for i in range(n):
        for j in range(n):
            if C[i, j] != factor * omega[i, j]:
                return ScalingCheck(name, factor, False, (i + 1, j + 1))
    return ScalingCheck(name, factor, True, None)


def verify_scaling_laws(G: WeightedUndirectedGraph, tau=None) -> ScalingReport:
    """Commute times versus resistance for both graph-to-chain constructions.

    ``C(T_tau) = (n / tau) * Omega`` and ``C(T_W) = (sum of W) * Omega``.
    A failed identity is reported, not raised.
    """
    omega = resistance_via_forests(G).omega
    tau_used = default_tau(G) if tau is None else parse_rational(tau)
    chain_tau = transition_from_laplacian_tau(G, tau_used)
    C_tau = analyze_chain(chain_tau).commute
    C_w = analyze_chain(transition_row_normalize(G)).commute
    checks = (
        _compare("laplacian-tau", C_tau, omega, G.n / tau_used),
        _compare("row-normalize", C_w, omega, G.total_weight()),
    )
    return ScalingReport(omega=omega, tau=tau_used, checks=checks)
