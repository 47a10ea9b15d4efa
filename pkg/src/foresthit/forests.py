"""Spanning in-forest weights via the matrix-forest recurrence.

``Q[k][i, j]`` is the total weight of in-forests with ``k`` arcs in which
vertex ``i`` lies in the tree converging to ``j``; ``sigma[k]`` is the total
weight of all such forests. Both come out of

    sigma[k+1] = tr(L Q[k]) / (k + 1)
    Q[k+1]     = -L Q[k] + sigma[k+1] I

started from ``sigma[0] = 1``, ``Q[0] = I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateSizeError,
    DimensionError,
    InvariantError,
    NotErgodicError,
    PreconditionError,
    SingularMatrixError,
)
from .numerics import RationalMatrix, mat_inverse


@dataclass(frozen=True)
class ForestSequence:
    n: int
    sigma: tuple[Fraction, ...]
    Q: tuple[RationalMatrix, ...]
    d: int

    def P(self, k: int) -> RationalMatrix:
        """Normalised layer ``Q[k] / sigma[k]``."""
        if self.sigma[k] == 0:
            raise ZeroDivisionError(f"sigma[{k}] = 0")
        return self.Q[k] * (1 / self.sigma[k])


def check_laplacian(L: RationalMatrix) -> None:
    if not L.is_square:
        raise DimensionError(f"Laplacian must be square, got {L.shape}")
    for i, row in enumerate(L):
        if sum(row, Fraction(0)) != 0:
            raise PreconditionError(f"row {i + 1} of the Laplacian does not sum to 0")
        for j, x in enumerate(row):
            if i != j and x > 0:
                raise PreconditionError(
                    f"positive off-diagonal Laplacian entry at ({i + 1}, {j + 1})"
                )


def forest_recurrence(L: RationalMatrix) -> ForestSequence:
    """Run the recurrence for ``k = 0 .. n-1`` and keep every layer."""
    check_laplacian(L)
    n = L.n
    eye = RationalMatrix.identity(n)
    sigma = [Fraction(1)]
    Q = [eye]
    for k in range(n - 1):
        LQ = L @ Q[k]
        s = LQ.trace() / (k + 1)
        sigma.append(s)
        Q.append(eye * s - LQ)
    last = max(k for k, s in enumerate(sigma) if s != 0)
    return ForestSequence(n=n, sigma=tuple(sigma), Q=tuple(Q), d=n - last)


def tree_weights(seq: ForestSequence) -> tuple[tuple[Fraction, ...], Fraction]:
    """Spanning-tree weights ``q_j`` (diagonal of the last layer) and their sum.

    Raises
    ------
    NotErgodicError
        If the digraph has no spanning converging tree (``d > 1``).
    """
    if seq.d != 1:
        raise NotErgodicError(
            f"in-forest connectivity is {seq.d}; the chain is not irreducible"
        )
    top = seq.Q[seq.n - 1]
    q = top.diagonal()
    return q, seq.sigma[seq.n - 1]


def two_tree_matrix(seq: ForestSequence) -> RationalMatrix:
    """``f[i, j] = Q[n-2][j, j] - Q[n-2][i, j]``: weight of 2-tree in-forests
    with ``i`` in one tree and the other tree converging to ``j``."""
    if seq.n < 2:
        raise DegenerateSizeError("2-tree forests need at least two vertices")
    if seq.d != 1:
        raise NotErgodicError(f"in-forest connectivity is {seq.d}")
    Qs = seq.Q[seq.n - 2]
    n = seq.n
    return RationalMatrix(
        [[Qs[j, j] - Qs[i, j] for j in range(n)] for i in range(n)]
    )


def stationary_distribution(q: Sequence[Fraction], total_q: Fraction) -> tuple[Fraction, ...]:
    """Markov chain tree theorem: ``pi_j = q_j / sum(q)``."""
    if total_q <= 0:
        raise NotErgodicError("total spanning-tree weight is zero")
    return tuple(Fraction(x) / total_q for x in q)


def group_inverse_forest(seq: ForestSequence) -> RationalMatrix:
    """Group inverse of the Laplacian from the last two nonzero forest layers.

    ``L# = (sigma[m-1] / sigma[m]) * (P[m-1] - P[m])`` with ``m = n - d``.
    Valid for any in-forest connectivity ``d``.
    """
    m = seq.n - seq.d
    if m == 0:
        # no arcs at all: L = 0 and its group inverse is 0
        return RationalMatrix.zeros(seq.n)
    if seq.sigma[m] == 0:
        raise InvariantError(f"sigma[{m}] vanished although d = {seq.d}")
    return (seq.P(m - 1) - seq.P(m)) * (seq.sigma[m - 1] / seq.sigma[m])


def group_inverse_direct(L: RationalMatrix, pi: Sequence[Fraction]) -> RationalMatrix:
    """``(L + 1 pi)^-1 - 1 pi``, the closed form for an irreducible chain."""
    n = L.n
    if len(pi) != n:
        raise DimensionError("pi has wrong length")
    one_pi = RationalMatrix.outer([1] * n, pi)
    try:
        inv = mat_inverse(L + one_pi)
    except SingularMatrixError as exc:
        raise NotErgodicError(f"L + 1 pi is singular; chain is not irreducible ({exc})") from None
    return inv - one_pi


def group_inverse_axioms(L: RationalMatrix, G: RationalMatrix) -> dict[str, bool]:
    """The three defining identities of the group inverse, checked exactly."""
    LG = L @ G
    return {
        "LGL=L": LG @ L == L,
        "GLG=G": G @ L @ G == G,
        "LG=GL": LG == G @ L,
    }
