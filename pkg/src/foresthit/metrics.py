"""Metric structures built on hitting times.

Every check returns a :class:`Verdict`; a false verdict carries the
lexicographically smallest 1-based index tuple that breaks the property,
together with the exact values involved. Mathematical falsehood is a result,
never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .chain import WeightedDigraph, reachable_avoiding
from .errors import InvariantError, NotWeightableError, PreconditionError
from .hitting import commute_matrix
from .numerics import RationalMatrix


@dataclass(frozen=True)
class Verdict:
    holds: bool
    axiom: str | None = None
    witness: tuple[int, ...] | None = None
    detail: str | None = None

    def __bool__(self):
        return self.holds


OK = Verdict(True)


def _fail(axiom, witness, detail):
    return Verdict(False, axiom, tuple(i + 1 for i in witness), detail)


def check_quasi_metric(D: RationalMatrix) -> Verdict:
    """Nonnegativity, ``D(x, y) = 0 iff x = y``, and the oriented triangle inequality."""
    n = D.n
    for i, j in product(range(n), repeat=2):
        if D[i, j] < 0:
            return _fail("nonnegativity", (i, j), f"D = {D[i, j]}")
    for i, j in product(range(n), repeat=2):
        if (D[i, j] == 0) != (i == j):
            return _fail("identity", (i, j), f"D = {D[i, j]}")
    for i, k, j in product(range(n), repeat=3):
        if D[i, j] > D[i, k] + D[k, j]:
            return _fail(
                "triangle", (i, k, j), f"D(i,j) = {D[i, j]} > {D[i, k]} + {D[k, j]}"
            )
    return OK


def check_metric(D: RationalMatrix) -> Verdict:
    """Quasi-metric axioms plus symmetry."""
    n = D.n
    for i, j in product(range(n), repeat=2):
        if D[i, j] != D[j, i]:
            return _fail("symmetry", (i, j), f"{D[i, j]} != {D[j, i]}")
    return check_quasi_metric(D)


@dataclass(frozen=True)
class CutpointEntry:
    """One ordered triple ``(i, k, j)``, 1-based."""

    triple: tuple[int, int, int]
    lhs: Fraction  # m(i,k) + m(k,j)
    rhs: Fraction  # m(i,j)
    equality: bool
    separator: bool

    @property
    def consistent(self) -> bool:
        return self.equality == self.separator


@dataclass(frozen=True)
class CutpointReport:
    entries: tuple[CutpointEntry, ...]

    @property
    def consistent(self) -> bool:
        return all(e.consistent for e in self.entries)

    @property
    def first_inconsistency(self) -> CutpointEntry | None:
        return next((e for e in self.entries if not e.consistent), None)

    def lookup(self, i: int, k: int, j: int) -> CutpointEntry:
        for e in self.entries:
            if e.triple == (i, k, j):
                return e
        raise KeyError((i, k, j))


def cutpoint_additivity_report(M: RationalMatrix, digraph: WeightedDigraph) -> CutpointReport:
    """Compare ``m(i,k) + m(k,j) = m(i,j)`` with "``k`` separates ``i`` from ``j``"
    for every ordered triple of distinct vertices."""
    n = M.n
    entries = []
    for i, k, j in product(range(n), repeat=3):
        if len({i, k, j}) < 3:
            continue
        lhs = M[i, k] + M[k, j]
        entries.append(
            CutpointEntry(
                triple=(i + 1, k + 1, j + 1),
                lhs=lhs,
                rhs=M[i, j],
                equality=lhs == M[i, j],
                separator=not reachable_avoiding(digraph, i, j, k),
            )
        )
    return CutpointReport(tuple(entries))


def cyclic_tour_check(M: RationalMatrix) -> Verdict:
    """``m(i,j) + m(j,k) + m(k,i) == m(i,k) + m(k,j) + m(j,i)`` for all triples."""
    n = M.n
    for i, j, k in product(range(n), repeat=3):
        lhs = M[i, j] + M[j, k] + M[k, i]
        rhs = M[i, k] + M[k, j] + M[j, i]
        if lhs != rhs:
            return _fail("cyclic tour", (i, j, k), f"{lhs} != {rhs}")
    return OK


def weight_function(M: RationalMatrix, reference: int = 1) -> tuple[Fraction, ...]:
    """Weights ``u`` with ``m(i,j) + u_i = m(j,i) + u_j``, shifted so ``min u = 0``.

    ``reference`` is the 1-based vertex ``k`` in ``u_i = m(k,i) - m(i,k)``;
    after the shift the result does not depend on it.

    Raises
    ------
    NotWeightableError
        When the cyclic tour property fails.
    """
    verdict = cyclic_tour_check(M)
    if not verdict:
        i, j, k = (x - 1 for x in verdict.witness)
        raise NotWeightableError(
            verdict.witness,
            M[i, j] + M[j, k] + M[k, i],
            M[i, k] + M[k, j] + M[j, i],
        )
    k = reference - 1
    if not 0 <= k < M.n:
        raise PreconditionError(f"reference vertex {reference} out of range 1..{M.n}")
    raw = [M[k, i] - M[i, k] for i in range(M.n)]
    low = min(raw)
    return tuple(x - low for x in raw)


def check_partial_metric(P: RationalMatrix) -> Verdict:
    """Nonnegativity, small self-distances, separation, symmetry, sharp triangle."""
    n = P.n
    for i, j in product(range(n), repeat=2):
        if P[i, j] < 0:
            return _fail("nonnegativity", (i, j), f"p = {P[i, j]}")
    for i, j in product(range(n), repeat=2):
        if P[i, j] < P[i, i]:
            return _fail("small self-distances", (i, j), f"{P[i, j]} < {P[i, i]}")
    for i, j in product(range(n), repeat=2):
        if i != j and P[i, i] == P[j, j] == P[i, j]:
            return _fail("separation", (i, j), f"p(i,i) = p(j,j) = p(i,j) = {P[i, j]}")
    for i, j in product(range(n), repeat=2):
        if P[i, j] != P[j, i]:
            return _fail("symmetry", (i, j), f"{P[i, j]} != {P[j, i]}")
    for i, k, j in product(range(n), repeat=3):
        if P[i, j] > P[i, k] + P[k, j] - P[k, k]:
            return _fail("sharp triangle", (i, k, j), f"{P[i, j]} > {P[i, k] + P[k, j] - P[k, k]}")
    return OK


def partial_metric(C: RationalMatrix, u: Sequence[Fraction]) -> RationalMatrix:
    """``p(i,j) = (c(i,j) + u_i + u_j) / 2``, verified to be a partial metric.

    Raises
    ------
    InvariantError
        If the result breaks an axiom; impossible for a weightable ``m``.
    """
    n = C.n
    P = RationalMatrix([[(C[i, j] + u[i] + u[j]) / 2 for j in range(n)] for i in range(n)])
    verdict = check_partial_metric(P)
    if not verdict:
        raise InvariantError(f"partial metric axiom '{verdict.axiom}' fails at {verdict.witness}")
    return P


def triangle_identity_check(M: RationalMatrix, C: RationalMatrix, P: RationalMatrix) -> Verdict:
    """The three triangle defects agree for every triple ``(i, k, j)``::

        (c(i,k) + c(k,j) - c(i,j)) / 2
          = p(i,k) + p(k,j) - p(i,j) - p(k,k)
          = m(i,k) + m(k,j) - m(i,j)
    """
    n = M.n
    for i, k, j in product(range(n), repeat=3):
        c_def = (C[i, k] + C[k, j] - C[i, j]) / 2
        p_def = P[i, k] + P[k, j] - P[i, j] - P[k, k]
        m_def = M[i, k] + M[k, j] - M[i, j]
        if not c_def == p_def == m_def:
            return _fail("triangle identity", (i, k, j), f"{c_def}, {p_def}, {m_def}")
    return OK


def strong_shift(M: RationalMatrix, u: Sequence[Fraction]) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Smallest ``s >= 0`` with ``m(i,j) <= u_j + s`` everywhere, and ``u + s``."""
    n = M.n
    s = max([Fraction(0)] + [M[i, j] - u[j] for i in range(n) for j in range(n)])
    return s, tuple(x + s for x in u)


def strong_equivalence_check(M: RationalMatrix, u: Sequence[Fraction]) -> Verdict:
    """Per pair, ``m <= u_j``, ``c <= u_i + u_j`` and ``p <= p_ii + p_jj`` agree."""
    n = M.n
    C = commute_matrix(M)
    for i, j in product(range(n), repeat=2):
        p_ij = (C[i, j] + u[i] + u[j]) / 2
        flags = (M[i, j] <= u[j], C[i, j] <= u[i] + u[j], p_ij <= u[i] + u[j])
        if len(set(flags)) != 1:
            return _fail("strong equivalence", (i, j), f"flags {flags}")
    return OK


def is_strong(M: RationalMatrix, u: Sequence[Fraction]) -> bool:
    n = M.n
    return all(M[i, j] <= u[j] for i in range(n) for j in range(n))


def extended_metric(C: RationalMatrix, u: Sequence[Fraction]) -> tuple[RationalMatrix, Verdict]:
    """Add a point ``0`` at distance ``u_i`` from each vertex ``i``.

    Returns the ``(n+1) x (n+1)`` matrix and its metric verdict. Witness
    indices are 0-based here because the extra point is labelled ``0``.
    """
    n = C.n
    rows = [[Fraction(0)] + list(u)]
    for i in range(n):
        rows.append([u[i]] + list(C[i]))
    Cp = RationalMatrix(rows)
    verdict = check_metric(Cp)
    if not verdict:
        verdict = Verdict(
            False, verdict.axiom, tuple(x - 1 for x in verdict.witness), verdict.detail
        )
    return Cp, verdict


@dataclass(frozen=True)
class MetricReport:
    """Outcome of the full metric analysis of one hitting-time matrix.

    The optional fields are ``None`` when ``m`` is not weightable.
    """

    quasi_metric: Verdict
    commute: RationalMatrix
    commute_metric: Verdict
    cutpoint: CutpointReport | None
    cyclic_tour: Verdict
    weight_u: tuple[Fraction, ...] | None = None
    partial_P: RationalMatrix | None = None
    triangle_identity: Verdict | None = None
    strong_shift: Fraction | None = None
    u_strong: tuple[Fraction, ...] | None = None
    strong_equivalence: Verdict | None = None
    extended_Cprime: RationalMatrix | None = None
    extended_metric: Verdict | None = None

    @property
    def is_quasi_metric(self) -> bool:
        return self.quasi_metric.holds

    @property
    def weightable(self) -> bool:
        return self.cyclic_tour.holds


def analyze_metrics(
    M: RationalMatrix, digraph: WeightedDigraph | None = None, reference: int = 1
) -> MetricReport:
    """Quasi-metric, cutpoint, cyclic-tour and (when weightable) the
    weighted/partial/strong/extended structures for zero-diagonal ``M``."""
    C = commute_matrix(M)
    tour = cyclic_tour_check(M)
    base = dict(
        quasi_metric=check_quasi_metric(M),
        commute=C,
        commute_metric=check_metric(C),
        cutpoint=cutpoint_additivity_report(M, digraph) if digraph is not None else None,
        cyclic_tour=tour,
    )
    if not tour:
        return MetricReport(**base)
    u = weight_function(M, reference)
    P = partial_metric(C, u)
    s, u_strong = strong_shift(M, u)
    Cp, ext = extended_metric(C, u_strong)
    return MetricReport(
        **base,
        weight_u=u,
        partial_P=P,
        triangle_identity=triangle_identity_check(M, C, P),
        strong_shift=s,
        u_strong=u_strong,
        strong_equivalence=strong_equivalence_check(M, u),
        extended_Cprime=Cp,
        extended_metric=ext,
    )
