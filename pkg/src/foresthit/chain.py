"""Chains, their digraphs, and the two graph-to-chain constructions.

Vertices are 0-based internally; everything user-facing (reports, witnesses,
input documents) is 1-based.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    ChainValidationError,
    DimensionError,
    DisconnectedGraphError,
    PreconditionError,
)
from .numerics import RationalMatrix, parse_rational

TAU_RULES = ("max-degree", "max-offdiag-degree", "n-1-max-weight", "n-max-weight")


@dataclass(frozen=True)
class WeightedDigraph:
    """Loopless digraph; ``arcs`` holds ``(tail, head, weight)`` with 0-based ends."""

    n: int
    arcs: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        seen = set()
        for t, h, w in self.arcs:
            if t == h:
                raise ChainValidationError(f"loop at vertex {t + 1}")
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise ChainValidationError(f"arc ({t + 1}, {h + 1}) out of range")
            if w <= 0:
                raise ChainValidationError(f"arc ({t + 1}, {h + 1}) has weight {w} <= 0")
            if (t, h) in seen:
                raise ChainValidationError(f"duplicate arc ({t + 1}, {h + 1})")
            seen.add((t, h))

    @classmethod
    def from_matrix(cls, w: RationalMatrix) -> WeightedDigraph:
        """Off-diagonal positive support of ``w``; the diagonal is ignored."""
        arcs = tuple(
            (i, j, w[i, j]) for i in range(w.n) for j in range(w.n) if i != j and w[i, j] > 0
        )
        return cls(w.n, arcs)

    def out_neighbors(self) -> list[list[tuple[int, Fraction]]]:
        adj = [[] for _ in range(self.n)]
        for t, h, w in self.arcs:
            adj[t].append((h, w))
        return adj

    def weight_matrix(self) -> RationalMatrix:
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for t, h, w in self.arcs:
            rows[t][h] = w
        return RationalMatrix(rows)

    def laplacian(self) -> RationalMatrix:
        return laplacian_of_weights(self.weight_matrix())


@dataclass(frozen=True)
class WeightedUndirectedGraph:
    """Simple undirected graph; ``edges`` holds ``(u, v, weight)`` with ``u < v``."""

    n: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        seen = set()
        for u, v, w in self.edges:
            if u == v:
                raise ChainValidationError(f"loop at vertex {u + 1}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ChainValidationError(f"edge {{{u + 1}, {v + 1}}} out of range")
            if w <= 0:
                raise ChainValidationError(f"edge {{{u + 1}, {v + 1}}} has weight {w} <= 0")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ChainValidationError(f"duplicate edge {{{u + 1}, {v + 1}}}")
            seen.add(key)

    @classmethod
    def from_edges(cls, n: int, edges) -> WeightedUndirectedGraph:
        """Build from ``(u, v, w)`` triples with 0-based ends (any order)."""
        norm = tuple(
            (min(u, v), max(u, v), parse_rational(w)) for u, v, w in edges
        )
        return cls(n, norm)

    @classmethod
    def from_matrix(cls, w: RationalMatrix) -> WeightedUndirectedGraph:
        if not w.is_symmetric():
            raise ChainValidationError("weight matrix of an undirected graph must be symmetric")
        if any(x != 0 for x in w.diagonal()):
            raise ChainValidationError("undirected graph must be loopless")
        if any(x < 0 for row in w for x in row):
            raise ChainValidationError("negative edge weight")
        return cls(
            w.n,
            tuple((i, j, w[i, j]) for i in range(w.n) for j in range(i + 1, w.n) if w[i, j] > 0),
        )

    def weight_matrix(self) -> RationalMatrix:
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for u, v, w in self.edges:
            rows[u][v] = w
            rows[v][u] = w
        return RationalMatrix(rows)

    def laplacian(self) -> RationalMatrix:
        return laplacian_of_weights(self.weight_matrix())

    def doubled(self) -> WeightedDigraph:
        """Directed version: each edge becomes two opposite arcs of equal weight."""
        arcs = []
        for u, v, w in self.edges:
            arcs.append((u, v, w))
            arcs.append((v, u, w))
        return WeightedDigraph(self.n, tuple(sorted(arcs)))

    def is_connected(self) -> bool:
        return is_strongly_connected(self.doubled())

    def total_weight(self) -> Fraction:
        """Sum of all entries of the symmetric weight matrix (each edge twice)."""
        return 2 * sum((w for _, _, w in self.edges), Fraction(0))


@dataclass(frozen=True)
class ChainModel:
    """Validated transition matrix with its Laplacian and loopless digraph."""

    T: RationalMatrix
    L: RationalMatrix = field(init=False)
    digraph: WeightedDigraph = field(init=False)
    irreducible: bool = field(init=False)
    aperiodic: bool = field(init=False)

    def __post_init__(self):
        validate_stochastic(self.T)
        object.__setattr__(self, "L", laplacian_of_transition(self.T))
        dg = WeightedDigraph.from_matrix(self.T)
        object.__setattr__(self, "digraph", dg)
        irr = is_strongly_connected(dg)
        object.__setattr__(self, "irreducible", irr)
        # self-loops count for periodicity even though they are not arcs
        loops = [i for i in range(self.n) if self.T[i, i] > 0]
        object.__setattr__(self, "aperiodic", irr and period(dg, loops=loops) == 1)

    @property
    def n(self) -> int:
        return self.T.n

    @property
    def period(self) -> int | None:
        if not self.irreducible:
            return None
        return period(self.digraph, loops=[i for i in range(self.n) if self.T[i, i] > 0])


def validate_stochastic(T: RationalMatrix) -> None:
    if T.n == 0:
        raise ChainValidationError("chain must have at least one state")
    if not T.is_square:
        raise DimensionError(f"transition matrix must be square, got {T.shape}")
    for i, row in enumerate(T):
        for j, x in enumerate(row):
            if x < 0:
                raise ChainValidationError(f"negative entry t[{i + 1},{j + 1}] = {x}")
        s = sum(row, Fraction(0))
        if s != 1:
            raise ChainValidationError(f"row {i + 1} sums to {s}, not 1")


def laplacian_of_weights(w: RationalMatrix) -> RationalMatrix:
    """``diag(W 1) - W`` with loops (diagonal of W) cancelling out."""
    sums = w.row_sums()
    return RationalMatrix.diag(sums) - w


def laplacian_of_transition(T: RationalMatrix) -> RationalMatrix:
    """``I - T``. For stochastic T this equals the digraph Laplacian."""
    if not T.is_square:
        raise DimensionError(f"transition matrix must be square, got {T.shape}")
    return RationalMatrix.identity(T.n) - T


def default_tau(G: WeightedUndirectedGraph, rule: str = "max-degree") -> Fraction:
    """Step size for ``T = I - tau * L``.

    ``max-degree`` is ``1 / max_i sum_j w_ij``; the alternatives are the
    variants that normalise by the off-diagonal degree or by the heaviest edge.
    """
    if rule not in TAU_RULES:
        raise PreconditionError(f"unknown tau rule {rule!r}; choose from {TAU_RULES}")
    w = G.weight_matrix()
    if rule in ("max-degree", "max-offdiag-degree"):
        # loopless graphs: the two degree rules coincide
        denom = max(w.row_sums(), default=Fraction(0))
    else:
        wmax = max((e[2] for e in G.edges), default=Fraction(0))
        denom = (G.n - 1 if rule == "n-1-max-weight" else G.n) * wmax
    if denom == 0:
        raise DisconnectedGraphError("graph has no edges; tau is undefined")
    return 1 / Fraction(denom)


def transition_from_laplacian_tau(G: WeightedUndirectedGraph, tau=None) -> ChainModel:
    """Chain ``T = I - tau * L`` on an undirected graph.

    ``tau`` must lie in ``(0, 1 / max_i sum_j w_ij]``; ``None`` picks the
    upper end.
    """
    w = G.weight_matrix()
    max_deg = max(w.row_sums(), default=Fraction(0))
    if tau is None:
        tau = default_tau(G)
    tau = parse_rational(tau)
    if tau <= 0 or (max_deg > 0 and tau * max_deg > 1):
        raise PreconditionError(
            f"tau = {tau} outside (0, {1 / max_deg if max_deg else 'inf'}]"
        )
    T = RationalMatrix.identity(G.n) - G.laplacian() * tau
    return ChainModel(T)


def transition_row_normalize(G) -> ChainModel:
    """Chain ``T = diag(W 1)^-1 W`` for a graph or a nonnegative weight matrix."""
    if isinstance(G, (WeightedUndirectedGraph, WeightedDigraph)):
        w = G.weight_matrix()
    else:
        w = G if isinstance(G, RationalMatrix) else RationalMatrix(G)
    if not w.is_square:
        raise DimensionError(f"weight matrix must be square, got {w.shape}")
    if any(x < 0 for row in w for x in row):
        raise ChainValidationError("negative weight")
    rows = []
    for i, row in enumerate(w):
        s = sum(row, Fraction(0))
        if s == 0:
            raise DisconnectedGraphError(f"vertex {i + 1} is isolated (zero row sum)")
        rows.append([x / s for x in row])
    return ChainModel(RationalMatrix(rows))


def _reachable(adj: Sequence[Sequence[int]], start: int, removed: int | None = None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u != removed and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def _adjacency(dg: WeightedDigraph, reverse: bool = False) -> list[list[int]]:
    adj = [[] for _ in range(dg.n)]
    for t, h, _ in dg.arcs:
        if reverse:
            adj[h].append(t)
        else:
            adj[t].append(h)
    return adj


def is_strongly_connected(dg: WeightedDigraph) -> bool:
    """Forward and backward search from vertex 0 both reach everything."""
    if dg.n == 0:
        return False
    return (
        len(_reachable(_adjacency(dg), 0)) == dg.n
        and len(_reachable(_adjacency(dg, reverse=True), 0)) == dg.n
    )


def reachable_avoiding(dg: WeightedDigraph, source: int, target: int, avoid: int) -> bool:
    """Is ``target`` reachable from ``source`` in ``dg`` with vertex ``avoid`` deleted."""
    return target in _reachable(_adjacency(dg), source, removed=avoid)


def period(dg: WeightedDigraph, loops: Sequence[int] = ()) -> int:
    """Period of a strongly connected digraph.

    BFS levels from vertex 0; the period is the gcd of
    ``level[t] + 1 - level[h]`` over all arcs, which equals the gcd of the
    lengths of closed walks through vertex 0. ``loops`` adds cycles of
    length one.
    """
    if not is_strongly_connected(dg):
        raise ChainValidationError("period is defined only for strongly connected digraphs")
    if dg.n == 1:
        return 1 if loops else 0
    adj = _adjacency(dg)
    level = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in level:
                level[u] = level[v] + 1
                queue.append(u)
    g = 1 if loops else 0
    for t, h, _ in dg.arcs:
        g = math.gcd(g, level[t] + 1 - level[h])
    return g


def is_aperiodic(dg: WeightedDigraph) -> bool:
    return is_strongly_connected(dg) and period(dg) == 1


def load_graph(document: dict) -> WeightedUndirectedGraph | WeightedDigraph:
    """Graph part of an input document (``edges`` or ``arcs``, 1-based)."""
    n = _doc_n(document)
    if "edges" in document:
        triples = _read_triples(document["edges"], n, "edges")
        return WeightedUndirectedGraph.from_edges(n, triples)
    if "arcs" in document:
        triples = _read_triples(document["arcs"], n, "arcs")
        return WeightedDigraph(n, tuple(sorted(triples)))
    raise ChainValidationError("document has neither 'edges' nor 'arcs'")


def load_chain(document: dict, tau=None, tau_rule: str = "max-degree") -> ChainModel:
    """Build a validated chain from a parsed input document.

    Accepted shapes::

        {"n": 4, "transition": [["0", "1", "0", "0"], ...]}
        {"n": 6, "edges": [[1, 2, "1"], ...], "construction": "row-normalize"}
        {"n": 6, "edges": [...], "construction": {"laplacian-tau": "1/3"}}

    ``tau`` (if given) overrides the document's value.
    """
    if not isinstance(document, dict):
        raise ChainValidationError("input document must be an object")
    n = _doc_n(document)
    if "transition" in document:
        rows = document["transition"]
        if not isinstance(rows, list) or len(rows) != n:
            raise ChainValidationError(f"'transition' must have {n} rows")
        if any(not isinstance(r, list) or len(r) != n for r in rows):
            raise ChainValidationError(f"every transition row must have {n} entries")
        return ChainModel(RationalMatrix(rows))

    graph = load_graph(document)
    construction = document.get("construction")
    if construction is None:
        raise ChainValidationError("graph input needs a 'construction' directive")
    if construction == "row-normalize":
        return transition_row_normalize(graph)
    if construction == "laplacian-tau" or (
        isinstance(construction, dict) and "laplacian-tau" in construction
    ):
        if isinstance(graph, WeightedDigraph):
            raise ChainValidationError("laplacian-tau construction needs undirected 'edges'")
        if tau is None and isinstance(construction, dict):
            tau = construction["laplacian-tau"]
        if tau is None:
            tau = default_tau(graph, tau_rule)
        return transition_from_laplacian_tau(graph, tau)
    raise ChainValidationError(f"unknown construction {construction!r}")


def _doc_n(document: dict) -> int:
    n = document.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ChainValidationError(f"'n' must be a positive integer, got {n!r}")
    return n


def _read_triples(items, n: int, what: str):
    if not isinstance(items, list):
        raise ChainValidationError(f"'{what}' must be a list")
    out = []
    for item in items:
        if not isinstance(item, list) or len(item) != 3:
            raise ChainValidationError(f"each entry of '{what}' must be [u, v, weight]")
        u, v, w = item
        if isinstance(u, bool) or isinstance(v, bool) or not isinstance(u, int) or not isinstance(v, int):
            raise ChainValidationError(f"vertex labels must be integers in {item!r}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ChainValidationError(f"vertex out of range 1..{n} in {item!r}")
        out.append((u - 1, v - 1, parse_rational(w)))
    return out
