"""Brute-force enumeration of in-forests and undirected spanning forests.

Ground truth for the recurrence on small instances. Nothing here touches
matrix algebra: weights are products of arc weights summed over an explicit
search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .chain import WeightedDigraph, WeightedUndirectedGraph
from .errors import PreconditionError, SizeGuardError
from .numerics import RationalMatrix

DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class ForestCatalog:
    """All in-forests with ``k`` arcs.

    ``forests`` lists arc sets as sorted ``(tail, head)`` tuples (0-based);
    ``per_root_weights[(i, r)]`` accumulates the weight of forests in which
    vertex ``i`` belongs to the tree rooted at ``r``.
    """

    k: int
    forests: tuple[tuple[tuple[int, int], ...], ...]
    weights: tuple[Fraction, ...]
    total_weight: Fraction
    per_root_weights: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.forests)


def _guard(n: int, max_n: int | None):
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if n > limit:
        raise SizeGuardError(
            f"n = {n} exceeds the enumeration guard ({limit}); raise max_n to override"
        )


def _iter_in_forests(dg: WeightedDigraph):
    """Yield ``(parent, weight)`` for every in-forest of ``dg``.

    Each vertex either is a root (``parent[v] is None``) or picks one out-arc;
    an assignment closing a cycle is rejected on the spot.
    """
    n = dg.n
    out = dg.out_neighbors()
    parent: list[int | None] = [None] * n

    def closes_cycle(v, h):
        x = h
        while x is not None:
            if x == v:
                return True
            x = parent[x] if x < v else None  # only vertices already decided
        return False

    def rec(v, weight):
        if v == n:
            yield list(parent), weight
            return
        parent[v] = None
        yield from rec(v + 1, weight)
        for h, w in out[v]:
            if not closes_cycle(v, h):
                parent[v] = h
                yield from rec(v + 1, weight * w)
        parent[v] = None

    yield from rec(0, Fraction(1))


def _roots(parent):
    roots = []
    for i in range(len(parent)):
        x = i
        while parent[x] is not None:
            x = parent[x]
        roots.append(x)
    return roots


def enumerate_in_forests(dg: WeightedDigraph, k: int, max_n: int | None = None) -> ForestCatalog:
    """Exhaustive catalog of ``k``-arc in-forests of ``dg``."""
    _guard(dg.n, max_n)
    if not 0 <= k <= max(dg.n - 1, 0):
        raise PreconditionError(f"k must lie in 0..{dg.n - 1}, got {k}")
    forests, weights = [], []
    per_root: dict = {}
    for parent, w in _iter_in_forests(dg):
        arcs = tuple((v, p) for v, p in enumerate(parent) if p is not None)
        if len(arcs) != k:
            continue
        forests.append(arcs)
        weights.append(w)
        for i, r in enumerate(_roots(parent)):
            per_root[(i, r)] = per_root.get((i, r), Fraction(0)) + w
    return ForestCatalog(
        k=k,
        forests=tuple(forests),
        weights=tuple(weights),
        total_weight=sum(weights, Fraction(0)),
        per_root_weights=per_root,
    )


def oracle_sigma_Q(dg: WeightedDigraph, max_n: int | None = None):
    """``sigma[k]`` and ``Q[k]`` for all ``k = 0 .. n-1`` by one enumeration pass."""
    _guard(dg.n, max_n)
    n = dg.n
    sigma = [Fraction(0)] * n
    Q = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for parent, w in _iter_in_forests(dg):
        k = sum(p is not None for p in parent)
        sigma[k] += w
        layer = Q[k]
        for i, r in enumerate(_roots(parent)):
            layer[i][r] += w
    return tuple(sigma), tuple(RationalMatrix(layer) for layer in Q)


def is_in_forest(n: int, arcs) -> bool:
    """Independent validity check for an arc set as an in-forest on ``n`` vertices."""
    succ = {}
    for t, h in arcs:
        if t == h or t in succ:
            return False
        succ[t] = h
    for start in range(n):
        seen = set()
        x = start
        while x in succ:
            if x in seen:
                return False
            seen.add(x)
            x = succ[x]
    # weak components via union-find
    comp = list(range(n))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for t, h in arcs:
        comp[find(t)] = find(h)
    n_components = len({find(v) for v in range(n)})
    return n_components == n - len(arcs)


@dataclass(frozen=True)
class SpanningStructures:
    q_prime: Fraction
    f_prime: RationalMatrix
    n_trees: int
    n_two_forests: int
    doubling_trees_ok: bool
    doubling_forests_ok: bool


def _acyclic_components(n, edge_subset):
    comp = list(range(n))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for u, v, _ in edge_subset:
        a, b = find(u), find(v)
        if a == b:
            return None
        comp[a] = b
    return [find(v) for v in range(n)]


def enumerate_spanning_structures_undirected(
    G: WeightedUndirectedGraph, max_n: int | None = None
) -> SpanningStructures:
    """Spanning trees and 2-tree spanning forests of ``G`` by edge subsets.

    Also checks, against a brute-force pass over the doubled digraph, that
    directed tree weight is ``n`` times ``q'`` and ``f_ij + f_ji = n f'_ij``.
    """
    _guard(G.n, max_n)
    n = G.n
    q_prime = Fraction(0)
    f_prime = [[Fraction(0)] * n for _ in range(n)]
    n_trees = n_forests = 0
    if n == 1:
        q_prime, n_trees = Fraction(1), 1
    for subset in combinations(G.edges, n - 1) if n > 1 else ():
        if _acyclic_components(n, subset) is not None:
            n_trees += 1
            w = Fraction(1)
            for _, _, x in subset:
                w *= x
            q_prime += w
    for subset in combinations(G.edges, n - 2) if n > 1 else ():
        comps = _acyclic_components(n, subset)
        if comps is None:
            continue
        n_forests += 1
        w = Fraction(1)
        for _, _, x in subset:
            w *= x
        for i in range(n):
            for j in range(n):
                if comps[i] != comps[j]:
                    f_prime[i][j] += w

    sigma, Q = oracle_sigma_Q(G.doubled(), max_n=max_n)
    trees_ok = sigma[n - 1] == n * q_prime
    forests_ok = True
    if n >= 2:
        Qs = Q[n - 2]
        for i in range(n):
            for j in range(n):
                fij = Qs[j, j] - Qs[i, j]
                fji = Qs[i, i] - Qs[j, i]
                if fij + fji != n * f_prime[i][j]:
                    forests_ok = False
    return SpanningStructures(
        q_prime=q_prime,
        f_prime=RationalMatrix(f_prime),
        n_trees=n_trees,
        n_two_forests=n_forests,
        doubling_trees_ok=trees_ok,
        doubling_forests_ok=forests_ok,
    )
