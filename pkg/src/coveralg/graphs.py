"""Graph-specific cover constructions: splits, decomposability, families.

Graphs are weighted complexes whose facets all have two vertices; the
conversions in both directions are lossless. Vertices are 0-indexed
internally, like everywhere else in the package.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .complexes import WeightedComplex, is_cover
from .errors import NotAGraph, SearchBudgetExceeded
from .monomial import ExpVec

BUDGET_ENV_VAR = "COVERALG_BUDGET"
DEFAULT_BUDGET = 10_000_000

ODD_CYCLE_VERTEX_CAP = 12


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[frozenset[int], ...]
    weights: tuple[int, ...]

    @classmethod
    def validate(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        weights: Iterable[int] | None = None,
    ) -> WeightedGraph:
        c = WeightedComplex.validate(n, edges, weights)
        return cls.from_complex(c)

    @classmethod
    def from_complex(cls, complex_: WeightedComplex) -> WeightedGraph:
        bad = [f for f in complex_.facets if len(f) != 2]
        if bad:
            raise NotAGraph(
                f"facet {sorted(v + 1 for v in bad[0])} is not an edge"
            )
        return cls(complex_.n, complex_.facets, complex_.weights)

    def to_complex(self) -> WeightedComplex:
        return WeightedComplex(self.n, self.edges, self.weights)

    @property
    def has_canonical_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = sorted(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class Bipartition:
    parts: tuple[frozenset[int], frozenset[int]] | None
    odd_cycle: tuple[int, ...] | None

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


def bipartition(graph: WeightedGraph) -> Bipartition:
    """BFS 2-coloring; on failure returns an explicit odd cycle.

    Isolated vertices land in the first part, so the empty graph comes
    back as ([n], empty).
    """
    adj = graph.adjacency()
    color = [-1] * graph.n
    parent = [-1] * graph.n
    depth = [0] * graph.n
    for root in range(graph.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                for v in sorted(adj[u]):
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        parent[v] = u
                        depth[v] = depth[u] + 1
                        nxt.append(v)
                    elif color[v] == color[u]:
                        return Bipartition(None, _tree_cycle(parent, depth, u, v))
            queue = nxt
    u_part = frozenset(i for i in range(graph.n) if color[i] == 0)
    v_part = frozenset(i for i in range(graph.n) if color[i] == 1)
    return Bipartition((u_part, v_part), None)


def _tree_cycle(
    parent: Sequence[int], depth: Sequence[int], u: int, v: int
) -> tuple[int, ...]:
    # Walk both endpoints of the offending edge up to their BFS ancestor.
    path_u, path_v = [u], [v]
    uu, vv = u, v
    while depth[uu] > depth[vv]:
        uu = parent[uu]
        path_u.append(uu)
    while depth[vv] > depth[uu]:
        vv = parent[vv]
        path_v.append(vv)
    while uu != vv:
        uu = parent[uu]
        vv = parent[vv]
        path_u.append(uu)
        path_v.append(vv)
    cycle = path_u + path_v[-2::-1]
    assert len(cycle) % 2 == 1
    return tuple(cycle)


def split_order2(
    graph: WeightedGraph, a: Sequence[int], k: int
) -> tuple[ExpVec, ExpVec]:
    """Split a cover of order k >= 3 into covers of orders 2 and k-2.

    The order-2 part is 0 on zero-coordinate vertices, 2 on their
    neighbors, and 1 elsewhere. Canonical weights only.
    """
    if not graph.has_canonical_weights:
        raise ValueError("order-2 split requires canonical weights")
    if k < 3:
        raise ValueError(f"order-2 split needs k >= 3, got {k}")
    complex_ = graph.to_complex()
    av = tuple(int(x) for x in a)
    if not is_cover(complex_, av, k):
        raise ValueError(f"{av} is not a cover of order {k}")
    zero_set = {i for i, x in enumerate(av) if x == 0}
    adj = graph.adjacency()
    neighbors = {j for i in zero_set for j in adj[i]}
    eps = tuple(
        0 if i in zero_set else 2 if i in neighbors else 1
        for i in range(graph.n)
    )
    rest = tuple(x - e for x, e in zip(av, eps))
    assert is_cover(complex_, eps, 2)
    assert all(x >= 0 for x in rest) and is_cover(complex_, rest, k - 2)
    return eps, rest


def bipartite_split(
    graph: WeightedGraph, a: Sequence[int], k: int
) -> tuple[ExpVec, ExpVec]:
    """Split a cover of order k >= 2 of a bipartite graph into orders 1, k-1.

    Rounds a/k up on one side of the bipartition and down on the other;
    both halves are re-checked against every edge before returning.
    """
    if k < 2:
        raise ValueError(f"bipartite split needs k >= 2, got {k}")
    bip = bipartition(graph)
    if not bip.is_bipartite:
        raise ValueError(
            f"graph has odd cycle {tuple(v + 1 for v in bip.odd_cycle)}"
        )
    complex_ = graph.to_complex()
    av = tuple(int(x) for x in a)
    if not is_cover(complex_, av, k):
        raise ValueError(f"{av} is not a cover of order {k}")
    up, _ = bip.parts
    b = tuple(
        -(-av[i] // k) if i in up else av[i] // k for i in range(graph.n)
    )
    c = tuple(x - y for x, y in zip(av, b))
    for e, w in zip(graph.edges, graph.weights):
        i, j = sorted(e)
        assert b[i] + b[j] >= w
        assert c[i] + c[j] >= (k - 1) * w
    return b, c


def _simple_cycles(adj: Sequence[set[int]], n: int):
    # Each cycle appears once: rooted at its smallest vertex, direction
    # fixed by requiring the second vertex below the last.
    for s in range(n):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in sorted(adj[v]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield path
                elif w > s and w not in path:
                    stack.append((w, path + (w,)))


def odd_cycle_domination(graph: WeightedGraph) -> bool:
    """True iff every vertex has a neighbor on every odd cycle.

    Exhaustive odd-cycle enumeration, so the vertex count is capped;
    vacuously true on bipartite graphs.
    """
    if not graph.has_canonical_weights:
        raise ValueError("odd cycle domination is defined for canonical weights")
    if graph.n > ODD_CYCLE_VERTEX_CAP:
        raise ValueError(
            f"odd cycle enumeration capped at {ODD_CYCLE_VERTEX_CAP} vertices, "
            f"got {graph.n}"
        )
    adj = graph.adjacency()
    for cycle in _simple_cycles(adj, graph.n):
        if len(cycle) % 2 == 0:
            continue
        on_cycle = set(cycle)
        for i in range(graph.n):
            if not adj[i] & on_cycle:
                return False
    return True


@dataclass(frozen=True)
class Decomposition:
    b: ExpVec
    i: int
    c: ExpVec
    j: int


def decompose(
    complex_: WeightedComplex,
    a: Sequence[int],
    k: int,
    budget: int | None = None,
) -> Decomposition | None:
    """Find a = b + c with orders i + j = k, i, j >= 1, or certify none exists.

    Exhaustive scan of the box 0 <= b <= a in mixed-radix (lexicographic)
    order; the first witness in that order is returned, so the result does
    not depend on evaluation strategy. The product-of-box-sizes search
    space must fit the budget, otherwise SearchBudgetExceeded is raised
    (a budget failure is never reported as indecomposability).
    """
    if budget is None:
        budget = default_budget()
    if k < 2:
        raise ValueError(f"decomposition needs order k >= 2, got {k}")
    av = tuple(int(x) for x in a)
    if not is_cover(complex_, av, k):
        raise ValueError(f"{av} is not a cover of order {k}")
    size = prod(x + 1 for x in av) * (k - 1)
    if size > budget:
        raise SearchBudgetExceeded(size, budget)

    n = complex_.n
    facets = [tuple(sorted(f)) for f in complex_.facets]
    weights = complex_.weights
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for fi, f in enumerate(facets):
        for v in f:
            by_vertex[v].append(fi)

    b = [0] * n
    sums = [0] * len(facets)
    total_a = tuple(av)

    def orders(s: list[int]) -> int | None:
        best: int | None = None
        for fi, w in enumerate(weights):
            o = s[fi] // w
            if best is None or o < best:
                best = o
        return best

    a_sums = [sum(av[v] for v in f) for f in facets]
    while True:
        ob = orders(sums)
        oc = orders([sa - sb for sa, sb in zip(a_sums, sums)])
        # valid splits are i in [max(1, k - order(c)), min(order(b), k - 1)];
        # a complex without facets bounds no order, hence the k fallbacks
        lo = max(1, k - (k if oc is None else oc))
        hi = min(k if ob is None else ob, k - 1)
        if lo <= hi:
            bb = tuple(b)
            cc = tuple(x - y for x, y in zip(av, bb))
            return Decomposition(bb, lo, cc, k - lo)
        # odometer step: rightmost coordinate counts fastest
        pos = n - 1
        while pos >= 0 and b[pos] == total_a[pos]:
            for fi in by_vertex[pos]:
                sums[fi] -= b[pos]
            b[pos] = 0
            pos -= 1
        if pos < 0:
            return None
        b[pos] += 1
        for fi in by_vertex[pos]:
            sums[fi] += 1


@dataclass(frozen=True)
class FamilyInstance:
    graph: WeightedGraph
    complex: WeightedComplex
    cover: ExpVec
    order: int


def family_instance(m: int, k: int) -> FamilyInstance:
    """Hub-plus-circulant family with an indecomposable cover of order mk+k+1.

    On n = m+2k+1 vertices: vertices 1..m are joined to everything, and
    each i in m+1..n is joined to i+k and i+k+1, indices above n wrapping
    to h-n+m. The companion complex has the facets V minus each hub vertex
    and V minus each wrapped run {i..i+k-1}; the distinguished cover takes
    the value k on hubs and 1 elsewhere, meeting every facet with equality.
    """
    if m < 2 or k < 2:
        raise ValueError(f"family needs m, k >= 2, got m={m}, k={k}")
    n = m + 2 * k + 1

    def wrap(h: int) -> int:
        return h if h <= n else h - n + m

    edges = set()
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if j != i:
                edges.add(frozenset((i - 1, j - 1)))
    for i in range(m + 1, n + 1):
        edges.add(frozenset((i - 1, wrap(i + k) - 1)))
        edges.add(frozenset((i - 1, wrap(i + k + 1) - 1)))
    graph = WeightedGraph.validate(n, sorted(edges, key=sorted))

    everything = set(range(n))
    facets = [everything - {i} for i in range(m)]
    for i in range(m + 1, n + 1):
        run = {wrap(h) - 1 for h in range(i, i + k)}
        facets.append(everything - run)
    complex_ = WeightedComplex.validate(n, facets)

    cover = tuple(k if i < m else 1 for i in range(n))
    order = m * k + k + 1
    for f in complex_.facets:
        assert sum(cover[v] for v in f) == order
    return FamilyInstance(graph, complex_, cover, order)
