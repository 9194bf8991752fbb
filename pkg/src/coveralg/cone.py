"""Hilbert bases of cover cones in Z^(n+1), fully exact.

Pipeline: an inequality system (facet rows plus nonnegativity rows) is
converted to extreme rays by incremental double description, the ray set
is triangulated by placing, each simplicial piece contributes the lattice
points of its half-open fundamental parallelepiped, and the candidate set
is reduced to the unique minimal generating set of the cone's monoid of
lattice points.

All arithmetic is on Python ints; no floating point enters any verdict.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import isqrt
from typing import Iterable, Sequence

from .complexes import WeightedComplex
from .errors import DegenerateCone, DimensionMismatch
from .intlinalg import adjugate, cross_normal, det, dot, hnf_columns, primitive, rank

Ray = tuple[int, ...]
LatticePoint = tuple[int, ...]


@dataclass(frozen=True)
class ConeSystem:
    dim: int
    rows: tuple[tuple[int, ...], ...]

    def contains(self, p: Sequence[int]) -> bool:
        """True iff every inequality row evaluates >= 0 on p."""
        pv = tuple(int(x) for x in p)
        if len(pv) != self.dim:
            raise DimensionMismatch(
                f"point of length {len(pv)} in a dimension-{self.dim} system"
            )
        return all(dot(row, pv) >= 0 for row in self.rows)


@dataclass(frozen=True)
class SimplicialSubcone:
    rays: tuple[Ray, ...]
    index: int


@dataclass(frozen=True)
class HilbertBasis:
    dim: int
    points: tuple[LatticePoint, ...]
    truncated: bool

    def by_degree(self) -> dict[int, tuple[LatticePoint, ...]]:
        out: dict[int, list[LatticePoint]] = {}
        for p in self.points:
            out.setdefault(p[-1], []).append(p)
        return {k: tuple(v) for k, v in out.items()}


def build_cone(complex_: WeightedComplex) -> ConeSystem:
    """Inequality system whose lattice points are the covers of all orders.

    One row per facet (+1 on the facet's coordinates, -weight on the last)
    followed by n+1 nonnegativity rows.
    """
    n = complex_.n
    rows = []
    for f, w in zip(complex_.facets, complex_.weights):
        row = [1 if i in f else 0 for i in range(n)]
        row.append(-w)
        rows.append(tuple(row))
    for i in range(n + 1):
        row = [0] * (n + 1)
        row[i] = 1
        rows.append(tuple(row))
    return ConeSystem(n + 1, tuple(rows))


def _point_key(p: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    return (p[-1], tuple(p[:-1]))


def extreme_rays(system: ConeSystem) -> tuple[Ray, ...]:
    """Primitive extreme rays by incremental double description.

    The cone is a subset of the nonnegative orthant (its invariant), so we
    start from the orthant's unit rays and cut with each row in turn. Ray
    adjacency uses the standard combinatorial test on tight-row sets,
    which is valid because every intermediate cone here is pointed.
    """
    d = system.dim
    rays: list[Ray] = []
    masks: list[int] = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rays.append(tuple(e))
        masks.append(sum(1 << j for j in range(d) if j != i))
    nbase = d  # bits 0..d-1 are orthant coordinates, then one bit per row

    for t, row in enumerate(system.rows):
        bit = 1 << (nbase + t)
        dots = [dot(row, r) for r in rays]
        if all(v >= 0 for v in dots):
            for i, v in enumerate(dots):
                if v == 0:
                    masks[i] |= bit
            continue
        plus = [i for i, v in enumerate(dots) if v > 0]
        zero = [i for i, v in enumerate(dots) if v == 0]
        minus = [i for i, v in enumerate(dots) if v < 0]
        new_rays: list[Ray] = []
        for i in plus:
            for j in minus:
                meet = masks[i] & masks[j]
                if any(
                    k != i and k != j and meet & masks[k] == meet
                    for k in range(len(rays))
                ):
                    continue
                combo = tuple(
                    dots[i] * rays[j][c] - dots[j] * rays[i][c]
                    for c in range(d)
                )
                new_rays.append(primitive(combo))
        kept_rays = [rays[i] for i in plus + zero]
        kept_masks = [
            masks[i] | (bit if i in zero else 0) for i in plus + zero
        ]
        prior_rows = system.rows[: t + 1]
        for r in new_rays:
            m = sum(1 << c for c in range(d) if r[c] == 0)
            for s, prow in enumerate(prior_rows):
                if dot(prow, r) == 0:
                    m |= 1 << (nbase + s)
            kept_rays.append(r)
            kept_masks.append(m)
        rays, masks = kept_rays, kept_masks

    if rank(rays) < d:
        raise DegenerateCone(
            f"system cuts out a cone of rank {rank(rays)} < {d}"
        )
    return tuple(sorted(rays, key=_point_key))


def triangulate(rays: Sequence[Ray]) -> tuple[SimplicialSubcone, ...]:
    """Placing triangulation of the cone spanned by the given rays.

    Rays are placed in the given order (after a greedy independent prefix
    seeds the first simplex); each new ray is coned over the boundary
    walls it sees. Output is deterministic for a fixed input order.
    """
    rays = [tuple(r) for r in rays]
    d = len(rays[0])
    base: list[int] = []
    rest: list[int] = []
    for idx in range(len(rays)):
        if len(base) < d and rank([rays[i] for i in base] + [rays[idx]]) > len(base):
            base.append(idx)
        else:
            rest.append(idx)
    if len(base) < d:
        raise DegenerateCone(
            f"rays span rank {len(base)} < {d}; cannot triangulate"
        )

    simplices: list[tuple[int, ...]] = [tuple(sorted(base))]
    unsigned_normals: dict[tuple[int, ...], Ray] = {}

    def outward_normal(wall: tuple[int, ...], opposite: int) -> Ray:
        h = unsigned_normals.get(wall)
        if h is None:
            h = cross_normal([rays[i] for i in wall])
            unsigned_normals[wall] = h
        s = dot(h, rays[opposite])
        assert s != 0, "wall normal orthogonal to its own simplex"
        return h if s < 0 else tuple(-x for x in h)

    def boundary_walls() -> list[tuple[tuple[int, ...], int]]:
        seen: dict[tuple[int, ...], list[int]] = {}
        for s in simplices:
            for wall in combinations(s, d - 1):
                opp = next(i for i in s if i not in wall)
                seen.setdefault(wall, []).append(opp)
        return [(w, opps[0]) for w, opps in seen.items() if len(opps) == 1]

    for idx in rest:
        r = rays[idx]
        created = []
        for wall, opp in boundary_walls():
            if dot(outward_normal(wall, opp), r) > 0:
                created.append(tuple(sorted(wall + (idx,))))
        simplices.extend(created)

    out = []
    for s in simplices:
        svecs = tuple(sorted((rays[i] for i in s), key=_point_key))
        out.append(SimplicialSubcone(svecs, abs(det(svecs))))
    out.sort(key=lambda sc: sc.rays)
    return tuple(out)


def parallelepiped_points(subcone: SimplicialSubcone) -> tuple[LatticePoint, ...]:
    """Lattice points of the half-open box {sum a_j q_j : 0 <= a_j < 1}.

    Enumerated through the quotient Z^d / Q Z^d: the column Hermite form
    of the ray matrix gives one residue representative per diagonal box
    cell, and each representative is folded into the parallelepiped by
    reducing its ray coordinates mod 1. Exactly `index` points, 0 included.
    """
    q = subcone.rays
    d = len(q)
    if subcone.index == 1:
        return ((0,) * d,)
    qmat = [[q[j][r] for j in range(d)] for r in range(d)]  # rays as columns
    dval = det(qmat)
    adj = adjugate(qmat)
    if dval < 0:
        dval = -dval
        adj = [[-x for x in row] for row in adj]
    h = hnf_columns(qmat)
    points = set()
    for z in product(*(range(h[i][i]) for i in range(d))):
        t = [sum(adj[j][r] * z[r] for r in range(d)) % dval for j in range(d)]
        p = tuple(
            sum(qmat[r][j] * t[j] for j in range(d)) // dval for r in range(d)
        )
        points.add(p)
    assert len(points) == subcone.index
    return tuple(sorted(points, key=_point_key))


def _provable_degree_limit(n: int) -> int:
    # Largest d with d^2 * 4^n < (n+1)^(n+3); cone degrees provably stay below.
    return isqrt(((n + 1) ** (n + 3) - 1) // 4**n)


def default_degree_cap(dim: int) -> int:
    """Default truncation guard: the provable degree limit, capped at 1e6."""
    return min(_provable_degree_limit(dim - 1), 10**6)


def hilbert_basis(
    system: ConeSystem,
    degree_cap: int | None = None,
    threads: int = 1,
) -> HilbertBasis:
    """Unique minimal generating set of the monoid of lattice points.

    Candidates are all extreme rays plus all parallelepiped points of a
    placing triangulation; a candidate x is dropped iff some other
    candidate y has x - y in the cone and x != y. Points above the degree
    cap are removed after reduction and flagged as a truncation.
    """
    if degree_cap is None:
        degree_cap = default_degree_cap(system.dim)
    rays = extreme_rays(system)
    subcones = triangulate(rays)

    candidates: set[LatticePoint] = set(rays)
    zero = (0,) * system.dim
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(parallelepiped_points, subcones))
    else:
        chunks = [parallelepiped_points(sc) for sc in subcones]
    for chunk in chunks:
        candidates.update(p for p in chunk if p != zero)

    ordered = sorted(candidates, key=_point_key)
    slacks = [tuple(dot(row, c) for row in system.rows) for c in ordered]

    def irreducible(i: int) -> bool:
        si = slacks[i]
        return not any(
            j != i and all(a <= b for a, b in zip(slacks[j], si))
            for j in range(len(ordered))
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            keep_mask = list(pool.map(irreducible, range(len(ordered))))
    else:
        keep_mask = [irreducible(i) for i in range(len(ordered))]

    kept: list[LatticePoint] = []
    dropped_by_cap = False
    for c, keep in zip(ordered, keep_mask):
        if not keep:
            continue
        if c[-1] > degree_cap:
            dropped_by_cap = True
            continue
        kept.append(c)
    return HilbertBasis(system.dim, tuple(kept), dropped_by_cap)


def decompose_lattice_point(
    basis_points: Iterable[LatticePoint],
    target: Sequence[int],
) -> dict[LatticePoint, int] | None:
    """Express a lattice point as an N-combination of basis points.

    Bounded depth-first search with memoization; unit vectors in the basis
    absorb whatever remains once the last coordinate reaches zero. Returns
    the multiplicity map, or None when no combination exists.
    """
    target = tuple(int(x) for x in target)
    d = len(target)
    units = {tuple(p) for p in basis_points if p[-1] == 0}
    positive = sorted(
        (tuple(p) for p in basis_points if p[-1] > 0),
        key=_point_key,
        reverse=True,
    )
    dead: set[tuple[LatticePoint, int]] = set()

    def finishable(rem: LatticePoint) -> dict[LatticePoint, int] | None:
        if rem[-1] != 0:
            return None
        out: dict[LatticePoint, int] = {}
        for i, e in enumerate(rem[:-1]):
            if e:
                unit = tuple(1 if j == i else 0 for j in range(d))
                if unit not in units:
                    return None
                out[unit] = e
        return out

    def search(rem: LatticePoint, start: int) -> dict[LatticePoint, int] | None:
        fin = finishable(rem)
        if fin is not None:
            return fin
        if (rem, start) in dead:
            return None
        for idx in range(start, len(positive)):
            g = positive[idx]
            if g[-1] > rem[-1] or any(a > b for a, b in zip(g, rem)):
                continue
            sub = search(tuple(b - a for a, b in zip(g, rem)), idx)
            if sub is not None:
                sub = dict(sub)
                sub[g] = sub.get(g, 0) + 1
                return sub
        dead.add((rem, start))
        return None

    return search(target, 0)
