"""Rooted point sets and their y-monotone minimum spanning trees.

A rooted point set has pairwise distinct y coordinates and its root strictly
lowest. Among all spanning geometric graphs in which every point can reach
the root by a path of strictly decreasing y, the one of minimum total
Euclidean length links each non-root vertex to its nearest strictly-lower
vertex. ``build_ymmst`` applies that rule directly, in exact arithmetic.

Ties in the nearest-below choice are never perturbed away: the builder picks
the smallest index deterministically and lowers ``uniqueness_flag`` so that
downstream certification can report the ambiguity instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPointSetError, InvalidTreeError
from .exactgeom import Point, sq_dist


@dataclass(frozen=True)
class RootedPointSet:
    """Points with pairwise distinct y and the root strictly lowest.

    Distinct y coordinates imply no two points coincide, so that is not
    checked separately. Validation happens at construction; an instance that
    exists is valid.
    """

    points: tuple[Point, ...]
    root: int = 0

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        n = len(self.points)
        if n == 0:
            raise InvalidPointSetError("point set is empty")
        if not 0 <= self.root < n:
            raise InvalidPointSetError(
                f"root index {self.root} out of range for {n} points"
            )
        seen_y: dict[int, int] = {}
        for i, p in enumerate(self.points):
            j = seen_y.get(p.y)
            if j is not None:
                raise InvalidPointSetError(
                    f"points {j} and {i} share y coordinate {p.y}: "
                    f"{self.points[j]} and {p}"
                )
            seen_y[p.y] = i
        r = self.points[self.root]
        for i, p in enumerate(self.points):
            if i != self.root and p.y < r.y:
                raise InvalidPointSetError(
                    f"root {r} (index {self.root}) is not strictly lowest: "
                    f"point {i} at {p} lies below it"
                )

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class GeomTree:
    """A spanning tree over a rooted point set, given as a parent map.

    ``parent`` maps every non-root vertex index to its parent index. The map
    must form a single tree reaching the root; whether each parent actually
    lies strictly below its child is a geometric property left to
    ``check_y_monotone_connectivity`` and the verifier, so that defective
    drawings can be represented and refuted.

    ``uniqueness_flag`` is true when every nearest-below choice that produced
    this tree was strict. Trees built by hand or parsed from files default to
    true; the flag is advisory and the verifier recomputes ties from scratch.
    """

    pointset: RootedPointSet
    parent: dict[int, int]
    uniqueness_flag: bool = True

    def __post_init__(self):
        object.__setattr__(self, "parent", dict(self.parent))
        n = len(self.pointset)
        root = self.pointset.root
        expected = set(range(n)) - {root}
        if set(self.parent) != expected:
            missing = sorted(expected - set(self.parent))
            extra = sorted(set(self.parent) - expected)
            detail = []
            if missing:
                detail.append(f"missing parents for {missing}")
            if extra:
                detail.append(f"unexpected entries for {extra}")
            raise InvalidTreeError(
                "parent map must cover exactly the non-root vertices: "
                + "; ".join(detail)
            )
        for v, p in self.parent.items():
            if not 0 <= p < n:
                raise InvalidTreeError(f"vertex {v} has out-of-range parent {p}")
            if p == v:
                raise InvalidTreeError(f"vertex {v} is its own parent")
        # Walk up from every vertex once; memoized so the check stays O(n).
        ok: set[int] = {root}
        for v in range(n):
            trail = []
            u = v
            while u not in ok:
                trail.append(u)
                u = self.parent[u]
                if len(trail) > n:
                    raise InvalidTreeError(
                        f"parent map contains a cycle through vertex {v}"
                    )
            ok.update(trail)

    @property
    def n(self) -> int:
        return len(self.pointset)

    @property
    def root(self) -> int:
        return self.pointset.root

    def point(self, v: int) -> Point:
        return self.pointset.points[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (child, parent) pairs, sorted by child index."""
        return sorted(self.parent.items())


def nearest_below(P: RootedPointSet, v: int) -> tuple[int, bool]:
    """Index of the vertex strictly below v that minimizes distance to v.

    Returns ``(index, is_unique)``. Ties are broken toward the smallest
    index and reported through ``is_unique=False``. The root is strictly
    lowest, so every non-root vertex has at least one candidate; asking for
    the root itself is a usage error.
    """
    if v == P.root:
        raise ValueError("the root has no vertex below it")
    pv = P.points[v]
    best = -1
    best_d: int | None = None
    unique = True
    for u, pu in enumerate(P.points):
        if pu.y >= pv.y:
            continue
        d = sq_dist(pv, pu)
        if best_d is None or d < best_d:
            best, best_d, unique = u, d, True
        elif d == best_d:
            unique = False
    assert best >= 0
    return best, unique


def build_ymmst(P: RootedPointSet) -> GeomTree:
    """Minimum-length spanning tree in which every point reaches the root
    by a y-monotone path.

    Each non-root vertex is linked to its nearest strictly-lower vertex;
    the per-vertex choices are independent, so the greedy assignment is the
    global optimum. Quadratic in the number of points, exact throughout.
    """
    parent: dict[int, int] = {}
    unique_all = True
    for v in range(len(P)):
        if v == P.root:
            continue
        u, unique = nearest_below(P, v)
        parent[v] = u
        unique_all = unique_all and unique
    return GeomTree(P, parent, uniqueness_flag=unique_all)


def check_y_monotone_connectivity(T: GeomTree) -> bool:
    """True iff every vertex can reach the root by a y-monotone path.

    Over a geometric graph with distinct y coordinates this is equivalent
    to two local conditions, both checked explicitly: every non-root vertex
    has at least one neighbor strictly below it, and the root is reachable
    from every vertex. Edges are taken as undirected.
    """
    n = T.n
    pts = T.pointset.points
    adj: list[list[int]] = [[] for _ in range(n)]
    for v, p in T.parent.items():
        adj[v].append(p)
        adj[p].append(v)
    for v in range(n):
        if v == T.root:
            continue
        if not any(pts[u].y < pts[v].y for u in adj[v]):
            return False
    seen = {T.root}
    stack = [T.root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n
