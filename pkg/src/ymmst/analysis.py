"""Certification and refutation of y-MMST drawings, plus the two witness
constructions that make the structural results checkable.

The verifier re-derives, for every non-root vertex, whether its claimed
parent is the unique nearest vertex strictly below it. That local condition
characterizes the rooted y-monotone minimum spanning tree, so a drawing is
certified exactly when all comparisons are strict wins for the parent,
refuted when some other vertex is strictly nearer (or a parent fails to lie
below its child), and ambiguous when a tie prevents a strict answer.

The brute-force oracle cross-checks the builder by enumerating every
y-monotone parent assignment and summing actual edge lengths. Lengths are
sums of square roots, which cannot be compared exactly, so each is computed
as a fixed-point integer floor(2^k * sqrt(d)) with a one-sided error below
one unit in the last place. A winner is declared only when its margin over
the runner-up exceeds the accumulated bound of one ulp per edge; otherwise
the result is flagged indeterminate and callers draw new inputs.

``gen_star_pointset`` produces point sets whose y-MMST is a star of any
requested degree, showing the structure has unbounded degree.
``certify_width_lower_bound`` extracts from any certified star drawing a
same-quadrant chain whose x offsets at least double step over step, showing
exponential area is unavoidable for grid drawings.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import NotAStarError, OracleLimitError, TranslatedChainError
from .exactgeom import Point, isqrt, sq_dist
from .mmst import GeomTree, RootedPointSet


class CertStatus(enum.Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class Violation:
    """One failed or tied nearest-below comparison.

    ``reason`` is one of "parent-not-below" (the claimed parent does not lie
    strictly below the vertex), "nearer-below" (the witness is strictly
    nearer than the claimed parent), or "tie" (the witness is exactly as
    near as the claimed parent).
    """

    vertex: int
    witness: int
    reason: str


@dataclass(frozen=True)
class Certificate:
    status: CertStatus
    violations: tuple[Violation, ...]
    uniqueness: bool


def verify_ymmst_drawing(G: GeomTree) -> Certificate:
    """Certify, refute, or declare ambiguous a claimed y-MMST drawing.

    Quadratic in the vertex count, exact. Certified implies the edge set
    equals the built y-MMST of G's own point set with all choices strict;
    refuted comes with at least one concrete witness pair.
    """
    pts = G.pointset.points
    violations: list[Violation] = []
    refuting = False
    tied = False
    for v, p in sorted(G.parent.items()):
        pv = pts[v]
        pp = pts[p]
        if pp.y >= pv.y:
            violations.append(Violation(v, p, "parent-not-below"))
            refuting = True
            continue
        d_parent = sq_dist(pv, pp)
        for u, pu in enumerate(pts):
            if u == v or u == p or pu.y >= pv.y:
                continue
            d = sq_dist(pv, pu)
            if d < d_parent:
                violations.append(Violation(v, u, "nearer-below"))
                refuting = True
            elif d == d_parent:
                violations.append(Violation(v, u, "tie"))
                tied = True
    if refuting:
        status = CertStatus.REFUTED
    elif tied:
        status = CertStatus.AMBIGUOUS
    else:
        status = CertStatus.CERTIFIED
    return Certificate(status, tuple(violations), uniqueness=not tied)


@dataclass(frozen=True)
class OracleResult:
    """Outcome of exhaustive y-monotone spanning tree enumeration.

    ``total_scaled`` is the minimum total length in units of 2^-precision_bits,
    floor-rounded per edge, so the true scaled total lies within
    ``error_bound_scaled`` units above it. ``margin_scaled`` is the gap from
    the best total to the runner-up assignment (None when only one assignment
    exists). When the margin does not clear the error bound the minimizer is
    not provably unique and ``indeterminate`` is set.
    """

    tree: GeomTree
    total_scaled: int
    precision_bits: int
    margin_scaled: int | None
    error_bound_scaled: int
    indeterminate: bool

    def total_decimal(self, digits: int = 12) -> str:
        """The scaled total as a decimal string with the given fraction digits."""
        scaled = (self.total_scaled * 10**digits) >> self.precision_bits
        whole, frac = divmod(scaled, 10**digits)
        return f"{whole}.{frac:0{digits}d}"


def brute_force_ymmst(
    P: RootedPointSet, precision_bits: int = 128, max_n: int = 10
) -> OracleResult:
    """Minimum-total-length y-monotone spanning tree by full enumeration.

    Every assignment of a strictly-below parent to each non-root vertex is a
    spanning tree with a y-monotone path to the root from everywhere, and
    every admissible tree arises this way, so enumerating assignments covers
    the whole search space. Totals are compared in fixed point; see the
    module docstring for the soundness argument. Exponential in n, hence the
    refusal above ``max_n``. Ties in the provable winner are broken toward
    the lexicographically smallest edge set, deterministically.
    """
    n = len(P)
    if n > max_n:
        raise OracleLimitError(
            f"instance has {n} points, above the cap of {max_n}; "
            "raise max_n explicitly if you really want this"
        )
    if precision_bits < 1:
        raise ValueError(f"precision_bits must be positive, got {precision_bits}")
    pts = P.points
    non_root = [v for v in range(n) if v != P.root]
    candidates: list[list[int]] = []
    for v in non_root:
        below = [u for u in range(n) if pts[u].y < pts[v].y]
        candidates.append(below)

    # floor(2^k * sqrt(d)) == isqrt(d * 4^k), exact in integers.
    shift = 2 * precision_bits
    length_rows = [
        {u: isqrt(sq_dist(pts[v], pts[u]) << shift) for u in cand}
        for v, cand in zip(non_root, candidates)
    ]

    # non_root is ascending, so comparing assignment tuples directly is the
    # lexicographic order on (child, parent) edge sets.
    best_total: int | None = None
    best_assign: tuple[int, ...] = ()
    two_smallest: list[int] = []  # totals, len <= 2, ascending
    for assign in itertools.product(*candidates):
        total = sum(row[u] for row, u in zip(length_rows, assign))
        if best_total is None or total < best_total or (
            total == best_total and assign < best_assign
        ):
            best_total, best_assign = total, assign
        if len(two_smallest) < 2:
            two_smallest.append(total)
            two_smallest.sort()
        elif total < two_smallest[1]:
            two_smallest[1] = total
            two_smallest.sort()

    assert best_total is not None
    margin = two_smallest[1] - two_smallest[0] if len(two_smallest) == 2 else None
    error_bound = n - 1  # one ulp per edge, one-sided
    indeterminate = margin is not None and margin < error_bound
    tree = GeomTree(
        P,
        dict(zip(non_root, best_assign)),
        uniqueness_flag=not indeterminate,
    )
    return OracleResult(
        tree=tree,
        total_scaled=best_total,
        precision_bits=precision_bits,
        margin_scaled=margin,
        error_bound_scaled=error_bound,
        indeterminate=indeterminate,
    )


def gen_star_pointset(m: int) -> RootedPointSet:
    """A point set whose y-MMST is the star with m leaves.

    The root sits at the origin; leaf i at (x_i, m + 1 - i) with x_1 = 1 and
    x_{i+1} = x_i + 1 + isqrt(x_i^2 + (m + 1 - i)^2 - 1). Each leaf is then
    strictly nearer to the root than to any other leaf, so the root's degree
    is m. The x coordinates at least double step over step.
    """
    if m < 1:
        raise ValueError(f"need at least one leaf, got {m}")
    points = [Point(0, 0)]
    x = 1
    for i in range(1, m + 1):
        y = m + 1 - i
        points.append(Point(x, y))
        if i < m:
            x = x + 1 + isqrt(x * x + y * y - 1)
    return RootedPointSet(tuple(points), root=0)


def max_degree(G: GeomTree) -> int:
    """Largest vertex degree in the tree (children plus parent link)."""
    deg = [0] * G.n
    for v, p in G.parent.items():
        deg[v] += 1
        deg[p] += 1
    return max(deg)


@dataclass(frozen=True)
class WidthBoundReport:
    """Certified evidence that a star drawing needs exponential width.

    ``chain`` lists the leaves of the most populous strict quadrant around
    the root, by increasing |x|; ``translated_chain`` is the same chain
    pushed down to the lowest admissible positions y = k, k-1, ..., 1. The
    translated chain re-certifies as a star y-MMST and its |x| offsets at
    least double step over step, so max |x| is at least 2^(k-1) times the
    first offset. ``certified_width_lower_bound`` is the observed max |x|;
    ``predicted_width_lower_bound`` is the doubling extrapolation
    2^(k-1) * |x_1| it must dominate.
    """

    quadrant: str
    chain: tuple[Point, ...]
    translated_chain: tuple[Point, ...]
    doubling_holds: bool
    certified_width_lower_bound: int
    predicted_width_lower_bound: int


def _quadrant(p: Point) -> str | None:
    """Strict quadrant of p, or None on an axis."""
    if p.x == 0 or p.y == 0:
        return None
    if p.x > 0:
        return "I" if p.y > 0 else "IV"
    return "II" if p.y > 0 else "III"


def certify_width_lower_bound(G: GeomTree) -> WidthBoundReport:
    """Extract a doubling chain from a certified star drawing.

    Refuses anything that is not a certified drawing of a star. Points on
    the axes through the root are excluded from every quadrant, which can
    only weaken the resulting bound, never falsify it. The down-translated
    chain is re-verified from scratch; a refutation there is impossible for
    valid input and raises ``TranslatedChainError``.
    """
    cert = verify_ymmst_drawing(G)
    if cert.status is not CertStatus.CERTIFIED:
        raise NotAStarError(
            f"drawing is not certified (status: {cert.status.value}); "
            "cannot derive a width bound from it"
        )
    root = G.root
    if any(p != root for p in G.parent.values()):
        raise NotAStarError("drawing is not a star: some vertex's parent is not the root")

    origin = G.point(root)
    leaves = [
        G.point(v).translated(-origin.x, -origin.y)
        for v in range(G.n)
        if v != root
    ]
    buckets: dict[str, list[Point]] = {"I": [], "II": [], "III": [], "IV": []}
    for p in leaves:
        q = _quadrant(p)
        if q is not None:
            buckets[q].append(p)
    quadrant = max("I II III IV".split(), key=lambda q: len(buckets[q]))
    chain = tuple(sorted(buckets[quadrant], key=lambda p: abs(p.x)))
    k = len(chain)

    translated = tuple(Point(p.x, k - i) for i, p in enumerate(chain))
    doubling = all(
        abs(b.x) >= 2 * abs(a.x) for a, b in zip(translated, translated[1:])
    )
    if k > 0:
        ps = RootedPointSet((Point(0, 0),) + translated, root=0)
        recheck = verify_ymmst_drawing(
            GeomTree(ps, {i: 0 for i in range(1, k + 1)})
        )
        if recheck.status is not CertStatus.CERTIFIED:
            raise TranslatedChainError(
                f"translated chain failed re-verification "
                f"({recheck.status.value}): {recheck.violations[:3]}"
            )
        bound = abs(chain[-1].x)
        predicted = (1 << (k - 1)) * abs(chain[0].x)
    else:
        bound = 0
        predicted = 0
    return WidthBoundReport(
        quadrant=quadrant,
        chain=chain,
        translated_chain=translated,
        doubling_holds=doubling,
        certified_width_lower_bound=bound,
        predicted_width_lower_bound=predicted,
    )
