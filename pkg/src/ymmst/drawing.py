"""Grid drawings of rooted trees realizable as y-monotone minimum
spanning trees of their own vertex sets.

Any rooted tree can be drawn on the integer grid so that the drawing's
y-MMST is exactly the input tree. The layout is recursive: child subtrees
are stacked bottom-up to the upper right of their parent, each in its own
horizontal band, with horizontal gaps wide enough that

  * a parent is strictly closer to its own parent than to anything drawn
    in a later (lower, righter) sibling subtree, and
  * every vertex inside a subtree stays strictly closer to its parent than
    to anything outside its subtree's bounding box.

Both gaps come out of the same pattern: to keep a stacked neighbor farther
away than a reference segment of squared length s, a horizontal offset of
1 + isqrt(s - 1) suffices, because the offset's square plus the guaranteed
y-separation of 1 strictly exceeds s.

Coordinates grow exponentially in the worst case (that is unavoidable; see
the width certifier in :mod:`ymmst.analysis`), but the number of arithmetic
operations is linear in the node count. An optional counter instruments
calls to ``stack_y``, ``step_x`` and the floor square roots they perform so
that linearity can be observed rather than trusted.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field

from .errors import InvalidTreeError
from .exactgeom import Point, isqrt
from .mmst import GeomTree, RootedPointSet


@dataclass(frozen=True)
class RootedTree:
    """An ordered rooted tree on vertices 0..n-1.

    ``children[u]`` lists u's children in drawing order; the drawer never
    reorders them. Structure is validated at construction: one root, every
    non-root vertex has exactly one parent, and everything is reachable
    from the root.
    """

    children: tuple[tuple[int, ...], ...]
    root: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "children", tuple(tuple(c) for c in self.children)
        )
        n = len(self.children)
        if n == 0:
            raise InvalidTreeError("tree has no vertices")
        if not 0 <= self.root < n:
            raise InvalidTreeError(f"root {self.root} out of range for {n} vertices")
        seen_child: set[int] = set()
        for u, kids in enumerate(self.children):
            for c in kids:
                if not 0 <= c < n:
                    raise InvalidTreeError(f"vertex {u} lists unknown child {c}")
                if c == self.root:
                    raise InvalidTreeError(f"root {c} appears as a child of {u}")
                if c in seen_child:
                    raise InvalidTreeError(f"vertex {c} has more than one parent")
                seen_child.add(c)
        orphans = set(range(n)) - seen_child - {self.root}
        if orphans:
            raise InvalidTreeError(
                f"vertices {sorted(orphans)} have no parent (multiple roots?)"
            )
        # Parent-uniqueness plus full child coverage already rules out
        # cycles reachable from the root; a traversal double-checks.
        seen = {self.root}
        stack = [self.root]
        while stack:
            u = stack.pop()
            for c in self.children[u]:
                if c in seen:
                    raise InvalidTreeError(f"vertex {c} is reached twice")
                seen.add(c)
                stack.append(c)
        if len(seen) != n:
            raise InvalidTreeError("tree is not connected")

    @property
    def n(self) -> int:
        return len(self.children)

    def parent_map(self) -> dict[int, int]:
        return {c: u for u, kids in enumerate(self.children) for c in kids}

    @classmethod
    def from_parents(cls, parents: "list[int | None]") -> "RootedTree":
        """Build from a parent array with exactly one None marking the root.

        Children end up ordered by vertex id, which is also first-attachment
        order for arrays produced incrementally.
        """
        roots = [i for i, p in enumerate(parents) if p is None]
        if len(roots) != 1:
            raise InvalidTreeError(f"expected exactly one root, got {roots}")
        n = len(parents)
        kids: list[list[int]] = [[] for _ in range(n)]
        for i, p in enumerate(parents):
            if p is None:
                continue
            if not 0 <= p < n:
                raise InvalidTreeError(f"vertex {i} has out-of-range parent {p}")
            kids[p].append(i)
        return cls(tuple(tuple(k) for k in kids), root=roots[0])

    @classmethod
    def star(cls, m: int) -> "RootedTree":
        """Root 0 with m leaf children 1..m."""
        if m < 1:
            raise InvalidTreeError(f"star needs at least one leaf, got {m}")
        return cls((tuple(range(1, m + 1)),) + ((),) * m, root=0)

    @classmethod
    def path(cls, n: int) -> "RootedTree":
        """A path of n vertices rooted at one end."""
        if n < 1:
            raise InvalidTreeError(f"path needs at least one vertex, got {n}")
        return cls(tuple((i + 1,) if i + 1 < n else () for i in range(n)), root=0)


@dataclass(frozen=True)
class DrawnTree:
    """A tree plus, per vertex, its drawing vector and subtree bounding box.

    ``vectors[u]`` is the offset (dx, dy) from u's parent to u, None at the
    root. ``widths[u]`` and ``heights[u]`` are the dimensions of the box
    spanned by u's subtree in the final drawing, with u at its lower-left
    corner. Leaves have zero-size boxes; every non-root offset has
    dx >= 1 and dy >= 1.
    """

    tree: RootedTree
    vectors: tuple["tuple[int, int] | None", ...]
    widths: tuple[int, ...]
    heights: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.widths[self.tree.root]

    @property
    def height(self) -> int:
        return self.heights[self.tree.root]


@dataclass
class OpCounts:
    """Tally of drawing-layer arithmetic, for linearity measurements."""

    stack_y: int = 0
    step_x: int = 0
    isqrt: int = 0

    @property
    def total(self) -> int:
        return self.stack_y + self.step_x + self.isqrt


_counts: OpCounts | None = None


@contextmanager
def count_ops():
    """Collect operation counts for drawing calls made inside the block."""
    global _counts
    prev = _counts
    _counts = OpCounts()
    try:
        yield _counts
    finally:
        _counts = prev


def _bump(field_name: str, k: int = 1) -> None:
    if _counts is not None:
        setattr(_counts, field_name, getattr(_counts, field_name) + k)


def _isqrt(n: int) -> int:
    _bump("isqrt")
    return isqrt(n)


def stack_y(child_heights: list[int]) -> list[int]:
    """Vertical offsets for stacked child subtrees.

    Children are listed top to bottom; the last child sits at y = 1 and each
    earlier child is placed one unit above the band of the next, so bands
    [y_i, y_i + height_i] are pairwise disjoint with unit gaps. The result
    is strictly decreasing.
    """
    m = len(child_heights)
    if m < 1:
        raise ValueError("stack_y needs at least one child height")
    if any(h < 0 for h in child_heights):
        raise ValueError(f"child heights must be nonnegative, got {child_heights}")
    _bump("stack_y")
    ys = [0] * m
    ys[m - 1] = 1
    for i in range(m - 1, 0, -1):
        ys[i - 1] = ys[i] + child_heights[i] + 1
    return ys


def step_x(x: int, y: int, w: int, h: int) -> int:
    """Horizontal offset of the next stacked child subtree.

    Given the current child anchored at (x, y) with subtree box w by h, the
    next child must be far enough right that (a) the current child stays
    strictly closer to its parent at the origin than to anything in the next
    subtree, and (b) everything in the current subtree stays strictly closer
    to its own parent than to anything in the next subtree. (a) needs an
    offset beyond isqrt(x*x + y*y - 1); (b) needs clearance of the box
    diagonal past the box's right edge. A zero-size box has no interior to
    protect, so (b) degenerates to x + 1.
    """
    if x < 1 or y < 1:
        raise ValueError(f"child anchor must satisfy x >= 1 and y >= 1, got ({x}, {y})")
    if w < 0 or h < 0:
        raise ValueError(f"box dimensions must be nonnegative, got ({w}, {h})")
    _bump("step_x")
    clear_parent = x + 1 + _isqrt(x * x + y * y - 1)
    if w == 0 and h == 0:
        clear_box = x + 1
    else:
        clear_box = x + w + 1 + _isqrt(w * w + h * h - 1)
    return max(clear_parent, clear_box)


def draw_depth1(m: int) -> DrawnTree:
    """Drawing of the star with m leaves, written out non-recursively.

    Leaf i (1-based) is offset (x_i, m + 1 - i) from the root, with x_1 = 1
    and x_{i+1} = x_i + 1 + isqrt(x_i^2 + (m + 1 - i)^2 - 1). The root's box
    is x_m by m and the x offsets at least double at every step, so the
    width is at least 2^(m-1).
    """
    tree = RootedTree.star(m)
    vectors: list[tuple[int, int] | None] = [None] * (m + 1)
    x = 1
    for i in range(1, m + 1):
        y = m + 1 - i
        vectors[i] = (x, y)
        if i < m:
            x = x + 1 + _isqrt(x * x + y * y - 1)
    widths = (x,) + (0,) * m
    heights = (m,) + (0,) * m
    return DrawnTree(tree, tuple(vectors), widths, heights)


def draw_tree(tree: RootedTree) -> DrawnTree:
    """Draw an arbitrary rooted tree; its y-MMST is the tree itself.

    Children are processed in input order: the first child's band is the
    topmost, the last child's the lowest. The traversal is iterative, so
    path-shaped inputs of any size do not hit the interpreter's recursion
    limit. Arithmetic operation count is linear in the number of vertices;
    coordinate bit lengths are not.
    """
    n = tree.n
    vectors: list[tuple[int, int] | None] = [None] * n
    widths = [0] * n
    heights = [0] * n

    order = []
    stack = [tree.root]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(tree.children[u])

    for u in reversed(order):  # children always precede their parent
        kids = tree.children[u]
        if not kids:
            continue
        ys = stack_y([heights[c] for c in kids])
        x = 1
        for i, c in enumerate(kids):
            vectors[c] = (x, ys[i])
            if i + 1 < len(kids):
                x = step_x(x, ys[i], widths[c], heights[c])
        widths[u] = x + widths[kids[-1]]
        heights[u] = ys[0] + heights[kids[0]]

    return DrawnTree(tree, tuple(vectors), tuple(widths), tuple(heights))


def resolve_coordinates(drawn: DrawnTree) -> GeomTree:
    """Turn relative offsets into absolute positions with the root at (0, 0).

    The result is a valid rooted point set (offsets guarantee distinct y
    with the root strictly lowest) carrying the tree's own parent map. The
    drawing's bounding box is re-derived from the resolved points and
    checked against the propagated root box as a runtime self-check.
    """
    tree = drawn.tree
    n = tree.n
    pos: list[Point | None] = [None] * n
    pos[tree.root] = Point(0, 0)
    stack = [tree.root]
    while stack:
        u = stack.pop()
        pu = pos[u]
        for c in tree.children[u]:
            dx, dy = drawn.vectors[c]
            pos[c] = Point(pu.x + dx, pu.y + dy)
            stack.append(c)
    points = tuple(pos)
    assert max(p.x for p in points) == drawn.width, "width propagation broke"
    assert max(p.y for p in points) == drawn.height, "height propagation broke"
    assert min(p.x for p in points) == 0 and min(p.y for p in points) == 0
    pointset = RootedPointSet(points, root=tree.root)
    return GeomTree(pointset, tree.parent_map(), uniqueness_flag=True)
