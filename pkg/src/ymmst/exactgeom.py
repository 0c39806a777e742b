"""Exact integer geometry primitives.

Coordinates are plain Python ints, so every value is arbitrary precision and
nothing here can overflow or round. Distance comparisons go through squared
distances; Euclidean lengths are never materialized as reals.

All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def isqrt(n: int) -> int:
    """Floor square root: the unique s >= 0 with s*s <= n < (s+1)*(s+1).

    Raises ValueError for negative input.
    """
    if n < 0:
        raise ValueError(f"isqrt requires a nonnegative argument, got {n}")
    return math.isqrt(n)


@dataclass(frozen=True)
class Point:
    """A point on the integer grid. Coordinates may be negative."""

    x: int
    y: int

    def translated(self, dx: int, dy: int) -> "Point":
        return Point(self.x + dx, self.y + dy)


def sq_dist(a: Point, b: Point) -> int:
    """Squared Euclidean distance between two points, exact."""
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def cmp_dist(a: Point, b: Point, c: Point, d: Point) -> int:
    """Compare segment lengths |ab| and |cd| exactly.

    Returns -1 if |ab| < |cd|, 0 if equal, 1 if |ab| > |cd|. Square roots
    cancel under squaring, so the comparison is performed on integers.
    """
    lhs = sq_dist(a, b)
    rhs = sq_dist(c, d)
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0
