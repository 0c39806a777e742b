"""Shared generators for the test suite.

Exhaustive tree enumeration uses increasing parent arrays: every vertex i
picks a parent among 0..i-1. Any ordered rooted tree admits a preorder
labeling of that form, so sweeping all arrays covers every tree shape and
every sibling order, many of them more than once. The counts are small:
sum over n <= 7 of (n-1)! is 874 trees.
"""

from __future__ import annotations

import itertools
import random

from ymmst import Point, RootedPointSet, RootedTree


def all_parent_arrays(max_nodes: int):
    """Yield parent arrays [None, p1, p2, ...] for every tree up to max_nodes."""
    for n in range(1, max_nodes + 1):
        for combo in itertools.product(*(range(i) for i in range(1, n))):
            yield [None, *combo]


def random_parent_array(n: int, rng: random.Random) -> list:
    return [None] + [rng.randrange(i) for i in range(1, n)]


def random_tree(n: int, rng: random.Random) -> RootedTree:
    return RootedTree.from_parents(random_parent_array(n, rng))


def random_pointset(
    rng: random.Random, n: int, coord_max: int = 30
) -> RootedPointSet:
    """Random valid instance: distinct y in [0, coord_max], root wherever
    the lowest point lands."""
    ys = rng.sample(range(coord_max + 1), n)
    pts = [Point(rng.randint(0, coord_max), y) for y in ys]
    root = min(range(n), key=lambda i: pts[i].y)
    return RootedPointSet(tuple(pts), root=root)
