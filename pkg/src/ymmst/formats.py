"""Text and JSON encodings for trees, point sets, and drawings.

Coordinates are serialized as decimal integer strings of arbitrary length,
so parse(emit(value)) reproduces the value bit for bit regardless of
magnitude. Blank lines and '#' comments are ignored in the line-oriented
formats.

Tree files: one edge per line as "parent_id child_id"; vertex 0 is the
root and ids are 0..n-1. Child order in the file is drawing order.

Point set files: one point per line as "x y"; the first data line is the
root.

Drawing files: JSON with an integer "version" and a "vertices" list of
{id, x, y, parent}, where x and y are decimal strings and exactly one
vertex has parent null (the root).
"""

from __future__ import annotations

import json
import re
from typing import Iterator

from .errors import FormatError
from .exactgeom import Point
from .mmst import GeomTree, RootedPointSet
from .drawing import RootedTree

DRAWING_VERSION = 1

_INT_RE = re.compile(r"-?[0-9]+")


def _parse_int(token: str, line: int, what: str) -> int:
    if not _INT_RE.fullmatch(token):
        raise FormatError(f"{what} must be a decimal integer, got {token!r}", line)
    return int(token)


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def parse_tree(text: str) -> RootedTree:
    """Parse an edge-list tree file. Vertex 0 is the root."""
    edges: list[tuple[int, int]] = []
    has_parent: dict[int, int] = {}
    max_id = -1
    for lineno, line in _data_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(
                f"expected 'parent_id child_id', got {line!r}", lineno
            )
        p = _parse_int(tokens[0], lineno, "parent id")
        c = _parse_int(tokens[1], lineno, "child id")
        if p < 0 or c < 0:
            raise FormatError(f"vertex ids must be nonnegative, got {line!r}", lineno)
        if c in has_parent:
            raise FormatError(
                f"vertex {c} already has a parent (line {has_parent[c]})", lineno
            )
        has_parent[c] = lineno
        edges.append((p, c))
        max_id = max(max_id, p, c)
    if not edges:
        raise FormatError("tree file contains no edges")
    n = max_id + 1
    missing = [v for v in range(n) if v != 0 and v not in has_parent]
    if 0 in has_parent:
        raise FormatError(f"vertex 0 is the root but has a parent (line {has_parent[0]})")
    if missing:
        raise FormatError(
            f"ids must cover 0..{n - 1}: vertices {missing} never appear as a child "
            "(multiple roots or gaps in the id range)"
        )
    children: list[list[int]] = [[] for _ in range(n)]
    for p, c in edges:
        children[p].append(c)
    return RootedTree(tuple(tuple(k) for k in children), root=0)


def emit_tree(tree: RootedTree) -> str:
    """Edge list in preorder, preserving child order on re-parse."""
    lines = []
    stack = [tree.root]
    while stack:
        u = stack.pop()
        for c in tree.children[u]:
            lines.append(f"{u} {c}")
        stack.extend(reversed(tree.children[u]))
    return "\n".join(lines) + "\n" if lines else ""


def parse_points(text: str) -> RootedPointSet:
    """Parse a point set file; the first data line is the root."""
    points: list[Point] = []
    for lineno, line in _data_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"expected 'x y', got {line!r}", lineno)
        x = _parse_int(tokens[0], lineno, "x coordinate")
        y = _parse_int(tokens[1], lineno, "y coordinate")
        points.append(Point(x, y))
    if not points:
        raise FormatError("point set file contains no points")
    return RootedPointSet(tuple(points), root=0)


def emit_points(P: RootedPointSet) -> str:
    """Emit with the root line first, remaining points in index order."""
    order = [P.root] + [i for i in range(len(P)) if i != P.root]
    return "\n".join(f"{P.points[i].x} {P.points[i].y}" for i in order) + "\n"


def parse_drawing(text: str) -> GeomTree:
    """Parse a drawing JSON document into a geometric tree."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise FormatError("drawing document must be a JSON object")
    version = doc.get("version")
    if version != DRAWING_VERSION:
        raise FormatError(
            f"unsupported drawing version {version!r}, expected {DRAWING_VERSION}"
        )
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise FormatError("drawing must carry a non-empty 'vertices' list")
    n = len(vertices)
    points: list[Point | None] = [None] * n
    parent_of: dict[int, int] = {}
    roots: list[int] = []
    for entry in vertices:
        if not isinstance(entry, dict):
            raise FormatError(f"vertex entries must be objects, got {entry!r}")
        try:
            vid = entry["id"]
            x = entry["x"]
            y = entry["y"]
            par = entry["parent"]
        except KeyError as e:
            raise FormatError(f"vertex entry is missing key {e}") from e
        if not isinstance(vid, int) or not 0 <= vid < n:
            raise FormatError(f"vertex id {vid!r} outside 0..{n - 1}")
        if points[vid] is not None:
            raise FormatError(f"duplicate vertex id {vid}")
        if not isinstance(x, str) or not _INT_RE.fullmatch(x):
            raise FormatError(f"vertex {vid}: x must be a decimal string, got {x!r}")
        if not isinstance(y, str) or not _INT_RE.fullmatch(y):
            raise FormatError(f"vertex {vid}: y must be a decimal string, got {y!r}")
        points[vid] = Point(int(x), int(y))
        if par is None:
            roots.append(vid)
        elif isinstance(par, int) and 0 <= par < n:
            parent_of[vid] = par
        else:
            raise FormatError(f"vertex {vid}: parent must be null or an id, got {par!r}")
    if len(roots) != 1:
        raise FormatError(f"expected exactly one root (parent null), got {roots}")
    pointset = RootedPointSet(tuple(points), root=roots[0])
    return GeomTree(pointset, parent_of)


def emit_drawing(G: GeomTree) -> str:
    """Drawing JSON with coordinates as decimal strings, in id order."""
    vertices = []
    for i, p in enumerate(G.pointset.points):
        vertices.append(
            {
                "id": i,
                "x": str(p.x),
                "y": str(p.y),
                "parent": G.parent.get(i) if i != G.root else None,
            }
        )
    return json.dumps({"version": DRAWING_VERSION, "vertices": vertices}, indent=2) + "\n"
