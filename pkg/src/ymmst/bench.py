"""Benchmark harness for the drawer.

Sweeps a tree family over growing sizes and records, per size, the drawing's
bounding box, the bit length of its largest coordinate, the instrumented
arithmetic-operation counts, and wall-clock time. Output is a CSV table;
optionally the same sweep is rendered to a figure with one panel for
coordinate growth and one for operation-count linearity.

Arithmetic operations stay linear in the node count for every family; it is
the coordinate bit lengths that separate benign shapes (paths stay constant,
bounded fan-out stays moderate) from stars, whose widths double per leaf.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass, fields

from .drawing import RootedTree, count_ops, draw_tree

FAMILIES = ("star", "path", "random")


@dataclass(frozen=True)
class BenchRow:
    family: str
    size: int
    nodes: int
    width: int
    height: int
    coord_bits: int
    ops_stack_y: int
    ops_step_x: int
    ops_isqrt: int
    ops_total: int
    wall_ms: float


def random_tree(n: int, max_children: int = 3, rng: random.Random | None = None) -> RootedTree:
    """Uniform random attachment among vertices with spare child slots."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    rng = rng or random.Random(0)
    parents: list[int | None] = [None]
    child_count = [0] * n
    eligible = [0]  # indices with child_count < max_children
    for v in range(1, n):
        slot = rng.randrange(len(eligible))
        p = eligible[slot]
        parents.append(p)
        child_count[p] += 1
        if child_count[p] >= max_children:
            eligible[slot] = eligible[-1]
            eligible.pop()
        eligible.append(v)
    return RootedTree.from_parents(parents)


def family_tree(family: str, size: int, rng: random.Random) -> RootedTree:
    if family == "star":
        return RootedTree.star(size)
    if family == "path":
        return RootedTree.path(size)
    if family == "random":
        return random_tree(size, max_children=3, rng=rng)
    raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")


def sweep_sizes(max_size: int, start: int = 1) -> list[int]:
    """Doubling sizes up to max_size, max_size always included."""
    if max_size < start:
        raise ValueError(f"max size {max_size} below minimum {start}")
    sizes = []
    s = start
    while s < max_size:
        sizes.append(s)
        s *= 2
    sizes.append(max_size)
    return sizes


def run_bench(family: str, max_size: int, seed: int = 0) -> list[BenchRow]:
    rng = random.Random(seed)
    start = 1 if family == "star" else 2
    rows = []
    for size in sweep_sizes(max_size, start=start):
        tree = family_tree(family, size, rng)
        with count_ops() as ops:
            t0 = time.perf_counter()
            drawn = draw_tree(tree)
            wall = time.perf_counter() - t0
        rows.append(
            BenchRow(
                family=family,
                size=size,
                nodes=tree.n,
                width=drawn.width,
                height=drawn.height,
                coord_bits=max(drawn.width.bit_length(), drawn.height.bit_length()),
                ops_stack_y=ops.stack_y,
                ops_step_x=ops.step_x,
                ops_isqrt=ops.isqrt,
                ops_total=ops.total,
                wall_ms=wall * 1000.0,
            )
        )
    return rows


def write_csv(rows: list[BenchRow], stream) -> None:
    names = [f.name for f in fields(BenchRow)]
    writer = csv.writer(stream)
    writer.writerow(names)
    for row in rows:
        writer.writerow(
            [
                f"{getattr(row, name):.3f}" if name == "wall_ms" else getattr(row, name)
                for name in names
            ]
        )


def render_plot(rows: list[BenchRow], path: str) -> None:
    """Two-panel figure: coordinate bit growth and operation linearity."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    family = rows[0].family if rows else "?"
    sizes = [r.size for r in rows]
    bits = [r.coord_bits for r in rows]
    ops = [r.ops_total for r in rows]
    nodes = [r.nodes for r in rows]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.plot(sizes, bits, "o-", color="#c0392b")
    ax1.set_xlabel("size")
    ax1.set_ylabel("max coordinate bit length")
    ax1.set_title(f"coordinate growth ({family})")
    ax1.grid(alpha=0.3)

    ax2.plot(nodes, ops, "o-", color="#2e86c1", label="measured ops")
    if nodes and ops:
        c = max(o / n for o, n in zip(ops, nodes))
        ax2.plot(nodes, [c * n for n in nodes], "--", color="#888",
                 label=f"{c:.2f} * nodes")
    ax2.set_xlabel("nodes")
    ax2.set_ylabel("instrumented operations")
    ax2.set_title("arithmetic operations vs size")
    ax2.legend()
    ax2.grid(alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
