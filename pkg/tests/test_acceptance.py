"""End-to-end acceptance gate.

Each test prints one `[criterion N] PASS/FAIL` line so the whole gate can be
read off a `pytest tests/test_acceptance.py -v -s` run. Budgets are asserted
where a criterion states one; detail lines are indented under the verdict.
"""

import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager

from conftest import all_parent_arrays, random_pointset, random_tree
from ymmst import (
    CertStatus,
    GeomTree,
    Point,
    RootedPointSet,
    RootedTree,
    brute_force_ymmst,
    build_ymmst,
    certify_width_lower_bound,
    gen_star_pointset,
    max_degree,
    verify_ymmst_drawing,
)
from ymmst.bench import random_tree as bounded_random_tree
from ymmst.drawing import count_ops, draw_tree, resolve_coordinates, step_x
from ymmst.formats import (
    emit_drawing,
    emit_points,
    emit_tree,
    parse_drawing,
    parse_points,
    parse_tree,
)


@contextmanager
def criterion(num: int, desc: str):
    try:
        yield
    except BaseException:
        print(f"[criterion {num}] FAIL: {desc}")
        raise
    print(f"[criterion {num}] PASS: {desc}")


def certified_round_trip(tree: RootedTree) -> None:
    g = resolve_coordinates(draw_tree(tree))
    cert = verify_ymmst_drawing(g)
    assert cert.status is CertStatus.CERTIFIED
    assert cert.uniqueness
    assert build_ymmst(g.pointset).parent == tree.parent_map()


def test_criterion_1_spacing_pins():
    with criterion(1, "horizontal spacing reproduces both pinned values exactly"):
        t0 = time.perf_counter()
        assert step_x(1, 4, 0, 0) == 6
        assert step_x(1, 6, 11, 3) == 24
        elapsed = time.perf_counter() - t0
        assert elapsed < 0.001


def test_criterion_2_soundness_sweep():
    with criterion(2, "drawer output certifies and rebuilds for all small and 500 random trees"):
        t0 = time.perf_counter()
        shapes = 0
        for parents in all_parent_arrays(7):
            certified_round_trip(RootedTree.from_parents(parents))
            shapes += 1
        assert shapes == 874
        rng = random.Random(0xA2)
        for _ in range(500):
            certified_round_trip(random_tree(rng.randint(1, 100), rng))
        elapsed = time.perf_counter() - t0
        print(f"  874 exhaustive shapes + 500 random trees in {elapsed:.2f}s")
        assert elapsed < 60


def test_criterion_3_oracle_agreement():
    with criterion(3, "builder matches the brute-force oracle on 200 random instances"):
        t0 = time.perf_counter()
        rng = random.Random(0xA3)
        done = 0
        redraws = 0
        while done < 200:
            assert redraws < 2000, "too many indeterminate draws; oracle is misbehaving"
            P = random_pointset(rng, rng.randint(1, 8), coord_max=30)
            result = brute_force_ymmst(P)
            if result.indeterminate:
                redraws += 1
                continue
            assert build_ymmst(P).edges() == result.tree.edges()
            done += 1
        elapsed = time.perf_counter() - t0
        print(f"  200 agreements, {redraws} indeterminate redraws, in {elapsed:.2f}s")
        assert elapsed < 120


def test_criterion_4_unbounded_degree():
    with criterion(4, "star witness point sets build to degree M for M = 1..50"):
        t0 = time.perf_counter()
        for m in range(1, 51):
            P = gen_star_pointset(m)
            assert max_degree(build_ymmst(P)) == m
        assert gen_star_pointset(50).points[-1].x >= 2**49
        elapsed = time.perf_counter() - t0
        print(f"  50 stars built and measured in {elapsed:.2f}s")
        assert elapsed < 10


def test_criterion_5_exponential_width():
    with criterion(5, "width bound doubles and certifies for stars m = 8, 12, ..., 36"):
        t0 = time.perf_counter()
        for n in range(1, 9):
            m = 4 * n + 4
            g = resolve_coordinates(draw_tree(RootedTree.star(m)))
            report = certify_width_lower_bound(g)
            assert report.doubling_holds
            assert report.certified_width_lower_bound >= 2 ** (m - 1)
            # the down-translated chain must itself certify as a star y-MMST
            ps = RootedPointSet((Point(0, 0),) + report.translated_chain, root=0)
            chain_tree = GeomTree(
                ps, {i: 0 for i in range(1, len(report.translated_chain) + 1)}
            )
            assert verify_ymmst_drawing(chain_tree).status is CertStatus.CERTIFIED
        elapsed = time.perf_counter() - t0
        print(f"  8 star widths certified in {elapsed:.2f}s")
        assert elapsed < 10


def test_criterion_6_linear_operation_count():
    with criterion(6, "arithmetic ops per node are flat across 10^3, 10^4, 10^5 nodes"):
        ratios = []
        for n in (10**3, 10**4, 10**5):
            rng = random.Random(6000 + n)
            tree = bounded_random_tree(n, max_children=3, rng=rng)
            t0 = time.perf_counter()
            with count_ops() as ops:
                draw_tree(tree)
            elapsed = time.perf_counter() - t0
            ratios.append(ops.total / n)
            print(f"  n={n}: ops/n={ratios[-1]:.4f} wall={elapsed:.3f}s (not gated)")
        assert max(ratios) <= 1.25 * min(ratios)


def big_coordinate_pointset() -> RootedPointSet:
    base = 10**199  # 200-digit magnitudes
    points = [Point(0, 0)]
    for i in range(1, 5):
        sign = -1 if i % 2 else 1
        points.append(Point(sign * (base + 7**i), base + i))
    return RootedPointSet(tuple(points), root=0)


def test_criterion_7_round_trips_and_cli_pipe():
    with criterion(7, "CLI pipe certifies and 200-digit round-trips are bit-exact"):
        star = subprocess.Popen(
            [sys.executable, "-m", "ymmst", "star", "3", "--draw"],
            stdout=subprocess.PIPE,
        )
        verify = subprocess.Popen(
            [sys.executable, "-m", "ymmst", "verify", "-"],
            stdin=star.stdout,
            stdout=subprocess.PIPE,
        )
        star.stdout.close()
        out, _ = verify.communicate(timeout=120)
        assert star.wait(timeout=120) == 0
        assert verify.returncode == 0
        assert json.loads(out)["status"] == "certified"

        tree_text = emit_tree(RootedTree.from_parents((None, 0, 0, 1, 1, 4)))
        assert emit_tree(parse_tree(tree_text)) == tree_text

        P = big_coordinate_pointset()
        points_text = emit_points(P)
        assert parse_points(points_text) == P
        assert emit_points(parse_points(points_text)) == points_text

        g = GeomTree(P, {1: 0, 2: 1, 3: 2, 4: 3})
        drawing_text = emit_drawing(g)
        assert parse_drawing(drawing_text) == g
        assert emit_drawing(parse_drawing(drawing_text)) == drawing_text
