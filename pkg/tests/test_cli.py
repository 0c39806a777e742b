import io
import json

import pytest

from ymmst import gen_star_pointset
from ymmst.cli import main
from ymmst.formats import emit_drawing, emit_points, parse_drawing
from ymmst import GeomTree, Point, RootedPointSet, RootedTree
from ymmst.drawing import draw_tree, resolve_coordinates


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---- draw ----------------------------------------------------------------


def test_draw_writes_json_and_svg(tmp_path, capsys):
    tree_file = tmp_path / "t.tree"
    tree_file.write_text("0 1\n0 2\n1 3\n")
    out_json = tmp_path / "d.json"
    out_svg = tmp_path / "d.svg"
    code, out, err = run(
        capsys, "draw", str(tree_file), "-o", str(out_json), "--svg", str(out_svg)
    )
    assert code == 0
    assert out == ""
    assert "grid" in err
    g = parse_drawing(out_json.read_text())
    assert g.parent == {1: 0, 2: 0, 3: 1}
    assert out_svg.read_text().startswith("<svg")


def test_draw_stdout_and_empty_file_error(tmp_path, capsys):
    tree_file = tmp_path / "t.tree"
    tree_file.write_text("0 1\n")
    code, out, _ = run(capsys, "draw", str(tree_file))
    assert code == 0
    assert json.loads(out)["version"] == 1

    empty = tmp_path / "empty.tree"
    empty.write_text("")
    code, _, err = run(capsys, "draw", str(empty))
    assert code == 3
    assert "error" in err


# ---- mmst ----------------------------------------------------------------


def test_mmst_builds_and_warns_on_ties(tmp_path, capsys):
    pts = tmp_path / "p.txt"
    pts.write_text(emit_points(gen_star_pointset(3)))
    code, out, err = run(capsys, "mmst", str(pts))
    assert code == 0
    assert parse_drawing(out).parent == {1: 0, 2: 0, 3: 0}
    assert "warning" not in err

    tie = tmp_path / "tie.txt"
    tie.write_text("0 0\n1 2\n2 3\n0 4\n")
    code, _, err = run(capsys, "mmst", str(tie))
    assert code == 0
    assert "ties" in err


# ---- verify --------------------------------------------------------------


def certified_drawing() -> str:
    return emit_drawing(resolve_coordinates(draw_tree(RootedTree.star(3))))


def test_verify_exit_codes(tmp_path, capsys):
    ok = tmp_path / "ok.json"
    ok.write_text(certified_drawing())
    code, out, _ = run(capsys, "verify", str(ok))
    assert code == 0
    assert json.loads(out)["status"] == "certified"

    refuted = tmp_path / "refuted.json"
    refuted.write_text(
        emit_drawing(
            GeomTree(
                RootedPointSet((Point(0, 0), Point(0, 2), Point(1, 1))),
                {1: 0, 2: 0},
            )
        )
    )
    code, out, _ = run(capsys, "verify", str(refuted))
    assert code == 1
    doc = json.loads(out)
    assert doc["status"] == "refuted"
    assert doc["violations"][0] == {"vertex": 1, "witness": 2, "reason": "nearer-below"}

    tied = tmp_path / "tied.json"
    tied.write_text(
        emit_drawing(
            GeomTree(
                RootedPointSet(
                    (Point(0, 0), Point(1, 2), Point(2, 3), Point(0, 4))
                ),
                {1: 0, 2: 1, 3: 1},
            )
        )
    )
    code, out, _ = run(capsys, "verify", str(tied))
    assert code == 2
    assert json.loads(out)["status"] == "ambiguous"


def test_verify_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(certified_drawing()))
    code, out, _ = run(capsys, "verify", "-")
    assert code == 0
    assert json.loads(out)["status"] == "certified"


def test_verify_malformed_input_is_an_error_not_a_verdict(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 3
    assert "error" in err


# ---- oracle --------------------------------------------------------------


def test_oracle_agreement_and_env_precision(tmp_path, capsys, monkeypatch):
    pts = tmp_path / "p.txt"
    pts.write_text("0 0\n0 2\n1 1\n")
    code, out, _ = run(capsys, "oracle", str(pts))
    assert code == 0
    doc = json.loads(out)
    assert doc["agree"] is True
    assert doc["precision_bits"] == 128
    assert doc["total"].startswith("2.8284271247")

    monkeypatch.setenv("YMMST_PRECISION_BITS", "64")
    code, out, _ = run(capsys, "oracle", str(pts))
    assert json.loads(out)["precision_bits"] == 64

    code, out, _ = run(capsys, "oracle", str(pts), "--precision-bits", "32")
    assert json.loads(out)["precision_bits"] == 32


def test_oracle_indeterminate_exit(tmp_path, capsys):
    pts = tmp_path / "tie.txt"
    pts.write_text("0 0\n1 2\n2 3\n0 4\n")
    code, out, _ = run(capsys, "oracle", str(pts))
    assert code == 2
    assert json.loads(out)["indeterminate"] is True


def test_oracle_cap(tmp_path, capsys):
    big = tmp_path / "big.txt"
    big.write_text("".join(f"{i} {i}\n" for i in range(12)))
    code, _, err = run(capsys, "oracle", str(big))
    assert code == 3
    assert "cap" in err
    small = tmp_path / "small.txt"
    small.write_text("".join(f"{i} {i}\n" for i in range(6)))
    code, _, err = run(capsys, "oracle", str(small), "--max-n", "5")
    assert code == 3
    assert "cap" in err
    code, _, _ = run(capsys, "oracle", str(small))
    assert code == 0


def test_oracle_rejects_bad_env_precision(tmp_path, capsys, monkeypatch):
    pts = tmp_path / "p.txt"
    pts.write_text("0 0\n0 2\n1 1\n")
    monkeypatch.setenv("YMMST_PRECISION_BITS", "fast")
    code, _, err = run(capsys, "oracle", str(pts))
    assert code == 3
    assert "YMMST_PRECISION_BITS" in err


# ---- star ----------------------------------------------------------------


def test_star_points_output(capsys):
    code, out, _ = run(capsys, "star", "3")
    assert code == 0
    assert out == emit_points(gen_star_pointset(3))
    assert out.splitlines()[0] == "0 0"


def test_star_draw_output(capsys):
    code, out, _ = run(capsys, "star", "3", "--draw")
    assert code == 0
    g = parse_drawing(out)
    assert [p.x for p in g.pointset.points] == [0, 1, 5, 11]


def test_star_rejects_nonpositive(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["star", "0"])
    assert exc.value.code == 2
    capsys.readouterr()


# ---- widthbound ----------------------------------------------------------


def test_widthbound_report(tmp_path, capsys):
    drawing = tmp_path / "s.json"
    drawing.write_text(
        emit_drawing(resolve_coordinates(draw_tree(RootedTree.star(12))))
    )
    code, out, _ = run(capsys, "widthbound", str(drawing))
    assert code == 0
    doc = json.loads(out)
    assert doc["quadrant"] == "I"
    assert doc["chain_length"] == 12
    assert doc["doubling_holds"] is True
    assert int(doc["certified_width_lower_bound"]) >= 2**11


def test_widthbound_refuses_non_star(tmp_path, capsys):
    drawing = tmp_path / "p.json"
    drawing.write_text(
        emit_drawing(resolve_coordinates(draw_tree(RootedTree.path(4))))
    )
    code, _, err = run(capsys, "widthbound", str(drawing))
    assert code == 3
    assert "not a star" in err


# ---- bench ---------------------------------------------------------------


def test_bench_csv_stdout(capsys):
    code, out, _ = run(capsys, "bench", "--family", "star", "--max-size", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("family,size,nodes,width,height,coord_bits")
    assert len(lines) == 1 + 4  # header plus sizes 1, 2, 4, 8
    rows = [line.split(",") for line in lines[1:]]
    for row in rows:
        m = int(row[1])
        assert int(row[3]) >= 2 ** (m - 1)  # width column certifies growth


def test_bench_files_and_plot(tmp_path, capsys):
    csv_path = tmp_path / "b.csv"
    png_path = tmp_path / "b.png"
    code, out, err = run(
        capsys,
        "bench",
        "--family",
        "random",
        "--max-size",
        "64",
        "--csv",
        str(csv_path),
        "--plot",
        str(png_path),
    )
    assert code == 0
    assert out == ""
    assert csv_path.exists()
    assert png_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert "rendered figure" in err


def test_bench_path_family_is_linear(capsys):
    code, out, _ = run(capsys, "bench", "--family", "path", "--max-size", "32")
    assert code == 0
    for line in out.strip().splitlines()[1:]:
        row = line.split(",")
        nodes, ops_total = int(row[2]), int(row[9])
        assert ops_total <= 2 * nodes


# ---- misc ----------------------------------------------------------------


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "ymmst" in capsys.readouterr().out
