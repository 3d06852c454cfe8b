import csv
import io
import json

import pytest

from gapmatch.bench import suite_instance
from gapmatch.cli import main
from gapmatch.generators import SourceGraph, gen_clique
from gapmatch.io import serialize_instance
from gapmatch.samples import crossing_pairs, with_pairs, worked_example
from gapmatch.structure import build_tree


@pytest.fixture
def write(tmp_path):
    def _write(inst, name="inst.json"):
        path = tmp_path / name
        path.write_text(serialize_instance(inst), encoding="utf-8")
        return str(path)
    return _write


def test_match_worked_example(write, capsys):
    path = write(worked_example())
    assert main(["match", path, "--algorithm", "tree-matmul"]) == 0
    assert main(["match", path, "--algorithm", "oracle", "--witness", "--json"]) == 0
    report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert report["verdict"] == "match" and report["witness"] == [1, 3, 9, 10, 11]


def test_match_auto_witness(write, capsys):
    assert main(["match", write(worked_example()), "--witness"]) == 0
    assert "1 3 9 10 11" in capsys.readouterr().out


def test_match_negative_clique(write):
    g = SourceGraph.from_edges(3, [(1, 2), (2, 3)])
    assert main(["match", write(gen_clique(g, 3))]) == 1


def test_match_structure_error(write, capsys):
    inst = with_pairs("xyzyx", "xyzyx", crossing_pairs())
    assert main(["match", write(inst), "--algorithm", "tree-matmul", "--json"]) == 2
    assert json.loads(capsys.readouterr().out)["error"] == "unsupported-structure"
    assert main(["match", write(inst), "--algorithm", "vsn-dp"]) == 0


def test_match_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"text": "ab"}')
    assert main(["match", str(bad)]) == 2
    assert "schema" in capsys.readouterr().err
    assert main(["match", str(tmp_path / "missing.json")]) == 2


def test_verdicts_independent_of_algorithm(write):
    path = write(worked_example())
    codes = {main(["match", path, "--algorithm", a]) for a in ("oracle", "nfa-product", "vsn-dp", "tree-matmul")}
    assert codes == {0}


def test_analyze(write, capsys):
    assert main(["analyze", write(worked_example()), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["non_intersecting"] and report["tree_depth"] == 2


def test_generate_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert main(["generate", "ov3", "--n", "3", "--d", "4", "--seed", "7", "-o", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("kind,extra", [("clique", ["--n", "4", "--k", "3"]),
                                        ("sat", ["--n", "4", "--m", "3"]),
                                        ("ov3", ["--n", "2", "--d", "2"])])
def test_generate_with_answer(tmp_path, kind, extra):
    out = tmp_path / "g.json"
    assert main(["generate", kind, *extra, "--seed", "2", "--with-oracle-answer", "-o", str(out)]) == 0
    expected = json.loads(out.read_text())["metadata"]["expected"]
    assert main(["match", str(out)]) == (0 if expected == "match" else 1)


def test_bench(tmp_path, capsys):
    fig, table = tmp_path / "b.png", tmp_path / "b.csv"
    assert main(["bench", "ov3", "--sizes", "64,128", "--csv", str(table), "--figure", str(fig)]) == 0
    rows = list(csv.DictReader(io.StringIO(table.read_text())))
    ns = [int(r["n"]) for r in rows]
    assert len(ns) == 2 and ns[0] < ns[1]
    for r, n in zip(rows, (64, 128)):
        inst = suite_instance("ov3", n)
        tree = build_tree(inst.constraints, inst.m)
        assert int(r["multiplications"]) == 2 * (len(tree.nodes) - 1)
    assert fig.stat().st_size > 0


def test_bench_unknown_algorithm(capsys):
    assert main(["bench", "ov3", "--sizes", "64", "--algorithm", "magic"]) == 2
