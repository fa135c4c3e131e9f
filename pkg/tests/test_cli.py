"""End-to-end command-line behavior: output strings, determinism, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden" / "decompose_s2xs1_b2.txt"

THREE_MOVE_TRACE = {
    "alpha": [{"id": "1", "h": [1]}, {"id": "2", "h": [2]}],
    "moves": [
        {"type": "twist", "i": 1, "s": 1},
        {"type": "mixed_cross", "i": 1, "j": 2, "s": 1},
        {"type": "slide", "i": 2, "t": [1]},
    ],
}


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "skeinmod", *args],
        capture_output=True,
        text=True,
    )


def test_index_worked_example():
    res = run("index", "--manifold", "S2xS1", "--alpha", "[1,2]")
    assert res.returncode == 0
    assert "eps'=(2,1,3) eps=3 mu=1" in res.stdout
    assert "R'/(q1^4 q2^2 - 1, q1^6 - 1)" in res.stdout
    assert "S: R/(q^6 - 1)" in res.stdout
    assert "L: R/(q^2 - 1)" in res.stdout
    assert "W: R/(q^2 - 1)" in res.stdout


def test_index_free_manifold():
    res = run("index", "--manifold", "S3", "--alpha", "[id:a, id:b]")
    assert res.returncode == 0
    assert "free in all four modules" in res.stdout
    res = run("index", "--manifold", "S2xS1", "--alpha", "[1,1,1]")
    assert "eps'=(1,2,0)" in res.stdout
    assert "free in all four modules" not in res.stdout


def test_index_json_fields():
    res = run("index", "--manifold", "S2xS1", "--alpha", "[1,2]", "--json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["eps_prime"] == [2, 1, 3]
    assert payload["eps"] == 3 and payload["mu"] == 1 and payload["eps2"] == 1
    assert payload["summands"]["sprime"]["relations"] == ["q1^4 q2^2 - 1", "q1^6 - 1"]
    assert payload["summands"]["s"]["free"] is False
    assert payload["free_all"] is False


def test_decompose_matches_golden_file():
    res = run("decompose", "--manifold", "S2xS1", "--bound", "2")
    assert res.returncode == 0
    assert res.stdout == GOLDEN.read_text(encoding="utf-8")


def test_decompose_is_deterministic():
    a = run("decompose", "--manifold", "S2xS1", "--bound", "2")
    b = run("decompose", "--manifold", "S2xS1", "--bound", "2")
    assert a.stdout == b.stdout and a.stdout


def test_decompose_bound_zero_and_free_rows():
    res = run("decompose", "--manifold", "S2xS1", "--bound", "0")
    body = [l for l in res.stdout.splitlines() if l.startswith("alpha=")]
    assert body == ["alpha=[] eps'=(0,0,0) R' (free)"]
    res = run("decompose", "--manifold", "handlebody(1)", "--bound", "2")
    rows = [l for l in res.stdout.splitlines() if l.startswith("alpha=")]
    assert rows and all(l.endswith("R' (free)") for l in rows)


def test_decompose_other_modules():
    res = run("decompose", "--manifold", "S2xS1", "--bound", "1", "--module", "s")
    rows = [l for l in res.stdout.splitlines() if l.startswith("alpha=")]
    assert "alpha=[1] eps'=(1,0,0) R/(q^2 - 1)" in rows


def test_reduce_three_move_trace(tmp_path):
    trace = tmp_path / "trace.json"
    trace.write_text(json.dumps(THREE_MOVE_TRACE), encoding="utf-8")
    res = run("reduce", "--manifold", "S2xS1", "--trace", str(trace))
    assert res.returncode == 0
    assert "raw: (5,4)" in res.stdout
    assert "reduced: (3,0)" in res.stdout
    assert "element: q1^3 [x_[1,2]]" in res.stdout
    res = run("reduce", "--manifold", "S2xS1", "--trace", str(trace), "--module", "s")
    assert "reduced: 3" in res.stdout
    assert "element: q^3 [x_[1,2]]" in res.stdout


def test_reduce_slide_only_and_empty(tmp_path):
    trace = tmp_path / "slide.json"
    trace.write_text(
        json.dumps(
            {
                "alpha": [{"id": "1", "h": [1]}],
                "moves": [{"type": "slide", "i": 1, "t": [1]}],
            }
        ),
        encoding="utf-8",
    )
    res = run("reduce", "--manifold", "S2xS1", "--trace", str(trace))
    assert "raw: (2,0)" in res.stdout
    assert "reduced: (0,0)" in res.stdout
    assert "element: 1 [x_[1]]" in res.stdout
    empty = tmp_path / "empty.json"
    empty.write_text(
        json.dumps({"alpha": [{"id": "1", "h": [1]}], "moves": []}), encoding="utf-8"
    )
    res = run("reduce", "--manifold", "S2xS1", "--trace", str(empty))
    assert "raw: (0,0)" in res.stdout
    assert "element: 1 [x_[1]]" in res.stdout


def test_reduce_json(tmp_path):
    trace = tmp_path / "trace.json"
    trace.write_text(json.dumps(THREE_MOVE_TRACE), encoding="utf-8")
    res = run("reduce", "--manifold", "S2xS1", "--trace", str(trace), "--json")
    payload = json.loads(res.stdout)
    assert payload["raw"] == [5, 4]
    assert payload["reduced"] == [3, 0]
    assert payload["element"] == "q1^3 [x_[1,2]]"


def test_freeness_reports():
    res = run("freeness", "--manifold", "S2xS1", "--module", "s")
    assert res.returncode == 0
    assert "NOT free; witness torus [1] pairs 1 with class [1]" in res.stdout
    res = run("freeness", "--manifold", "T3", "--module", "w")
    assert "free (no sphere classes)" in res.stdout
    res = run("freeness", "--manifold", "T3", "--module", "s")
    assert "NOT free; witness torus" in res.stdout
    res = run("freeness", "--manifold", "S3", "--module", "sprime")
    assert "free (no torus classes)" in res.stdout
    res = run("freeness", "--manifold", "S2xS1", "--module", "w", "--json")
    payload = json.loads(res.stdout)
    assert payload["free"] is False
    assert payload["witness"] == {"generator": [1], "class": [1], "pairing": 1}


def test_specialize_examples():
    res = run("specialize", "q1^3 q2^1 [x]", "--module", "s")
    assert res.returncode == 0
    assert res.stdout == "q^4 [x]\n"
    res = run("specialize", "q1^3 q2^1 [x]", "--module", "l")
    assert res.stdout == "q [x]\n"
    res = run("specialize", "q1^4 q2^2 - 1", "--module", "w")
    assert res.stdout == "q^4 - 1\n"
    res = run("specialize", "q1^3 q2^1", "--module", "s", "--json")
    assert json.loads(res.stdout)["result"] == "q^4"


def test_table(tmp_path):
    alphas = tmp_path / "alphas.json"
    alphas.write_text(
        json.dumps(
            [
                [{"id": "1", "h": [1]}, {"id": "2", "h": [2]}],
                [{"id": "k", "h": [3]}],
            ]
        ),
        encoding="utf-8",
    )
    res = run("table", "--manifold", "S2xS1", "--alphas", str(alphas))
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert "alpha=[1,2] eps'=(2,1,3) eps=3 mu=1 eps2=1 S'=R'/(q1^4 q2^2 - 1, q1^6 - 1)" in lines
    assert "alpha=[id:k] eps'=(3,0,0) eps=3 mu=3 eps2=0 S'=R'/(q1^6 - 1)" in lines


def test_manifold_document_input(tmp_path):
    doc = {
        "name": "custom",
        "h1_rank": 1,
        "h2_rank": 1,
        "pairing": [[2]],
        "torus_default": [[1]],
        "sphere_gens": [[1]],
    }
    path = tmp_path / "custom.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    res = run("index", "--manifold", str(path), "--alpha", "[1]")
    assert res.returncode == 0
    assert "eps'=(2,0,0)" in res.stdout


def test_parse_errors_exit_2():
    cases = [
        ("index", "--manifold", "S2xS1", "--alpha", "oops"),
        ("index", "--manifold", "nosuchfile.json", "--alpha", "[1]"),
        ("index", "--manifold", "lens(0,1)", "--alpha", "[]"),
        ("reduce", "--manifold", "S2xS1", "--trace", "missing.json"),
        ("specialize", "wat + ", "--module", "s"),
        ("decompose", "--manifold", "S2xS1", "--bound", "-1"),
        ("index", "--manifold", "S2xS1", "--alpha", "[id:ghost]"),
    ]
    for args in cases:
        res = run(*args)
        assert res.returncode == 2, args
        assert res.stderr.startswith("error:parse:"), res.stderr
        assert res.stdout == ""
        assert len(res.stderr.strip().splitlines()) == 1


def test_dimension_errors_exit_3(tmp_path):
    bad_trace = tmp_path / "bad.json"
    bad_trace.write_text(
        json.dumps(
            {"alpha": [{"id": "1", "h": [1]}], "moves": [{"type": "twist", "i": 9, "s": 1}]}
        ),
        encoding="utf-8",
    )
    res = run("reduce", "--manifold", "S2xS1", "--trace", str(bad_trace))
    assert res.returncode == 3
    assert res.stderr.startswith("error:dimension:")
    slide_trace = tmp_path / "slide.json"
    slide_trace.write_text(
        json.dumps(
            {
                "alpha": [{"id": "1", "h": [1]}],
                "moves": [{"type": "slide", "i": 1, "t": [1, 0]}],
            }
        ),
        encoding="utf-8",
    )
    res = run("reduce", "--manifold", "S2xS1", "--trace", str(slide_trace))
    assert res.returncode == 3
    assert res.stderr.startswith("error:dimension:")
    res = run("index", "--manifold", "T3", "--alpha", "[1,0]")
    assert res.returncode == 3
    assert res.stderr.startswith("error:dimension:")


def test_usage_errors_exit_2():
    for args in (
        ("bogusverb",),
        ("index", "--manifold", "S2xS1"),
        ("decompose", "--manifold", "S2xS1", "--bound", "2", "--module", "zz"),
        (),
    ):
        res = run(*args)
        assert res.returncode == 2, args
        assert res.stderr.startswith("error:usage:"), res.stderr


def test_error_lines_are_single_line_even_for_aggregates(tmp_path):
    doc = {"name": 7, "h1_rank": -1, "h2_rank": 0, "pairing": [], "mystery": 1}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    res = run("index", "--manifold", str(path), "--alpha", "[]")
    assert res.returncode == 2
    assert res.stderr.startswith("error:parse:")
    assert len(res.stderr.strip().splitlines()) == 1
