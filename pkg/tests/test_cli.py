import json
import re
import subprocess
import sys

import pytest

from sphere_morse.cli import main


def run(*args, env=None):
    """Run the CLI in a fresh interpreter, as a user would."""
    return subprocess.run(
        [sys.executable, "-m", "sphere_morse.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.mark.parametrize("n, total", [(1, 13), (2, 11)])
def test_classify_text_total(capsys, n, total):
    assert main(["classify", "--double-curves", str(n)]) == 0
    out = capsys.readouterr().out
    assert out.rstrip().splitlines()[-1] == f"total: {total}"


def test_classify_bad_curve_count():
    proc = run("classify", "--double-curves", "3")
    assert proc.returncode == 2
    assert "invalid choice" in proc.stderr


@pytest.mark.parametrize("argv", [["classify", "--double-curves", "1", "--budget", "1"], ["bogus"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_classify_json_round_trip(tmp_path, capsys):
    from sphere_morse import document

    out = tmp_path / "one.json"
    assert main(["classify", "--double-curves", "1", "--format", "json", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["total"] == 13 and len(data["entries"]) == 13
    doc = document.from_json(data)
    assert document.dumps(doc) == out.read_text()
    assert document.stale_keys(doc) == []


def test_schema_is_strict(tmp_path):
    from sphere_morse import document

    main(["classify", "--double-curves", "2", "--format", "json", "--out", str(tmp_path / "d.json")])
    data = json.loads((tmp_path / "d.json").read_text())
    data["extra"] = 1
    with pytest.raises(document.SchemaError):
        document.from_json(data)
    del data["extra"]
    data["total"] = 3
    with pytest.raises(document.SchemaError):
        document.from_json(data)


def test_out_relative_to_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SPHERE_MORSE_OUT", str(tmp_path))
    assert main(["render", "reeb", "torus", "--out", "sub/torus.dot"]) == 0
    assert (tmp_path / "sub" / "torus.dot").read_text().startswith("digraph")


def test_render_torus(capsys):
    assert main(["render", "reeb", "torus"]) == 0
    dot = capsys.readouterr().out
    nodes = re.findall(r"^\s*(p\d+) \[label", dot, re.M)
    edges = re.findall(r"^\s*(p\d+) -> (p\d+)", dot, re.M)
    assert len(nodes) == 4 and len(edges) == 4
    assert edges.count(("p1", "p2")) == 2


def test_render_star(capsys):
    assert main(["render", "tree", "T1"]) == 0
    dot = capsys.readouterr().out
    edges = re.findall(r"^\s*v(\d+) -> v(\d+)", dot, re.M)
    assert len(edges) == 4
    hubs = {v for e in edges for v in e if sum(v in f for f in edges) == 4}
    assert len(hubs) == 1


def test_render_structure_by_label_and_short_id(capsys):
    assert main(["render", "structure", "T3-B/nested"]) == 0
    by_label = capsys.readouterr().out
    assert main(["ids", "structure"]) == 0
    listing = capsys.readouterr().out
    sid = next(line.split("\t")[0] for line in listing.splitlines() if line.endswith("T3-B/nested"))
    assert main(["render", "structure", sid]) == 0
    assert capsys.readouterr().out == by_label


def test_render_unknown_id(capsys):
    assert main(["render", "tree", "nope"]) == 1
    assert "nope" in capsys.readouterr().err


def test_check_ok(capsys):
    assert main(["check"]) == 0
    out = capsys.readouterr().out
    assert "cross-validation: 13/13, 11/11" in out
    assert out.rstrip().endswith("result: ok")
    assert "FAIL" not in out


def test_check_corrupted_catalog(tmp_path, capsys):
    path = tmp_path / "cat.json"
    main(["classify", "--double-curves", "1", "--format", "json", "--out", str(path)])
    assert main(["check", "--catalog", str(path)]) == 0
    capsys.readouterr()
    data = json.loads(path.read_text())
    data["entries"].pop()
    data["total"] -= 1
    path.write_text(json.dumps(data))
    assert main(["check", "--catalog", str(path)]) == 1
    out = capsys.readouterr().out
    assert "missing:" in out and out.rstrip().endswith("result: FAILED")


def test_check_garbage_catalog(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{}")
    assert main(["check", "--catalog", str(path)]) == 1


def test_repeat_runs_byte_identical():
    a = run("classify", "--double-curves", "2", "--format", "json")
    b = run("classify", "--double-curves", "2", "--format", "json")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_jobs_do_not_change_output():
    a = run("classify", "--double-curves", "1", "--jobs", "1")
    b = run("classify", "--double-curves", "1", "--jobs", "2")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
