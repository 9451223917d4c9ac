import csv
import io
import json
import subprocess
import sys

import pytest

from almostcomm import __version__, cli
from almostcomm.acv import points


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_classify_sweep_passes(capsys):
    code, rep = report(capsys, "classify", "--n", "2..3", "--samples", "2")
    assert code == 0 and rep["status"] == "pass"
    assert rep["version"] == __version__ and len(rep["configHash"]) == 16
    for n in (2, 3):
        rows = [r for r in rep["results"] if r["n"] == n]
        assert any(r["k1"] < r["k2"] for r in rows)  # an M'' type instance
        assert all(r["pass"] for r in rows)
        for r in rows:
            if r["k1"] == r["k2"]:
                assert r["label"] == f"M_{r['k1']}"


def test_classify_conjugated(capsys):
    code, rep = report(capsys, "classify", "--n", "3", "--samples", "1", "--conjugate", "--seed", "5")
    assert code == 0 and len(rep["results"]) == 10


def test_empty_sweep(capsys):
    code, rep = report(capsys, "classify", "--n", "3..2")
    assert code == 0 and rep["results"] == [] and rep["status"] == "pass"


def test_reports_are_byte_identical(capsys, tmp_path):
    args = ["dunkl-check", "--n", "2", "--samples", "5", "--seed", "11"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    out = tmp_path / "r.json"
    assert cli.main(args + ["--out", str(out)]) == 0
    assert out.read_text() == first


def test_seed_changes_the_report(capsys):
    _, a, _ = run(capsys, "dunkl-check", "--n", "2", "--samples", "3", "--seed", "1")
    _, b, _ = run(capsys, "dunkl-check", "--n", "2", "--samples", "3", "--seed", "2")
    assert a != b


def test_failure_exit_code_and_witness(capsys, monkeypatch):
    def broken(q):
        return {"dims": (-1, -1), "locus": "broken"}

    monkeypatch.setattr(points, "classify_generic", broken)
    code, rep = report(capsys, "classify", "--n", "2", "--samples", "1", "--seed", "3")
    assert code == 1 and rep["status"] == "fail"
    w = rep["witness"]
    assert w["rerun"].startswith("almostcomm classify --n 2 --k 0,0 --seed 3")
    assert points.Quadruple.from_json(w["instance"]).n == 2


def test_usage_errors(capsys):
    assert run(capsys, "normal-form", "--n", "2..3")[0] == 2
    assert run(capsys, "normal-form", "--n", "3", "--k", "2,1")[0] == 2
    assert run(capsys, "classify", "--n", "x")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "quiver-components", "--quiver", "E8")[0] == 2


def test_capability_error_exit_code(capsys):
    code, out, err = run(capsys, "quiver-components", "--quiver", "D4", "--n", "2", "--max-roots", "3")
    assert code == 3
    rep = json.loads(out)
    assert rep["status"] == "capability-error" and "BoundExceeded" in rep["error"]
    assert "BoundExceeded" in err


def test_normal_form_point(capsys):
    code, rep = report(capsys, "normal-form", "--n", "4", "--k", "1,3", "--seed", "9")
    assert code == 0
    row = rep["results"][0]
    q = points.Quadruple.from_json(row["point"])
    assert points.on_variety(q) and row["dims"] == [1, 1]


def test_quiver_components(capsys):
    code, rep = report(capsys, "quiver-components", "--quiver", "jordan", "--n", "1..4")
    assert code == 0
    assert [r["components"] for r in rep["results"]] == [2, 3, 4, 5]
    code, rep = report(capsys, "quiver-components", "--quiver", "A1", "--n", "1..2")
    assert code == 0 and [r["components"] for r in rep["results"]] == [2, 3]


def test_freeness_command(capsys):
    code, rep = report(capsys, "freeness", "--n", "2", "--k", "2", "--bound", "3,3")
    assert code == 0
    assert rep["results"][0]["status"] == "certified" and rep["results"][0]["verifiedUpTo"] == [3, 3]


def test_strata_scan(capsys):
    code, rep = report(capsys, "strata-scan", "--n", "1..3")
    assert code == 0 and all(r["pass"] for r in rep["results"])
    code, rep = report(capsys, "strata-scan", "--n", "2", "--conjugate")
    assert code == 0


def test_pbw_count_command(capsys):
    code, rep = report(capsys, "pbw-count", "--n", "2", "--degree", "0..1")
    assert code == 0
    assert [r["count"] for r in rep["results"]] == [2, 10]


def test_csv_output(capsys):
    code, out, _ = run(capsys, "pbw-count", "--n", "1", "--degree", "0..2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:2] == ["# version", __version__]
    assert rows[1] == ["n", "d", "count", "expected", "pass"]
    assert [r[2] for r in rows[2:]] == ["1", "3", "6"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "almostcomm.cli", "normal-form", "--n", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"


@pytest.mark.parametrize("flag", ["--version"])
def test_version_flag(capsys, flag):
    assert cli.main([flag]) == 0
    assert __version__ in capsys.readouterr().out
