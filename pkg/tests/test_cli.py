import json
import subprocess
import sys
from pathlib import Path

import pytest

from qgr import cli
from qgr.serialize import export_json

GOLDEN = Path(__file__).parent / "golden"

SMOKE = [
    ["relations", "--n", "3", "--kind", "gl"],
    ["relations", "--n", "2", "--kind", "sl"],
    ["hopf-axioms", "--n", "3", "--samples", "5"],
    ["pairing-table", "--n", "2", "--kind", "sl"],
    ["dual-basis", "--n", "3", "--zeta", "2,1"],
    ["verify-double", "--n", "3", "--kind", "sl"],
    ["verma", "--n", "3", "--lambda", "1,0,0"],
    ["rmatrix", "--n", "2", "--lambda", "2,0", "--mu", "1,0", "--depth", "4", "--budget", "1"],
    ["qybe", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,0", "--depth", "3"],
    ["hexagon", "--n", "2", "--lambda", "1,0", "--mu", "2,0", "--nu", "1,0", "--depth", "4"],
    ["casimir", "--n", "2", "--lambda", "2,0", "--depth", "4"],
    ["iso-check", "--which", "sl2", "--samples", "5"],
    ["iso-check", "--which", "chm", "--n", "3"],
    ["prop35", "--n", "4", "--bound", "3"],
    ["qybe", "--n", "2", "--depth", "3", "--specialize", "2,3"],
    ["casimir", "--n", "2", "--lambda", "1,0", "--specialize", "1/2,3"],
]


def _run(args):
    status, report = cli.run(cli.build_parser().parse_args(args))
    return status, report


@pytest.mark.parametrize("args", SMOKE, ids=lambda a: " ".join(a))
def test_subcommands_pass(args):
    status, report = _run(args)
    assert status == 0
    assert report["pass"] is True and report["residual_count"] == 0
    assert set(report) == {"command", "config", "pass", "residual_count", "details"}
    assert report["command"] == args[0]
    export_json(report)


def test_every_subcommand_is_covered():
    assert {a[0] for a in SMOKE} == set(cli.COMMANDS)


@pytest.mark.parametrize(
    "args",
    [
        ["qybe", "--lambda", "1,0,0"],
        ["rmatrix", "--depth", "3", "--budget", "2"],
        ["relations", "--n", "1"],
        ["verma", "--depth", "0"],
        ["qybe", "--specialize", "1,1"],
        ["qybe", "--specialize", "x"],
        ["dual-basis", "--zeta", "1,1"],
        ["iso-check", "--which", "chm", "--kind", "sl"],
        ["casimir", "--specialize", "2,3", "--budget", "9"],
        ["no-such-command"],
        ["iso-check"],
    ],
)
def test_usage_errors_exit_2(args):
    with pytest.raises(SystemExit) as exc:
        cli.main(args)
    assert exc.value.code == 2


def test_failure_exits_1(monkeypatch, capsys):
    monkeypatch.setitem(cli.HANDLERS, "relations", lambda args: (False, 1, {"failures": ["x"]}))
    assert cli.main(["relations"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["pass"] is False and out["residual_count"] == 1


def test_out_file_and_summary(tmp_path, capsys):
    path = tmp_path / "d.json"
    assert cli.main(["dual-basis", "--n", "2", "--zeta", "1", "--out", str(path)]) == 0
    assert "dual-basis: PASS" in capsys.readouterr().out
    d = json.loads(path.read_text())
    assert d["details"]["dual_pair"]["u"] == [[["(1)", ["e1"]]]]
    assert d["details"]["dual_pair"]["v"] == [[["(-1*u^2+1*v^2)", ["f1"]]]]


@pytest.mark.parametrize(
    "name,args",
    [
        ("dual_basis_n2_zeta1.json", ["dual-basis", "--n", "2", "--zeta", "1"]),
        ("qybe_n2_depth3.json", ["qybe", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,0", "--depth", "3"]),
        ("rmatrix_n2_depth3.json", ["rmatrix", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--depth", "3"]),
    ],
)
def test_golden_reports(name, args, tmp_path):
    out = tmp_path / name
    assert cli.main(args + ["--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / name).read_bytes()


def test_golden_schema():
    for path in sorted(GOLDEN.glob("*.json")):
        d = json.loads(path.read_text())
        assert isinstance(d["command"], str) and d["command"] in cli.COMMANDS
        assert isinstance(d["config"], dict) and "out" not in d["config"]
        assert isinstance(d["pass"], bool)
        assert isinstance(d["residual_count"], int)
        assert isinstance(d["details"], dict)
        assert path.read_bytes() == export_json(d)


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("QGR_THREADS", "1000000")
    assert 1 <= cli.max_workers() <= (__import__("os").cpu_count() or 1)
    monkeypatch.setenv("QGR_THREADS", "junk")
    assert cli.max_workers() == 1
    monkeypatch.delenv("QGR_THREADS")
    assert cli.max_workers() == 1


def test_threads_do_not_change_output(monkeypatch):
    args = ["hopf-axioms", "--n", "2", "--samples", "8", "--seed", "9"]
    _, a = _run(args)
    monkeypatch.setenv("QGR_THREADS", "4")
    _, b = _run(args)
    assert export_json(a) == export_json(b)


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "qgr", "prop35", "--n", "2", "--bound", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True
    assert "prop35: PASS" in proc.stderr
