import importlib
import json
import subprocess
import sys

import pytest

from cubicfree import arrangement_io as aio
from cubicfree.census import Arrangement, Component
from cubicfree.cli import main
from cubicfree.poly import x, y, z


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.fixture
def el7_file(tmp_path, capsys):
    path = tmp_path / "el7.json"
    assert run(capsys, "example", "EL7", "--emit", str(path))[0] == 0
    return path


def test_analyze_el7(capsys, el7_file):
    code, rep = run_json(capsys, "analyze", str(el7_file))
    assert code == 0
    assert rep["census"]["weak_combinatorics"] == {"k": 1, "d": 4, "n2": 3, "n3": 1, "t5": 4}
    a = rep["analysis"]
    assert (a["mdr"], a["tau_algebraic"], a["verdict"], a["exponents"]) == (3, 27, "Free", [3, 3])
    assert rep["tau_agree"] and rep["hirzebruch"]["pass"]
    assert rep["provenance"]["seed"] == 0 and rep["provenance"]["method"] == "exact"


def test_analyze_text_shows_evidence(capsys, el7_file):
    code, out, _ = run(capsys, "analyze", str(el7_file))
    assert code == 0
    for needle in ("mdr(f) = 3", "tau (algebraic) = 27", "agrees", "verdict: Free, exponents (3, 3)"):
        assert needle in out


def test_analyze_cppp_and_fermat(capsys, tmp_path):
    for name, verdict in (("CPPP", "NotFreeByDegreeWindow"), ("FERMAT", "NotFree")):
        path = tmp_path / f"{name}.json"
        run(capsys, "example", name, "--emit", str(path))
        code, rep = run_json(capsys, "analyze", str(path))
        assert code == 0 and rep["analysis"]["verdict"] == verdict
    assert rep["analysis"]["smooth"] and rep["analysis"]["tau_algebraic"] == 0
    code, out, _ = run(capsys, "analyze", str(path))
    assert "smooth curve" in out


def test_analyze_is_deterministic(capsys, el7_file):
    first = run(capsys, "analyze", str(el7_file), "--json")[1]
    second = run(capsys, "analyze", str(el7_file), "--json")[1]
    assert first == second


def test_emit_parse_emit_fixed_point(capsys, tmp_path):
    for name in ("EL6", "EL7", "CPPP", "FERMAT"):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "example", name, "--emit", str(a))
        aio.dump(aio.load(a), b)
        assert a.read_text() == b.read_text()


def test_enumerate(capsys):
    code, rep = run_json(capsys, "enumerate", "--cubics", "1", "--lines", "6", "--free-only", "--hirzebruch-filter")
    assert code == 0
    assert [(r["n2"], r["n3"], r["t5"]) for r in rep["rows"]] == [(0, 7, 4), (3, 5, 5)]
    code, rep = run_json(capsys, "enumerate", "--cubics", "1", "--lines", "1")
    assert [(r["n2"], r["n3"], r["t5"]) for r in rep["rows"]] == [(0, 0, 1), (3, 0, 0)]
    assert all(r["hirzebruch"] is None for r in rep["rows"])
    code, rep = run_json(capsys, "enumerate", "--cubics", "1", "--lines", "2", "--free-only")
    assert rep["rows"] == []


def test_window(capsys):
    code, rep = run_json(capsys, "window", "--degree", "8")
    assert code == 0 and rep["admissible"] == [] and rep["verdict"] == "cannot be free"
    assert run_json(capsys, "window", "--degree", "9")[1]["admissible"] == [4]


def test_parse_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", str(bad))[0] == 2
    bad.write_text(json.dumps({"components": [{"kind": "quartic", "exact": [[1, 1, 4, 0, 0]]}]}))
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "example", "NOPE")[0] == 2
    assert run(capsys, "window", "--degree", "2")[0] == 2
    assert run(capsys, "reproduce", "--only", "nothing")[0] == 2


def test_unsupported_singularity_exit_3(capsys, tmp_path):
    lines = [Component.line(1, 0, 0), Component.line(0, 1, 0), Component.line(1, 1, 0), Component.line(1, -1, 0)]
    path = tmp_path / "quadruple.json"
    aio.dump(Arrangement([Component("cubic", x**3 + y**3 + z**3), *lines]), path)
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 3 and "unsupported" in err


def test_not_applicable_exit_5(capsys, tmp_path):
    path = tmp_path / "cusp.json"
    aio.dump(Arrangement([Component("cubic", y**2 * z - x**3), Component.line(1, 0, 0)]), path)
    assert run(capsys, "analyze", str(path))[0] == 5


def test_reproduce(capsys):
    code, rep = run_json(capsys, "reproduce", "--only", "degree9")
    assert code == 0 and rep["failed"] == 0
    assert {c["id"] for c in rep["checks"]} == {"degree9-k2d3", "degree9-k1d6"}


def test_reproduce_failure_exit_4(capsys, monkeypatch):
    mod = importlib.import_module("cubicfree.reproduce")
    broken = mod.Check("broken", "window", "always fails", lambda: (False, "forced"))
    monkeypatch.setattr(mod, "CHECKS", [*mod.CHECKS, broken])
    code, out, _ = run(capsys, "reproduce", "--only", "window")
    assert code == 4 and "FAIL  [window] broken" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubicfree", "window", "--degree", "12"],
                          capture_output=True, text=True, check=True)
    assert "admissible mdr: empty" in proc.stdout
