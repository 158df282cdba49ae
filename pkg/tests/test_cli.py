import io
import subprocess
import sys
import time

import pytest

from xxring.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def _levels(text):
    rows = [line.split() for line in text.splitlines()[1:]]
    return {label: float(e) for label, e in rows}


def test_spectrum_antiferro():
    code, text = run("spectrum", "--J", "1", "--B", "0")
    assert code == 0
    levels = _levels(text)
    assert {k: levels[k] for k in ("W2", "W3", "W5", "W6")} == dict.fromkeys(("W2", "W3", "W5", "W6"), -1.0)
    assert levels["000"] == levels["111"] == 0.0
    assert levels["W1"] == levels["W4"] == 2.0


def test_spectrum_zeeman_only():
    code, text = run("spectrum", "--J", "0", "--B", "2")
    assert code == 0
    assert sorted(_levels(text).values()) == [-3, -1, -1, -1, 1, 1, 1, 3]


def test_spectrum_w4():
    assert _levels(run("spectrum", "--J", "-1", "--B", "1")[1])["W4"] == -2.5


def _values(text):
    return dict(line.split(" = ", 1) for line in text.splitlines())


def test_point_examples():
    code, text = run("point", "--J", "-1", "--B", "0", "--T", "1", "--q", "avg_fidelity")
    assert code == 0 and float(_values(text)["avg_fidelity"]) > 2 / 3
    assert float(_values(run("point", "--J", "1", "--B", "0", "--T", "0.5", "--q", "concurrence")[1])["concurrence"]) == 0
    c = float(_values(run("point", "--J", "-1", "--B", "1", "--T", "0.02", "--q", "concurrence")[1])["concurrence"])
    assert c == pytest.approx(2 / 3, abs=1e-6)


def test_point_twelve_digits():
    text = run("point", "--J", "-1", "--B", "0", "--T", "0.5", "--q", "avg_fidelity")[1]
    assert _values(text)["avg_fidelity"] == "0.768207717754"


def test_point_zero_temperature_and_verify():
    code, text = run("point", "--J", "-1", "--B", "1", "--T", "0", "--verify",
                     "--q", "concurrence,avg_fidelity,advantage,probabilities")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("concurrence = 0.666666666667  oracle = 0.666666666667  diff = ")
    assert lines[1].startswith("avg_fidelity = 0.777777777778")
    assert "agree = true" in lines[2]
    assert len(lines) == 7


def test_point_usage_errors():
    assert run("point", "--J", "-1", "--T", "-1")[0] == 2
    assert run("point", "--J", "-1")[0] == 2
    assert run("point", "--J", "abc", "--T", "1")[0] == 2
    assert run("point", "--T", "1", "--q", "entropy")[0] == 2


def test_point_numerical_range():
    assert run("point", "--J", "-1", "--T", "0.001", "--units", "absolute")[0] == 1


def test_critical():
    code, text = run("critical", "--J", "-1", "--eta", "1.4")
    assert code == 0
    t1, t2 = (float(line.split()[2]) for line in text.splitlines())
    assert t1 == pytest.approx(1.28585, abs=1e-4) and t2 == pytest.approx(0.578739, abs=1e-4)
    code, text = run("critical", "--J", "1", "--eta", "0")
    assert code == 0 and "T1 = none" in text and "T2 = none" in text
    assert run("critical", "--J", "0", "--eta", "1")[0] == 2
    assert run("critical", "--J", "1", "--B", "-1")[0] == 2


def test_critical_absolute_units():
    text = run("critical", "--J", "-2", "--B", "2.8", "--units", "absolute")[1]
    assert float(text.split()[2]) == pytest.approx(2 * 1.28585, abs=2e-4)


def test_tables():
    code, text = run("tables")
    assert code == 0
    assert text.strip().endswith("PASS")
    assert any(line.split()[:2] == ["0.3", "0.332167"] for line in text.splitlines())
    assert any(line.split()[:1] == ["1.4"] and "0.578739" in line.split() for line in text.splitlines())
    row2 = next(line for line in text.splitlines() if line.split()[:1] == ["10"] and "1.32628" in line)
    assert row2.split()[-2:] == ["-", "-"]
    assert run("tables", "--tol", "x")[0] == 2


def test_sweep_stdout_and_file(tmp_path):
    code, text = run("sweep", "--J", "-1", "--B-range", "0", "1", "2", "--T-range", "0.5", "1", "2")
    assert code == 0 and "J,B,T,concurrence,avg_fidelity" in text
    out = tmp_path / "s.json"
    code, text = run("sweep", "--J", "-1", "--B-range", "0", "1", "2", "--T-range", "0.5", "1", "2",
                     "--format", "json", "--out", str(out))
    assert code == 0 and text == "" and out.read_text().startswith("{")


def test_sweep_config_with_override(tmp_path):
    cfg = tmp_path / "s.cfg"
    cfg.write_text("J = -1\nB_start = 0\nB_stop = 1\nB_count = 2\nT_start = 0.5\nT_stop = 1\nT_count = 2\n")
    code, text = run("sweep", "--config", str(cfg), "--q", "advantage")
    assert code == 0 and "J,B,T,advantage" in text


def test_sweep_errors(tmp_path):
    assert run("sweep", "--B-range", "0", "1", "2", "--T-range", "0.5", "1", "2")[0] == 2
    assert run("sweep", "--J", "-1", "--B-range", "1", "0", "2", "--T-range", "0.5", "1", "2")[0] == 2
    bad = str(tmp_path / "missing" / "x.csv")
    assert run("sweep", "--J", "-1", "--B-range", "0", "1", "2", "--T-range", "0.5", "1", "2", "--out", bad)[0] == 3
    assert run("sweep", "--config", str(tmp_path / "nope.cfg"))[0] == 3


def test_verify_small_grid_fast():
    start = time.perf_counter()
    code, text = run("verify", "--grid", "small")
    assert time.perf_counter() - start < 1.0
    assert code == 0 and text.splitlines()[-1].startswith("PASS")


def test_verify_detects_fault():
    code, text = run("verify", "--grid", "small", "--perturb", "1e-6")
    assert code == 1
    assert "avg_fidelity" in text and "at J=" in text


def test_verify_usage():
    assert run("verify", "--grid", "huge")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xxring", "spectrum", "--J", "-1", "--B", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "W4" in proc.stdout
