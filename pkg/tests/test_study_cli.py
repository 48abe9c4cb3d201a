import json
import subprocess
import sys

import pytest

from shishkin_fem import study
from shishkin_fem.cli import solve_main, study_main
from shishkin_fem.linalg import SolverError
from shishkin_fem.norms import eoc
from shishkin_fem.study import (COLUMNS, ConfigError, StudyConfig, parse_config, read_csv,
                                rows_to_csv, run_study, verdict)

SMOOTH = "problem = smooth-sine\nmethod = galerkin\neps = 1\nN = 8,16,32\n"


def write_cfg(tmp_path, text, name="study.cfg"):
    p = tmp_path / name
    p.write_text(text + f"output = {tmp_path / 'out.csv'}\n")
    return p


def test_parse_config():
    cfg = parse_config("# comment\nproblem = linear-layered\nmethod = galerkin\n"
                       "eps = 1e-4, 1e-8\nN = 8,16,32\nlambda0 = 2.5  # trailing\nc-star = 0.4\n")
    assert cfg.eps == [1e-4, 1e-8] and cfg.N == [8, 16, 32]
    assert cfg.lambda0 == 2.5 and cfg.c_star_value == 0.4
    assert parse_config(SMOOTH).c_star_value == 0.5


@pytest.mark.parametrize("text", [
    "problem = linear-layered\nmethod = galerkin\neps = 1e-4\nN =\n",
    "problem = linear-layered\nmethod = combination\neps = 1e-4\nN = 48\n",
    "problem = linear-layered\nmethod = galerkin\neps = 1e-4\nN = 16,8\n",
    "problem = linear-layered\nmethod = galerkin\neps = 0\nN = 8\n",
    "problem = linear-layered\nmethod = galerkin\neps = 1e-4\nN = 10\n",
    "problem = nope\nmethod = galerkin\neps = 1e-4\nN = 8\n",
    "problem = linear-layered\nmethod = magic\neps = 1e-4\nN = 8\n",
    "problem = linear-layered\nmethod = galerkin\neps = 1e-4\nN = 8\ncolour = blue\n",
    "problem = linear-layered\nmethod = galerkin\neps = abc\nN = 8\n",
    "problem = linear-layered\nmethod = galerkin\nN = 8\n",
    "problem = linear-layered\nmethod = semilinear\neps = 1e-4\nN = 8\n",
    "problem = anisotropic\nmethod = galerkin\neps = 1e-4\nN = 8\n",
    "problem linear-layered\n",
])
def test_invalid_configs(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_smooth_galerkin_l2_rate(tmp_path):
    cfg = parse_config(SMOOTH + f"output = {tmp_path / 's.csv'}\n")
    res = run_study(cfg)
    assert res.complete
    rates = eoc([(r["N"], r["l2"]) for r in res.rows], "classic")
    assert all(abs(r - 2) < 0.1 for r in rates)
    assert res.rows[0]["eoc_classic"] is None and res.rows[1]["eoc_logN"] is not None


def test_csv_layout_and_determinism(tmp_path, monkeypatch):
    text = "problem = linear-layered\nmethod = galerkin\neps = 1e-4,1e-8\nN = 8,16\n"
    outs = []
    for threads in ("1", "3"):
        monkeypatch.setenv("STUDY_THREADS", threads)
        cfg = parse_config(text + f"output = {tmp_path / ('t' + threads + '.csv')}\n")
        run_study(cfg)
        outs.append((tmp_path / ("t" + threads + ".csv")).read_bytes())
    assert outs[0] == outs[1]
    lines = outs[0].decode().splitlines()
    assert lines[0].startswith("#")
    assert lines[1] == ",".join(COLUMNS)
    rows = read_csv(tmp_path / "t1.csv")
    assert [(r["eps"], r["N"]) for r in rows] == [(1e-4, 8), (1e-4, 16), (1e-8, 8), (1e-8, 16)]
    assert all(r["residual"] <= 1e-10 for r in rows)
    summary = json.loads((tmp_path / "t1.summary.json").read_text())
    assert summary["complete"] and len(summary["extras"]) == 4


def _row(eps, N, balanced, **kw):
    r = {c: 0.0 for c in COLUMNS}
    r.update(problem="linear-layered", method="galerkin", eps=eps, N=N, balanced=balanced,
             iters=1, residual=0.0)
    r.update(kw)
    return r


def test_verdict_pass_and_uniformity_fail():
    g = lambda N: __import__("math").log(N) / N
    rows = [_row(1e-8, N, g(N)) for N in (16, 32, 64, 128)]
    rows += [_row(e, 64, g(64)) for e in (1e-4, 1e-6, 1e-10)]
    rep = verdict(rows)
    assert rep["passed"] and {c["id"] for c in rep["criteria"]} == {"AC1", "AC2"}
    rows[-1]["balanced"] = 10 * g(64)
    rep = verdict(rows)
    ac2 = next(c for c in rep["criteria"] if c["id"] == "AC2")
    assert not ac2["passed"] and not rep["passed"]
    assert "AC2" in study.format_verdict(rep)


def test_verdict_missing_columns(tmp_path):
    with pytest.raises(ValueError):
        verdict([{"problem": "linear-layered", "N": 8}])
    p = tmp_path / "bad.csv"
    p.write_text("# x\nproblem,method,eps\nlinear-layered,galerkin,1e-4\n")
    with pytest.raises(ValueError):
        read_csv(p)
    assert study_main(["verdict", str(p)]) == 2


def test_exit_codes(tmp_path, capsys):
    assert study_main(["run", str(write_cfg(tmp_path, SMOOTH))]) == 0
    bad = write_cfg(tmp_path, "problem = linear-layered\nmethod = combination\neps = 1e-4\nN = 48\n", "b.cfg")
    assert study_main(["run", str(bad)]) == 2
    assert study_main(["run", str(tmp_path / "missing.cfg")]) == 2
    assert study_main(["frobnicate"]) == 2
    # interpolation on the coarse grid misses its windows
    fail = write_cfg(tmp_path, "problem = linear-layered\nmethod = interpolation-only\n"
                               "eps = 1e-8\nN = 16,32\n", "f.cfg")
    assert study_main(["run", str(fail)]) == 1
    assert study_main(["verdict", str(tmp_path / "out.csv")]) == 1
    assert study_main(["verdict", str(tmp_path / "out.csv"), "--json"]) == 1
    out = capsys.readouterr().out
    assert '"AC6"' in out


def test_solver_failure_leaves_partial_csv(tmp_path, monkeypatch):
    real = study.solve_linear
    calls = {"n": 0}

    def flaky(*a, **kw):
        calls["n"] += 1
        if calls["n"] > 1:
            raise SolverError("forced stall")
        return real(*a, **kw)

    monkeypatch.setattr(study, "solve_linear", flaky)
    cfg = write_cfg(tmp_path, "problem = linear-layered\nmethod = galerkin\neps = 1e-4\nN = 8,16\n")
    assert study_main(["run", str(cfg)]) == 3
    text = (tmp_path / "out.csv").read_text()
    assert text.rstrip().endswith("# INCOMPLETE: forced stall")
    assert len(read_csv(tmp_path / "out.csv")) == 1
    assert study_main(["verdict", str(tmp_path / "out.csv")]) == 3


def test_residual_gate(monkeypatch):
    with pytest.raises(SolverError):
        study._check_residual(2e-10, "x")
    study._check_residual(1e-10, "x")


def test_solve_command(tmp_path, capsys):
    out = tmp_path / "one.csv"
    code = solve_main(["--problem", "linear-layered", "--eps", "1e-6", "--n", "16",
                       "--method", "galerkin", "--out", str(out)])
    assert code == 0 and out.exists()
    assert "balanced" in capsys.readouterr().out
    assert solve_main(["--problem", "linear-layered", "--eps", "1e-6", "--n", "10",
                       "--out", str(out)]) == 2
    assert solve_main(["--problem", "linear-layered"]) == 2


def test_rows_to_csv_formats_floats_exactly():
    r = _row(1e-8, 16, 0.1 + 0.2)
    text = rows_to_csv([r])
    assert "0.30000000000000004" in text


def test_module_entry_point(tmp_path):
    cfg = write_cfg(tmp_path, SMOOTH)
    proc = subprocess.run([sys.executable, "-m", "shishkin_fem", "study", "run", str(cfg)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "table written" in proc.stdout


def test_config_dataclass_validation():
    with pytest.raises(ConfigError):
        StudyConfig(problem="linear-layered", method="galerkin", eps=[1e-4], N=[8], tol=1e-3)
