"""Convergence studies over (eps, N) grids: configuration, CSV tables, verdicts."""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .combo import solve_combined
from .fem import FeSpaceQ1, solve_linear, solve_semilinear
from .linalg import SolverError
from .mesh import Mesh2D, shishkin_1d, shishkin_2d, uniform_1d
from .mixed import conservation_defect, mixed_error_report, solve_mixed
from .norms import MODELS, eoc, error_report, fe_pair_norms, lattice_points, linf_split
from .problems import PROBLEMS, SemilinearProblem, make_problem
from .projections import (anisotropic_projection, l2_projection, lagrange_interpolant,
                          linf_ratio, semilinear_projection)

log = logging.getLogger(__name__)

METHODS = ("galerkin", "semilinear", "anisotropic", "mixed", "combination",
           "interpolation-only", "projection-only", "supercloseness")

COLUMNS = ["problem", "method", "eps", "N", "l2", "linf_omega0", "linf_omegaf", "h1", "h1x",
           "h1y", "energy", "balanced", "eoc_classic", "eoc_logN", "iters", "residual"]

HEADER_COMMENT = ("# error of the method's approximation against the exact solution; "
                  "eoc_* are rates of the balanced column per eps; anisotropic rows use the "
                  "anisotropic energy/balanced norms; mixed rows put the flux error "
                  "||q - q_N|| in h1/h1x/h1y; supercloseness rows measure u_N - u_I")

MAX_RESIDUAL = 1e-10
QUADRATURE_AGREEMENT = 1e-6

_FLOAT_KEYS = {"lambda0", "c", "c_star", "tol", "newton_tol"}
_INT_KEYS = {"order", "cross_order", "seed", "n_hat"}


class ConfigError(ValueError):
    pass


@dataclass
class StudyConfig:
    problem: str
    method: str
    eps: list
    N: list
    lambda0: float = 2.0
    c: float = 1.0
    c_star: float | None = None
    tol: float = 1e-12
    newton_tol: float = 1e-10
    order: int = 5
    cross_order: int = 10
    output: str = "study.csv"
    seed: int = 0
    n_hat: int | None = None

    def __post_init__(self):
        self.validate()

    @property
    def c_star_value(self) -> float:
        return self.c / 2 if self.c_star is None else self.c_star

    def validate(self):
        if self.problem not in PROBLEMS:
            raise ConfigError(f"unknown problem {self.problem!r}")
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}")
        if not self.eps:
            raise ConfigError("eps list is empty")
        if not self.N:
            raise ConfigError("N list is empty")
        if any(not (0 < e <= 1) for e in self.eps):
            raise ConfigError("eps values must lie in (0, 1]")
        if any(b <= a for a, b in zip(self.N, self.N[1:])):
            raise ConfigError("N list must be strictly increasing")
        if any(n < 4 or n % 4 for n in self.N):
            raise ConfigError("every N must be a positive multiple of 4")
        if self.method == "combination":
            bad = [n for n in self.N if n < 16 or (n & (n - 1)) or (n.bit_length() - 1) % 2]
            if bad:
                raise ConfigError(f"combination needs powers of 4 (>= 16), got {bad}")
        semilinear = self.problem == "semilinear-cubic"
        if (self.method == "semilinear") != semilinear and self.method not in (
                "interpolation-only", "projection-only"):
            raise ConfigError("method 'semilinear' pairs with problem 'semilinear-cubic' only")
        if (self.method == "anisotropic") != (self.problem == "anisotropic") and self.method not in (
                "interpolation-only", "projection-only"):
            raise ConfigError("method 'anisotropic' pairs with problem 'anisotropic' only")
        if not (self.c > 0 and self.lambda0 > 0 and self.c_star_value > 0):
            raise ConfigError("c, c_star and lambda0 must be positive")
        if not 0 < self.tol <= 1e-6:
            raise ConfigError("solver tolerance must lie in (0, 1e-6]")


def parse_config(text: str) -> StudyConfig:
    """Flat ``key = value`` lines; lists are comma separated; ``#`` starts a comment."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_")
        if key.lower() == "n":
            key = "N"
        else:
            key = key.lower()
        try:
            if key == "eps":
                values[key] = [float(v) for v in value.split(",") if v.strip()]
            elif key == "N":
                values[key] = [int(v) for v in value.split(",") if v.strip()]
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            elif key in _INT_KEYS:
                values[key] = int(value)
            elif key in ("problem", "method", "output"):
                values[key] = value
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: bad value for {key}: {value!r}") from None
    for required in ("problem", "method", "eps", "N"):
        if required not in values:
            raise ConfigError(f"missing required key {required!r}")
    try:
        return StudyConfig(**values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


def load_config(path) -> StudyConfig:
    return parse_config(Path(path).read_text())


# --------------------------------------------------------------------------- cases

def case_mesh(cfg: StudyConfig, eps: float, N: int) -> Mesh2D:
    cs = cfg.c_star_value
    if cfg.problem == "anisotropic":
        return Mesh2D(shishkin_1d(N, eps, cs, cfg.lambda0), uniform_1d(N), x_layers_only=True)
    return shishkin_2d(N, eps, cs, cfg.lambda0)


def _problem(cfg, eps):
    return make_problem(cfg.problem, eps, cfg.c)


def _check_residual(residual: float, what: str):
    if not residual <= MAX_RESIDUAL:
        raise SolverError(f"{what}: residual {residual:.3e} exceeds {MAX_RESIDUAL:.0e}")


def _quadrature_flag(a, b) -> bool:
    """True when the two error reports disagree beyond the agreement tolerance."""
    for key in ("l2", "h1_x", "h1_y"):
        x, y = getattr(a, key), getattr(b, key)
        if abs(x - y) > QUADRATURE_AGREEMENT * max(abs(y), 1e-300):
            return True
    return False


def _report_row(err, aniso: bool) -> dict:
    return {
        "l2": err.l2, "linf_omega0": err.linf_omega0, "linf_omegaf": err.linf_omegaf,
        "h1": err.h1_semi, "h1x": err.h1_x, "h1y": err.h1_y,
        "energy": err.energy_aniso if aniso else err.energy,
        "balanced": err.balanced_aniso if aniso else err.balanced,
    }


def _errors(cfg, exact, fe, eps, extras):
    err = error_report(exact, fe, eps, cfg.order)
    check = error_report(exact, fe, eps, cfg.cross_order)
    extras["quadrature_flag"] = _quadrature_flag(err, check)
    return err, check


def run_case(cfg: StudyConfig, eps: float, N: int) -> tuple[dict, dict]:
    """One (eps, N) cell of the study: a CSV row (without EOCs) and logged extras."""
    pb = _problem(cfg, eps)
    ex = pb.exact
    aniso = cfg.problem == "anisotropic"
    extras: dict = {"eps": eps, "N": N, "flags": []}
    iters, residual = 0, 0.0
    method = cfg.method

    if method == "mixed":
        mesh = case_mesh(cfg, eps, N)
        sol = solve_mixed(pb, mesh, cfg.tol)
        iters, residual = sol.report.iterations, sol.report.residual
        _check_residual(residual, "mixed")
        rep = mixed_error_report(ex, sol, cfg.cross_order)
        ls, lt = lattice_points()
        x0, x1, y0, y1 = mesh.cell_bounds()
        vals = ex.u(x0[:, None] + (x1 - x0)[:, None] * ls,
                    y0[:, None] + (y1 - y0)[:, None] * lt) - sol.u[:, None]
        l0, lf = linf_split(mesh, vals)
        row = {"l2": rep["l2_u"], "linf_omega0": l0, "linf_omegaf": lf,
               "h1": rep["flux"], "h1x": rep["flux_x"], "h1y": rep["flux_y"],
               "energy": math.sqrt(eps) * rep["flux"] + rep["l2_u"],
               "balanced": eps ** 0.25 * rep["flux"] + rep["l2_u"]}
        extras.update(stability_constant=sol.stability_constant, c=cfg.c,
                      flux_weighted=rep["flux_weighted"],
                      flux_grad_minus=rep["flux_grad_minus"],
                      conservation=float(np.max(np.abs(conservation_defect(sol, pb.f)))))
        if sol.stability_constant > 2.0 / min(1.0, cfg.c):
            extras["flags"].append("stability")
        return _finish(cfg, eps, N, row, iters, residual), extras

    if method == "combination":
        ts = solve_combined(pb, N, cfg.n_hat, cfg.lambda0, cfg.c_star_value, cfg.tol)
        iters = sum(r.iterations for r in ts.reports)
        residual = max(r.residual for r in ts.reports)
        _check_residual(residual, "combination")
        uNN = solve_linear(pb, ts.space, cfg.tol)
        err, _ = _errors(cfg, ex, ts.combined, eps, extras)
        full = error_report(ex, uNN, eps, cfg.order)
        extras.update(n_hat=ts.N_hat, full_balanced=full.balanced,
                      combined_balanced=err.balanced,
                      diff_balanced=fe_pair_norms(ts.combined, uNN, eps)["balanced"])
        return _finish(cfg, eps, N, _report_row(err, aniso), iters, residual), extras

    space = FeSpaceQ1(case_mesh(cfg, eps, N))

    if method in ("galerkin", "anisotropic"):
        uN = solve_linear(pb, space, cfg.tol, cfg.order)
        rep = uN.info["report"]
        iters, residual = rep.iterations, rep.residual
        _check_residual(residual, method)
        err, check = _errors(cfg, ex, uN, eps, extras)
        uI = lagrange_interpolant(ex, space)
        interp = error_report(ex, uI, eps, cfg.cross_order)
        if aniso:
            pi = anisotropic_projection(pb, ex, space, cfg.order)
            perr = error_report(ex, pi, eps, cfg.cross_order)
            extras.update(quasi_optimality=check.energy_aniso / interp.energy_aniso,
                          projection_x_weighted=eps ** 0.25 * perr.h1_x,
                          linf_stability=linf_ratio(pi, ex))
        else:
            pi = l2_projection(ex, space, order=cfg.order)
            perr = error_report(ex, pi, eps, cfg.cross_order)
            xi = fe_pair_norms(pi, uN, eps)["h1"]
            ratio = xi / perr.h1_semi
            extras.update(quasi_optimality=check.energy / interp.energy,
                          projection_h1=perr.h1_semi, xi_h1=xi, projection_ratio=ratio,
                          linf_stability=linf_ratio(pi, ex))
            if ratio > 1 + 1e-6:
                extras["flags"].append("projection_ratio")
        if extras["quasi_optimality"] > 3:
            extras["flags"].append("quasi_optimality")
        return _finish(cfg, eps, N, _report_row(err, aniso), iters, residual), extras

    if method == "semilinear":
        uN = solve_semilinear(pb, space, cfg.newton_tol, order=cfg.order)
        iters = uN.info["newton_iterations"]
        hist = uN.info["newton_history"]
        residual = hist[-1] / hist[0] if hist[0] else 0.0
        _check_residual(residual, "semilinear")
        err, _ = _errors(cfg, ex, uN, eps, extras)
        pi = semilinear_projection(pb, ex, space, order=cfg.order)
        perr = error_report(ex, pi, eps, cfg.cross_order)
        ratio = fe_pair_norms(pi, uN, eps)["h1"] / perr.h1_semi
        extras.update(newton_iterations=iters, projection_ratio=ratio,
                      projection_h1=perr.h1_semi, linf_stability=linf_ratio(pi, ex))
        if ratio > 3:
            extras["flags"].append("projection_ratio")
        return _finish(cfg, eps, N, _report_row(err, aniso), iters, residual), extras

    if method == "interpolation-only":
        uI = lagrange_interpolant(ex, space)
        err, _ = _errors(cfg, ex, uI, eps, extras)
        return _finish(cfg, eps, N, _report_row(err, aniso), 0, 0.0), extras

    if method == "projection-only":
        if isinstance(pb, SemilinearProblem):
            pi = semilinear_projection(pb, ex, space, order=cfg.order)
            iters = pi.info["newton_iterations"]
        elif aniso:
            pi = anisotropic_projection(pb, ex, space, cfg.order)
        else:
            pi = l2_projection(ex, space, order=cfg.order)
        if "report" in pi.info:
            iters, residual = pi.info["report"].iterations, pi.info["report"].residual
            _check_residual(residual, "projection")
        err, _ = _errors(cfg, ex, pi, eps, extras)
        extras["linf_stability"] = linf_ratio(pi, ex)
        if extras["linf_stability"] > 5:
            extras["flags"].append("linf_stability")
        return _finish(cfg, eps, N, _report_row(err, aniso), iters, residual), extras

    if method == "supercloseness":
        uN = solve_linear(pb, space, cfg.tol, cfg.order)
        rep = uN.info["report"]
        iters, residual = rep.iterations, rep.residual
        _check_residual(residual, method)
        uI = lagrange_interpolant(ex, space)
        pair = fe_pair_norms(uN, uI, eps, cfg.c)
        ls, lt = lattice_points()
        l0, lf = linf_split(space.mesh, (uN - uI).on_cells(ls, lt))
        row = {"l2": pair["l2"], "linf_omega0": l0, "linf_omegaf": lf, "h1": pair["h1"],
               "h1x": pair["h1x"], "h1y": pair["h1y"], "energy": pair["energy"],
               "balanced": pair["balanced"]}
        return _finish(cfg, eps, N, row, iters, residual), extras

    raise ConfigError(f"unknown method {method!r}")


def _finish(cfg, eps, N, row, iters, residual) -> dict:
    out = {"problem": cfg.problem, "method": cfg.method, "eps": eps, "N": N}
    out.update(row)
    out.update(eoc_classic=None, eoc_logN=None, iters=int(iters), residual=float(residual))
    return out


def add_eocs(rows: list[dict]):
    by_eps: dict = {}
    for r in rows:
        by_eps.setdefault(r["eps"], []).append(r)
    for group in by_eps.values():
        group.sort(key=lambda r: r["N"])
        for prev, cur in zip(group, group[1:]):
            pair = [(prev["N"], prev["balanced"]), (cur["N"], cur["balanced"])]
            if prev["balanced"] > 0 and cur["balanced"] > 0:
                cur["eoc_classic"] = eoc(pair, "classic")[0]
                cur["eoc_logN"] = eoc(pair, "logN")[0]


# --------------------------------------------------------------------------- running

@dataclass
class StudyResult:
    config: StudyConfig
    rows: list
    extras: list
    complete: bool = True
    error: str | None = None
    verdict: dict = field(default_factory=dict)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("STUDY_THREADS", "1")))
    except ValueError:
        return 1


def run_study(cfg: StudyConfig, write: bool = True) -> StudyResult:
    cases = [(e, n) for e in cfg.eps for n in cfg.N]
    rows, extras = [], []
    error = None
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        futures = [pool.submit(run_case, cfg, e, n) for e, n in cases]
        for fut in futures:
            # rows stay in config order; stop recording at the first failure
            if error is not None:
                fut.cancel()
                continue
            try:
                row, ext = fut.result()
            except SolverError as exc:
                error = str(exc)
                continue
            rows.append(row)
            extras.append(ext)
    add_eocs(rows)
    result = StudyResult(cfg, rows, extras, complete=error is None, error=error)
    if error is None:
        result.verdict = verdict(rows, extras=extras)
    if write:
        write_outputs(result)
    return result


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(rows: list[dict], incomplete: str | None = None) -> str:
    buf = io.StringIO()
    buf.write(HEADER_COMMENT + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in COLUMNS])
    if incomplete is not None:
        buf.write(f"# INCOMPLETE: {incomplete}\n")
    return buf.getvalue()


def summary_path(csv_path) -> Path:
    p = Path(csv_path)
    return p.with_name(p.stem + ".summary.json")


def write_outputs(result: StudyResult):
    path = Path(result.config.output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(rows_to_csv(result.rows, None if result.complete else result.error))
    summary = {"config": asdict(result.config), "complete": result.complete,
               "error": result.error, "extras": result.extras, "verdict": result.verdict}
    summary_path(path).write_text(json.dumps(summary, indent=2, sort_keys=True, default=float) + "\n")


def read_csv(path) -> list[dict]:
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(lines)
    missing = [c for c in COLUMNS if c not in (reader.fieldnames or [])]
    if missing:
        raise ValueError(f"missing columns: {missing}")
    rows = []
    for rec in reader:
        row = {}
        for k, v in rec.items():
            if k in ("problem", "method"):
                row[k] = v
            elif k in ("N", "iters"):
                row[k] = int(v)
            else:
                row[k] = float(v) if v != "" else None
        rows.append(row)
    return rows


# --------------------------------------------------------------------------- verdicts

DEFAULT_THRESHOLDS = {
    "eps_rate": 1e-8,
    "AC1_window": (0.8, 1.4),
    "AC2_N": 64,
    "AC2_ratio": 3.0,
    "AC4_slack": 1e-6,
    "AC5_window": (0.7, 1.5),
    "AC5_linf": 5.0,
    "AC6_omega0_window": (1.7, 2.3),
    "AC6_omegaf_window": (0.8, 1.3),
    "AC7_newton": 10,
    "AC8_window": (0.8, 1.4),
    "AC9_window": (0.8, 1.3),
    "AC10_eps": 1e-10,
    "AC10_N": 64,
    "AC10_comb_factor": 3.0,
    "AC10_diff_factor": 2.0,
    "AC11_window": (0.7, 1.4),
    "AC11_N_max": 64,
}

LINEAR_LAYERED = ("linear-layered", "layered-sine")


def _series(rows, eps, value, n_max=None):
    sel = sorted((r for r in rows if r["eps"] == eps and (n_max is None or r["N"] <= n_max)),
                 key=lambda r: r["N"])
    return [(r["N"], value(r)) for r in sel]


def _window_check(series, model, window):
    if len(series) < 2:
        return None, "fewer than two N values"
    rates = eoc(series, model)
    lo, hi = window
    ok = all(lo <= r <= hi for r in rates)
    return ok, f"rates({model})=" + ", ".join(f"{r:.3f}" for r in rates) + f" window [{lo}, {hi}]"


def _criterion(out, cid, ok, detail):
    out.append({"id": cid, "passed": ok, "detail": detail})


def verdict(rows: list[dict], thresholds: dict | None = None, extras: list | None = None) -> dict:
    """Evaluate the acceptance criteria that the given study rows can decide.

    Criteria whose data are absent from the rows are left out of the report.
    """
    th = dict(DEFAULT_THRESHOLDS)
    th.update(thresholds or {})
    if rows:
        missing = [c for c in COLUMNS if c not in rows[0]]
        if missing:
            raise ValueError(f"missing columns: {missing}")
    extras = extras or []
    out: list = []
    eps_r = th["eps_rate"]
    methods = {r["method"] for r in rows}
    problems = {r["problem"] for r in rows}

    def ex_for(eps=None, N=None):
        return [e for e in extras if (eps is None or e["eps"] == eps) and (N is None or e["N"] == N)]

    if "galerkin" in methods and problems & set(LINEAR_LAYERED):
        s = _series(rows, eps_r, lambda r: r["balanced"])
        ok, det = _window_check(s, "logN", th["AC1_window"])
        if ok is not None:
            ok = ok and s[-1][1] < s[0][1]
            _criterion(out, "AC1", ok, det + f"; e(N={s[-1][0]}) < e(N={s[0][0]}): {s[-1][1] < s[0][1]}")
        at = [r["balanced"] for r in rows if r["N"] == th["AC2_N"]]
        if len(at) >= 2:
            ratio = max(at) / min(at)
            _criterion(out, "AC2", ratio <= th["AC2_ratio"],
                       f"max/min balanced error at N={th['AC2_N']} = {ratio:.3f} (<= {th['AC2_ratio']})")
        ratios = [e["projection_ratio"] for e in extras if "projection_ratio" in e]
        if ratios:
            worst = max(ratios)
            _criterion(out, "AC4", worst <= 1 + th["AC4_slack"],
                       f"max |pi u - u_N|_1 / |u - pi u|_1 = {worst:.6f}")

    if "projection-only" in methods and problems & set(LINEAR_LAYERED):
        s = _series(rows, eps_r, lambda r: r["eps"] ** 0.25 * r["h1"])
        ok, det = _window_check(s, "logN32", th["AC5_window"])
        stab = [e["linf_stability"] for e in extras if "linf_stability" in e]
        if ok is not None:
            worst = max(stab) if stab else math.nan
            ok = ok and (not stab or worst <= th["AC5_linf"])
            _criterion(out, "AC5", ok, det + f"; max Linf stability ratio {worst:.3f}")

    if "interpolation-only" in methods:
        s0 = _series(rows, eps_r, lambda r: r["linf_omega0"])
        sf = _series(rows, eps_r, lambda r: r["linf_omegaf"])
        ok0, d0 = _window_check(s0, "classic", th["AC6_omega0_window"])
        okf, df = _window_check(sf, "logN2", th["AC6_omegaf_window"])
        if ok0 is not None:
            _criterion(out, "AC6", ok0 and okf, f"Omega_0 {d0}; Omega_f {df}")

    if "semilinear" in methods:
        s = _series(rows, eps_r, lambda r: r["balanced"])
        ok, det = _window_check(s, "logN", th["AC1_window"])
        its = max(r["iters"] for r in rows)
        if ok is not None:
            ok = ok and s[-1][1] < s[0][1] and its <= th["AC7_newton"]
            _criterion(out, "AC7", ok, det + f"; max Newton iterations {its}")

    if "anisotropic" in methods:
        s = _series(rows, eps_r, lambda r: r["balanced"])
        ok, det = _window_check(s, "logN", th["AC8_window"])
        if ok is not None:
            _criterion(out, "AC8", ok, det)

    if "supercloseness" in methods:
        s = _series(rows, eps_r, lambda r: r["energy"])
        ok, det = _window_check(s, "logN2", th["AC9_window"])
        if ok is not None:
            _criterion(out, "AC9", ok, det)

    if "combination" in methods:
        sel = ex_for(th["AC10_eps"], th["AC10_N"])
        if sel:
            e = sel[0]
            ok1 = e["combined_balanced"] <= th["AC10_comb_factor"] * e["full_balanced"]
            ok2 = e["diff_balanced"] <= th["AC10_diff_factor"] * e["full_balanced"]
            _criterion(out, "AC10", ok1 and ok2,
                       f"combined {e['combined_balanced']:.4e}, full {e['full_balanced']:.4e}, "
                       f"difference {e['diff_balanced']:.4e}")

    if "mixed" in methods:
        s = _series(rows, eps_r, lambda r: r["eps"] ** 0.25 * r["h1"], th["AC11_N_max"])
        ok, det = _window_check(s, "logN", th["AC11_window"])
        consts = [e["stability_constant"] for e in extras if "stability_constant" in e]
        cvals = [e.get("c", 1.0) for e in extras if "stability_constant" in e]
        if ok is not None:
            stab_ok = all(math.isfinite(k) and k <= 2.0 / min(1.0, c) for k, c in zip(consts, cvals))
            worst = max(consts) if consts else math.nan
            _criterion(out, "AC11", ok and stab_ok, det + f"; max stability constant {worst:.4f}")

    return {"criteria": out, "passed": all(c["passed"] for c in out)}


def format_verdict(report: dict) -> str:
    lines = [f"{'criterion':<10}{'result':<8}detail"]
    for c in report["criteria"]:
        lines.append(f"{c['id']:<10}{'PASS' if c['passed'] else 'FAIL':<8}{c['detail']}")
    lines.append(f"overall: {'PASS' if report['passed'] else 'FAIL'}")
    return "\n".join(lines)


def solve_single(problem: str, eps: float, N: int, method: str, output: str,
                 c: float = 1.0, lambda0: float = 2.0) -> StudyResult:
    cfg = StudyConfig(problem=problem, method=method, eps=[eps], N=[N], c=c,
                      lambda0=lambda0, output=output)
    return run_study(cfg)


__all__ = ["StudyConfig", "ConfigError", "parse_config", "load_config", "run_case", "run_study",
           "verdict", "format_verdict", "read_csv", "rows_to_csv", "COLUMNS", "MODELS",
           "DEFAULT_THRESHOLDS", "StudyResult", "summary_path", "solve_single"]
