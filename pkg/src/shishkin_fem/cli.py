"""Command line entry points: ``study run``, ``study verdict`` and ``solve``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .linalg import SolverError
from .study import (ConfigError, METHODS, StudyConfig, format_verdict, load_config, read_csv,
                    run_study, summary_path, verdict)
from .problems import PROBLEMS

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG, EXIT_SOLVER = 0, 1, 2, 3


def _report(result, out) -> int:
    if not result.complete:
        print(f"study aborted: {result.error}", file=sys.stderr)
        print(f"partial table written to {result.config.output}", file=out)
        return EXIT_SOLVER
    print(f"table written to {result.config.output}", file=out)
    if result.verdict["criteria"]:
        print(format_verdict(result.verdict), file=out)
    flagged = [e for e in result.extras if e["flags"] or e.get("quadrature_flag")]
    for e in flagged:
        print(f"flagged eps={e['eps']:g} N={e['N']}: "
              f"{', '.join(e['flags'] + (['quadrature'] if e.get('quadrature_flag') else []))}",
              file=out)
    return EXIT_PASS if result.verdict["passed"] else EXIT_FAIL


def _study_run(args, out) -> int:
    try:
        cfg = load_config(args.config)
        if args.output:
            cfg.output = args.output
    except (ConfigError, OSError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return _report(run_study(cfg), out)


def _load_thresholds(path):
    if path is None:
        return None
    data = json.loads(Path(path).read_text())
    return {k: tuple(v) if isinstance(v, list) else v for k, v in data.items()}


def _study_verdict(args, out) -> int:
    try:
        rows = read_csv(args.csv)
        thresholds = _load_thresholds(args.thresholds)
    except (OSError, ValueError) as exc:
        print(f"cannot read study table: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = Path(args.csv).read_text()
    if "# INCOMPLETE" in text:
        print("study table is marked incomplete", file=sys.stderr)
        return EXIT_SOLVER
    side = summary_path(args.csv)
    extras = json.loads(side.read_text())["extras"] if side.exists() else []
    report = verdict(rows, thresholds, extras)
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    else:
        print(format_verdict(report), file=out)
    return EXIT_PASS if report["passed"] else EXIT_FAIL


def study_main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = argparse.ArgumentParser(prog="study", description="convergence studies on Shishkin meshes")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run the (eps, N) grid described by a config file")
    run.add_argument("config")
    run.add_argument("-o", "--output", help="override the CSV path from the config")
    ver = sub.add_parser("verdict", help="evaluate acceptance thresholds on a study table")
    ver.add_argument("csv")
    ver.add_argument("--thresholds", help="JSON file overriding default thresholds")
    ver.add_argument("--json", action="store_true", help="print the machine-readable report")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_PASS
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.command == "run":
        return _study_run(args, out)
    return _study_verdict(args, out)


def solve_main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = argparse.ArgumentParser(prog="solve", description="single solve with error table")
    parser.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    parser.add_argument("--eps", required=True, type=float)
    parser.add_argument("--n", required=True, type=int)
    parser.add_argument("--method", default="galerkin", choices=METHODS)
    parser.add_argument("--out", required=True)
    parser.add_argument("--lambda0", type=float, default=2.0)
    parser.add_argument("--c", type=float, default=1.0)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_PASS
    try:
        cfg = StudyConfig(problem=args.problem, method=args.method, eps=[args.eps], N=[args.n],
                          c=args.c, lambda0=args.lambda0, output=args.out)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    result = run_study(cfg)
    if not result.complete:
        print(f"solve failed: {result.error}", file=sys.stderr)
        return EXIT_SOLVER
    row = result.rows[0]
    for key in ("l2", "linf_omega0", "linf_omegaf", "h1", "energy", "balanced", "iters", "residual"):
        print(f"{key:>12} {row[key]:.6e}" if isinstance(row[key], float) else f"{key:>12} {row[key]}",
              file=out)
    return EXIT_PASS


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "solve":
        return solve_main(argv[1:])
    if argv and argv[0] == "study":
        argv = argv[1:]
    return study_main(argv)
