"""
Convergence studies from a config file
======================================

The study runner turns a flat key = value config into a CSV table plus a
verdict against the acceptance windows. The same runs are available from
the shell as ``study run demos/configs/galerkin.cfg``.
"""

import tempfile
from pathlib import Path

from shishkin_fem.study import format_verdict, parse_config, run_study

text = """
problem = linear-layered
method = galerkin
eps = 1e-8
N = 16, 32, 64
"""
out = Path(tempfile.mkdtemp()) / "galerkin.csv"
res = run_study(parse_config(text + f"output = {out}\n"))
print(out.read_text())
print(format_verdict(res.verdict))
