"""Two-scale combination technique for the Galerkin Q1 method.

u_comb = P u_{N, Nh} + P u_{Nh, N} - P u_{Nh, Nh}, where u_{a, b} is the Galerkin
solution on an a x b Shishkin mesh and P the (exact) prolongation to the
N x N mesh.  All 1D meshes use ln N of the fine scale in the transition
point, which makes the coarse meshes nested in the fine one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fem import FeFunction, FeSpaceQ1, solve_linear
from .mesh import Mesh2D, shishkin_1d

NEST_TOL = 1e-13


@dataclass
class TwoScaleSolution:
    fine_coarse: FeFunction
    coarse_fine: FeFunction
    coarse_coarse: FeFunction
    combined: FeFunction
    N: int
    N_hat: int
    reports: list = field(default_factory=list)

    @property
    def space(self) -> FeSpaceQ1:
        return self.combined.space


def _is_power_of_4(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0 and (n.bit_length() - 1) % 2 == 0


def combination_meshes(N: int, N_hat: int, eps: float, c_star: float, lambda0: float):
    mf = shishkin_1d(N, eps, c_star, lambda0)
    mc = shishkin_1d(N_hat, eps, c_star, lambda0, log_N=N) if N_hat != N else mf
    return mf, mc


def _nested(coarse: np.ndarray, fine: np.ndarray) -> bool:
    idx = np.clip(np.searchsorted(fine, coarse), 0, len(fine) - 1)
    lo = np.clip(idx - 1, 0, len(fine) - 1)
    d = np.minimum(np.abs(fine[idx] - coarse), np.abs(fine[lo] - coarse))
    return bool(np.all(d <= NEST_TOL))


def prolong(coarse: FeFunction, fine_space: FeSpaceQ1) -> FeFunction:
    """Represent a coarse Q1 function on a nested finer tensor mesh."""
    cm, fm = coarse.space.mesh, fine_space.mesh
    if not (_nested(cm.mx.nodes, fm.mx.nodes) and _nested(cm.my.nodes, fm.my.nodes)):
        raise ValueError("coarse mesh is not nested in the fine mesh")
    X, Y = fm.node_coordinates()
    return fine_space.function(coarse(X, Y))


def solve_combined(problem, N: int, N_hat: int | None = None, lambda0: float = 2.0,
                   c_star: float | None = None, tol: float = 1e-12,
                   fine_space: FeSpaceQ1 | None = None) -> TwoScaleSolution:
    if not (isinstance(N, (int, np.integer)) and N >= 16 and _is_power_of_4(int(N))):
        raise ValueError(f"N must be a power of 4 and at least 16, got {N!r}")
    N = int(N)
    N_hat = math.isqrt(N) if N_hat is None else int(N_hat)
    if N_hat % 4 or N_hat < 4 or N % N_hat:
        raise ValueError(f"N_hat must be a multiple of 4 dividing N, got {N_hat}")
    c_star = problem.c / 2 if c_star is None else c_star
    mf, mc = combination_meshes(N, N_hat, problem.eps, c_star, lambda0)
    if fine_space is None:
        fine_space = FeSpaceQ1(Mesh2D(mf, mf))
    parts, reports = [], []
    for mx, my in ((mf, mc), (mc, mf), (mc, mc)):
        space = fine_space if (mx is mf and my is mf) else FeSpaceQ1(Mesh2D(mx, my))
        uh = solve_linear(problem, space, tol)
        reports.append(uh.info["report"])
        parts.append(prolong(uh, fine_space))
    fc, cf, cc = parts
    combined = fc + cf - cc
    return TwoScaleSolution(fc, cf, cc, combined, N, N_hat, reports)
