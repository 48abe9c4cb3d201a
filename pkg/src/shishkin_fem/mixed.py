"""RT0 x P0 mixed method for -eps Laplace(u) + c u = f with flux q = -grad(u).

Discrete problem: find (u, q) with

    eps (div q, w) + c (u, w) = (f, w)      for all piecewise constants w,
    eps (q, v) - eps (div v, u) = 0          for all RT0 fields v.

The second block row is negated so the saddle-point matrix is symmetric:

    [[ eps M_RT, -eps B^T ],   [q]   [  0 ]
     [ -eps B,   -c M_P0  ]] . [u] = [ -F ]
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .linalg import DENSE_LIMIT, LinearSolveReport, SolverError, solve_sym_indefinite
from .mesh import Mesh2D
from .quadrature import cell_points
from .rt0 import Rt0Function, Rt0Space

log = logging.getLogger(__name__)

RHS_ORDER = 5
ERROR_ORDER = 10


@dataclass
class MixedSolution:
    q: Rt0Function
    u: np.ndarray
    report: LinearSolveReport
    eps: float
    c: float
    stability_constant: float = math.nan

    @property
    def space(self) -> Rt0Space:
        return self.q.space


def assemble_mixed(mesh: Mesh2D, eps: float, c: float, f, order: int = RHS_ORDER):
    """Symmetric saddle-point matrix, right-hand side and the RT0 space."""
    space = Rt0Space(mesh)
    areas = mesh.cell_areas()
    A = sp.bmat([[eps * space.mass, -eps * space.divergence.T],
                 [-eps * space.divergence, sp.diags(-c * areas)]], format="csr")
    A.sort_indices()
    x, y, w, _, _ = cell_points(mesh, order)
    F = np.sum(f(x, y) * w, axis=1)
    rhs = np.concatenate([np.zeros(space.n_edges), -F])
    return A, rhs, space


def block_preconditioner(space: Rt0Space, eps: float, c: float, kind: str = "schur"):
    """SPD block-diagonal preconditioner for MINRES, returned as v -> P^-1 v.

    ``diagonal``: diag(eps diag(M_RT), c |K|).
    ``schur``: the P0 block is c |K| + eps B diag(M_RT)^-1 B^T, factorized once.
    """
    d = eps * space.mass.diagonal()
    areas = space.mesh.cell_areas()
    ne = space.n_edges
    if kind == "diagonal":
        pinv = 1.0 / np.concatenate([d, c * areas])
        return lambda v: pinv * v
    if kind != "schur":
        raise ValueError(f"unknown preconditioner {kind!r}")
    B = space.divergence
    S = (sp.diags(c * areas) + eps * eps * (B @ sp.diags(1.0 / d) @ B.T)).tocsc()
    lu = spla.splu(S)

    def apply(v):
        return np.concatenate([v[:ne] / d, lu.solve(v[ne:])])

    return apply


def _norm_f(f, mesh, order=ERROR_ORDER) -> float:
    x, y, w, _, _ = cell_points(mesh, order)
    return math.sqrt(float(np.sum(w * f(x, y) ** 2)))


def solve_mixed(problem, mesh: Mesh2D, tol: float = 1e-12, dense: bool | None = None,
                precond: str = "diagonal", order: int = RHS_ORDER, f=None) -> MixedSolution:
    if getattr(problem, "anisotropic", False):
        raise ValueError("the mixed method is implemented for the isotropic problem only")
    eps, c = problem.eps, problem.c
    f = problem.f if f is None else f
    A, rhs, space = assemble_mixed(mesh, eps, c, f, order)
    if dense is None:
        dense = A.shape[0] <= 1000
    if dense and A.shape[0] > DENSE_LIMIT:
        raise ValueError("system too large for the dense solver")
    P = None if dense else block_preconditioner(space, eps, c, precond)
    z, report = solve_sym_indefinite(A, rhs, tol=tol, precond=P, dense=dense)
    if report.residual > max(tol, 1e-10):
        raise SolverError(f"mixed solve: residual {report.residual:.3e}", report)
    ne = space.n_edges
    sol = MixedSolution(space.function(z[:ne]), z[ne:], report, eps, c)
    sol.stability_constant = stability_constant(sol, f)
    log.debug("mixed solve %s: %d iterations", report.method, report.iterations)
    return sol


def stability_constant(sol: MixedSolution, f) -> float:
    """(eps ||q||^2 + c/2 ||u||^2) / ||f||^2; bounded by 1/(2c) for the exact discrete solution."""
    nf = _norm_f(f, sol.space.mesh)
    q2 = float(sol.q.flux @ (sol.space.mass @ sol.q.flux))
    u2 = float(np.sum(sol.space.mesh.cell_areas() * sol.u ** 2))
    energy = sol.eps * q2 + 0.5 * sol.c * u2
    if nf == 0.0:
        return 0.0 if energy == 0.0 else math.inf
    return energy / nf ** 2


def conservation_defect(sol: MixedSolution, f, order: int = RHS_ORDER) -> np.ndarray:
    """Per cell: eps * (signed edge fluxes) + c u |K| - integral of f."""
    mesh = sol.space.mesh
    x, y, w, _, _ = cell_points(mesh, order)
    F = np.sum(f(x, y) * w, axis=1)
    return sol.eps * (sol.space.divergence @ sol.q.flux) + sol.c * sol.u * mesh.cell_areas() - F


def mixed_error_report(exact, sol: MixedSolution, order: int = ERROR_ORDER) -> dict:
    """Errors of the scalar and of the flux q = -grad(u), by cellwise Gauss quadrature.

    ``flux_grad_minus`` is eps^1/4 ||grad(u) - q_N||, the other sign convention;
    it does not decay since q_N approximates -grad(u).
    """
    mesh = sol.space.mesh
    x, y, w, s, t = cell_points(mesh, order)
    eu = exact.u(x, y) - sol.u[:, None]
    ux, uy = exact.grad_u(x, y)
    qx, qy = sol.q.on_cells(s, t)
    l2u = math.sqrt(float(np.sum(w * eu * eu)))
    fx, fy = -ux - qx, -uy - qy
    flux_x = math.sqrt(float(np.sum(w * fx * fx)))
    flux_y = math.sqrt(float(np.sum(w * fy * fy)))
    flux = math.hypot(flux_x, flux_y)
    minus = math.sqrt(float(np.sum(w * ((ux - qx) ** 2 + (uy - qy) ** 2))))
    e4 = sol.eps ** 0.25
    return {
        "l2_u": l2u,
        "flux": flux,
        "flux_x": flux_x,
        "flux_y": flux_y,
        "flux_weighted": e4 * flux,
        "flux_grad_plus": e4 * flux,
        "flux_grad_minus": e4 * minus,
        "balanced": e4 * flux + l2u,
    }
