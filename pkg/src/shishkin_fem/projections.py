"""Interpolation and projection operators onto the Q1 space.

Every projector maps onto the homogeneous-Dirichlet subspace unless noted;
the plain L2 projection can also target the full space (``dirichlet=False``).
"""

from __future__ import annotations

import numpy as np

from .fem import FeFunction, FeSpaceQ1, NewtonError, q1_basis, q1_basis_grad, _require
from .linalg import solve_spd
from .norms import lattice_points
from .quadrature import cell_points
from .rt0 import Rt0Function, rt0_canonical_interpolant  # noqa: F401  (re-export)

PROJECTION_ORDER = 5


def _field(exact):
    return exact.u if hasattr(exact, "u") else exact


def lagrange_interpolant(exact, space: FeSpaceQ1) -> FeFunction:
    X, Y = space.mesh.node_coordinates()
    return space.function(_field(exact)(X, Y))


def l2_projection(exact, space: FeSpaceQ1, dirichlet: bool = True,
                  order: int = PROJECTION_ORDER, tol: float = 1e-13) -> FeFunction:
    """Solve M p = (u, phi_i)."""
    M = space.matrices[2]
    b = space.load_vector(_field(exact), order)
    if not dirichlet:
        p, rep = solve_spd(M, b, tol)
        _require(rep, "l2_projection")
        out = space.function(p)
    else:
        p, rep = solve_spd(space.restrict(M), b[space.interior], tol)
        _require(rep, "l2_projection")
        out = space.from_interior(p)
    out.info["report"] = rep
    return out


def linf_stability_probe(projector, exact, space: FeSpaceQ1) -> float:
    """||P u||_inf / ||u||_inf, both sampled on a 5x5 lattice in every cell."""
    return linf_ratio(projector(exact, space), exact)


def linf_ratio(pu: FeFunction, exact) -> float:
    space = pu.space
    s, t = lattice_points()
    x0, x1, y0, y1 = space.mesh.cell_bounds()
    x = x0[:, None] + (x1 - x0)[:, None] * s
    y = y0[:, None] + (y1 - y0)[:, None] * t
    num = np.max(np.abs(pu.on_cells(s, t)))
    den = np.max(np.abs(_field(exact)(x, y)))
    return float(num / den)


def semilinear_projection(problem, exact, space: FeSpaceQ1, tol: float = 1e-11,
                          max_iter: int = 30, order: int = PROJECTION_ORDER) -> FeFunction:
    """pi u with (g(., pi u), v) = (g(., u), v) for all v, by Newton from zero."""
    x, y, w, s, t = cell_points(space.mesh, order)
    B = q1_basis(s, t)
    interior = space.interior
    target = space.scatter((problem.g(x, y, _field(exact)(x, y)) * w) @ B.T)[interior]

    def residual(ph):
        vals = ph.on_cells(s, t)
        return space.scatter((problem.g(x, y, vals) * w) @ B.T)[interior] - target, vals

    ph = space.function()
    F, vals = residual(ph)
    r0 = np.linalg.norm(F)
    r = r0
    it = 0
    while r > tol * r0:
        if it == max_iter:
            raise NewtonError(f"projection Newton stalled at residual {r:.3e}")
        J = space.restrict(space.weighted_mass(problem.g_u(x, y, vals), order))
        delta, rep = solve_spd(J, -F, 1e-14)
        if rep.residual > 1e-11:
            raise NewtonError(f"projection Newton linear solve failed ({rep.residual:.3e})", rep)
        ph.coef[interior] += delta
        F, vals = residual(ph)
        r = np.linalg.norm(F)
        it += 1
    ph.info["newton_iterations"] = it
    return ph


def anisotropic_projection(problem, exact, space: FeSpaceQ1, order: int = PROJECTION_ORDER,
                           tol: float = 1e-12) -> FeFunction:
    """pi u with ((pi u - u)_y, v_y) + c (pi u - u, v) = 0 for all v."""
    c = problem.c
    _, Ky, M = space.matrices
    x, y, w, s, t = cell_points(space.mesh, order)
    B = q1_basis(s, t)
    _, dt = q1_basis_grad(s, t)
    _, uy = exact.grad_u(x, y)
    local = ((uy * w / space.hy[:, None]) @ dt.T) + c * ((exact.u(x, y) * w) @ B.T)
    b = space.scatter(local)[space.interior]
    p, rep = solve_spd(space.restrict(Ky + c * M), b, tol)
    _require(rep, "anisotropic_projection")
    out = space.from_interior(p)
    out.info["report"] = rep
    return out
