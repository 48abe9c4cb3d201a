"""Bilinear (Q1) finite elements on tensor-product rectangle meshes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .linalg import LinearSolveReport, SolverError, from_triplets, solve_spd
from .mesh import Mesh2D
from .quadrature import cell_points, reference_square

log = logging.getLogger(__name__)

ASSEMBLY_ORDER = 2
LOAD_ORDER = 5


class NewtonError(SolverError):
    pass


def q1_basis(s, t):
    """Reference basis on [0, 1]^2, counter-clockwise from (0, 0); shape (4, len(s))."""
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    return np.stack([(1 - s) * (1 - t), s * (1 - t), s * t, (1 - s) * t])


def q1_basis_grad(s, t):
    """Reference derivatives (d/ds, d/dt), each of shape (4, len(s))."""
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    ds = np.stack([-(1 - t), 1 - t, t, -t])
    dt = np.stack([-(1 - s), -s, s, 1 - s])
    return ds, dt


@lru_cache(maxsize=None)
def reference_matrices(order: int = ASSEMBLY_ORDER):
    """Unscaled element matrices on the unit square: (Ass, Att, Mref).

    The matrices of a cell hx x hy are (hy/hx) Ass, (hx/hy) Att and hx hy Mref.
    """
    s, t, w = reference_square(order)
    B = q1_basis(s, t)
    ds, dt = q1_basis_grad(s, t)
    # symmetrize so that assembled matrices are bit-symmetric
    sym = lambda A: 0.5 * (A + A.T)
    return sym((ds * w) @ ds.T), sym((dt * w) @ dt.T), sym((B * w) @ B.T)


class FeSpaceQ1:
    """Q1 space on ``mesh``; the Dirichlet space is the restriction to ``interior``."""

    def __init__(self, mesh: Mesh2D):
        self.mesh = mesh
        nx1, ny1 = mesh.Nx + 1, mesh.Ny + 1
        i, j = np.meshgrid(np.arange(nx1), np.arange(ny1))
        self.boundary = ((i == 0) | (i == nx1 - 1) | (j == 0) | (j == ny1 - 1)).ravel()
        self.interior = np.flatnonzero(~self.boundary)
        self.cell_nodes = mesh.cell_nodes()
        x0, x1, y0, y1 = mesh.cell_bounds()
        self.hx = x1 - x0
        self.hy = y1 - y0

    @property
    def ndof(self) -> int:
        return self.mesh.n_nodes

    def _assemble_local(self, local):
        """Sum (n_cells, 4, 4) element matrices into a CSR matrix."""
        cn = self.cell_nodes
        rows = np.broadcast_to(cn[:, :, None], local.shape)
        cols = np.broadcast_to(cn[:, None, :], local.shape)
        return from_triplets(rows, cols, local, (self.ndof, self.ndof))

    @cached_property
    def matrices(self):
        """Full (Kx, Ky, M): x-stiffness, y-stiffness and mass, no boundary conditions."""
        Ass, Att, Mref = reference_matrices()
        hx, hy = self.hx[:, None, None], self.hy[:, None, None]
        Kx = self._assemble_local(hy / hx * Ass)
        Ky = self._assemble_local(hx / hy * Att)
        M = self._assemble_local(hx * hy * Mref)
        return Kx, Ky, M

    def restrict(self, A):
        idx = self.interior
        return A[idx][:, idx]

    def load_vector(self, f, order: int = LOAD_ORDER) -> np.ndarray:
        """(f, phi_i) for every node by cellwise Gauss quadrature."""
        x, y, w, s, t = cell_points(self.mesh, order)
        return self.scatter(((f(x, y) * w) @ q1_basis(s, t).T))

    def scatter(self, local: np.ndarray) -> np.ndarray:
        """Accumulate (n_cells, 4) local contributions into a node vector."""
        return np.bincount(self.cell_nodes.ravel(), weights=local.ravel(), minlength=self.ndof)

    def weighted_mass(self, weight, order: int = LOAD_ORDER):
        """Mass matrix of the weight function, given at quadrature points (n_cells, nq)."""
        _, _, w, s, t = cell_points(self.mesh, order)
        B = q1_basis(s, t)
        local = np.einsum("cq,aq,bq->cab", weight * w, B, B)
        return self._assemble_local(local)

    def function(self, coef=None) -> "FeFunction":
        return FeFunction(self, np.zeros(self.ndof) if coef is None else np.asarray(coef, dtype=float))

    def from_interior(self, vals) -> "FeFunction":
        coef = np.zeros(self.ndof)
        coef[self.interior] = vals
        return FeFunction(self, coef)


@dataclass
class FeFunction:
    space: FeSpaceQ1
    coef: np.ndarray
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.coef.shape != (self.space.ndof,):
            raise ValueError(f"expected {self.space.ndof} coefficients, got {self.coef.shape}")

    def __add__(self, other):
        _same_space(self, other)
        return FeFunction(self.space, self.coef + other.coef)

    def __sub__(self, other):
        _same_space(self, other)
        return FeFunction(self.space, self.coef - other.coef)

    def __mul__(self, s: float):
        return FeFunction(self.space, s * self.coef)

    __rmul__ = __mul__

    def on_cells(self, s, t) -> np.ndarray:
        """Values at reference points (s, t) of every cell: (n_cells, len(s))."""
        return self.coef[self.space.cell_nodes] @ q1_basis(s, t)

    def grad_on_cells(self, s, t) -> tuple[np.ndarray, np.ndarray]:
        ds, dt = q1_basis_grad(s, t)
        loc = self.coef[self.space.cell_nodes]
        return (loc @ ds) / self.space.hx[:, None], (loc @ dt) / self.space.hy[:, None]

    def _locate(self, x, y):
        mesh = self.space.mesh
        xn, yn = mesh.mx.nodes, mesh.my.nodes
        i = np.clip(np.searchsorted(xn, x, side="right") - 1, 0, mesh.Nx - 1)
        j = np.clip(np.searchsorted(yn, y, side="right") - 1, 0, mesh.Ny - 1)
        s = (x - xn[i]) / (xn[i + 1] - xn[i])
        t = (y - yn[j]) / (yn[j + 1] - yn[j])
        return j * mesh.Nx + i, s, t

    def __call__(self, x, y) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        cell, s, t = self._locate(x.ravel(), y.ravel())
        loc = self.coef[self.space.cell_nodes[cell]]
        return np.einsum("pa,ap->p", loc, q1_basis(s, t)).reshape(x.shape)

    def gradient(self, x, y) -> tuple[np.ndarray, np.ndarray]:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        cell, s, t = self._locate(x.ravel(), y.ravel())
        loc = self.coef[self.space.cell_nodes[cell]]
        ds, dt = q1_basis_grad(s, t)
        gx = np.einsum("pa,ap->p", loc, ds) / self.space.hx[cell]
        gy = np.einsum("pa,ap->p", loc, dt) / self.space.hy[cell]
        return gx.reshape(x.shape), gy.reshape(x.shape)


def _same_space(a: FeFunction, b: FeFunction):
    if a.space is not b.space:
        raise ValueError("FE functions live on different spaces")


def assemble(space: FeSpaceQ1, d_x: float, d_y: float, c: float):
    """Stiffness K = d_x (dx, dx) + d_y (dy, dy) and mass M, both without BCs.

    The Dirichlet system is ``space.restrict(K + c * M)``.
    """
    if d_x < 0 or d_y < 0 or d_x == d_y == 0:
        raise ValueError("diffusion coefficients must be non-negative and not both zero")
    if not c > 0:
        raise ValueError("reaction coefficient must be positive")
    Kx, Ky, M = space.matrices
    return (d_x * Kx + d_y * Ky).tocsr(), M


def _require(report: LinearSolveReport, what: str):
    if not report.converged:
        raise SolverError(f"{what}: linear solver stopped at residual {report.residual:.3e} "
                          f"after {report.iterations} iterations", report)


def solve_linear(problem, space: FeSpaceQ1, tol: float = 1e-12, order: int = LOAD_ORDER,
                 f=None) -> FeFunction:
    """Galerkin solution of -d_x u_xx - d_y u_yy + c u = f, u = 0 on the boundary."""
    d_x, d_y = problem.diffusion
    K, M = assemble(space, d_x, d_y, problem.c)
    A = space.restrict(K + problem.c * M)
    b = space.load_vector(problem.f if f is None else f, order)[space.interior]
    x, report = solve_spd(A, b, tol)
    _require(report, "solve_linear")
    uN = space.from_interior(x)
    uN.info["report"] = report
    return uN


def solve_semilinear(problem, space: FeSpaceQ1, newton_tol: float = 1e-10, max_iter: int = 20,
                     order: int = LOAD_ORDER, lin_tol: float = 1e-13) -> FeFunction:
    """Newton's method for eps (grad u, grad v) + (g(., u), v) = 0, from u = 0."""
    Kx, Ky, _ = space.matrices
    K = space.restrict(problem.eps * (Kx + Ky))
    x, y, w, s, t = cell_points(space.mesh, order)
    B = q1_basis(s, t)
    interior = space.interior

    def residual(uh: FeFunction):
        vals = uh.on_cells(s, t)
        G = space.scatter((problem.g(x, y, vals) * w) @ B.T)[interior]
        return K @ uh.coef[interior] + G, vals

    uh = space.function()
    F, vals = residual(uh)
    r0 = np.linalg.norm(F)
    history = [r0]
    lin_iters = 0
    it = 0
    while history[-1] > newton_tol * r0:
        if it == max_iter:
            raise NewtonError(f"Newton did not converge in {max_iter} iterations; "
                              f"last residual {history[-1]:.3e} (initial {r0:.3e})")
        J = K + space.restrict(space.weighted_mass(problem.g_u(x, y, vals), order))
        delta, rep = solve_spd(J, -F, lin_tol)
        if not rep.converged and rep.residual > 1e-10:
            raise NewtonError(f"Newton linear solve failed (residual {rep.residual:.3e})", rep)
        lin_iters += rep.iterations
        uh.coef[interior] += delta
        F, vals = residual(uh)
        history.append(np.linalg.norm(F))
        it += 1
        log.debug("newton step %d residual %.3e", it, history[-1])
    uh.info.update(newton_iterations=it, newton_history=history,
                   report=LinearSolveReport(lin_iters, history[-1] / r0 if r0 else 0.0,
                                            "newton-pcg", True))
    return uh


def galerkin_orthogonality_check(exact, uN: FeFunction, problem, order: int = 10) -> float:
    """max_i |d_x ((u - uN)_x, phi_i_x) + d_y ((u - uN)_y, phi_i_y) + c (u - uN, phi_i)|

    over interior basis functions, integrated with Gauss rules of ``order``.
    """
    space = uN.space
    d_x, d_y = problem.diffusion
    x, y, w, s, t = cell_points(space.mesh, order)
    B = q1_basis(s, t)
    ds, dt = q1_basis_grad(s, t)
    ux, uy = exact.grad_u(x, y)
    ex = exact.u(x, y) - uN.on_cells(s, t)
    gx, gy = uN.grad_on_cells(s, t)
    ex_x = (ux - gx) / space.hx[:, None]
    ex_y = (uy - gy) / space.hy[:, None]
    local = (d_x * ex_x * w) @ ds.T + (d_y * ex_y * w) @ dt.T + (problem.c * ex * w) @ B.T
    R = space.scatter(local)[space.interior]
    return float(np.max(np.abs(R))) if R.size else 0.0
