"""Lowest-order Raviart-Thomas space on rectangle meshes.

Degrees of freedom are the normal components on edges; all normals point in
+x (vertical edges) or +y (horizontal edges).  Vertical edge (i, j) sits at
x_i, y in [y_j, y_j+1] and has index j*(Nx+1) + i; horizontal edge (i, j) sits
at y_j and has index n_vertical + j*Nx + i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .linalg import from_triplets
from .mesh import Mesh2D
from .quadrature import gauss_legendre

EDGE_ORDER = 5

MASS_1D = np.array([[1.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 3.0]])


class Rt0Space:
    def __init__(self, mesh: Mesh2D):
        self.mesh = mesh
        Nx, Ny = mesh.Nx, mesh.Ny
        self.n_vertical = (Nx + 1) * Ny
        self.n_edges = self.n_vertical + Nx * (Ny + 1)
        i, j = np.meshgrid(np.arange(Nx), np.arange(Ny))
        i, j = i.ravel(), j.ravel()
        left = j * (Nx + 1) + i
        bottom = self.n_vertical + j * Nx + i
        # (n_cells, 4): left, right, bottom, top
        self.cell_edges = np.stack([left, left + 1, bottom, bottom + Nx], axis=1)
        x0, x1, y0, y1 = mesh.cell_bounds()
        self.hx, self.hy = x1 - x0, y1 - y0

    @cached_property
    def mass(self):
        hx, hy = self.hx[:, None, None], self.hy[:, None, None]
        ce = self.cell_edges
        area = hx * hy
        rows = np.concatenate([np.broadcast_to(ce[:, :2, None], (len(ce), 2, 2)),
                               np.broadcast_to(ce[:, 2:, None], (len(ce), 2, 2))], axis=1)
        cols = np.concatenate([np.broadcast_to(ce[:, None, :2], (len(ce), 2, 2)),
                               np.broadcast_to(ce[:, None, 2:], (len(ce), 2, 2))], axis=1)
        vals = np.concatenate([area * MASS_1D, area * MASS_1D], axis=1)
        return from_triplets(rows, cols, vals, (self.n_edges, self.n_edges))

    @cached_property
    def divergence(self):
        """B[K, e] = integral over cell K of div(phi_e): signed edge lengths."""
        n = self.mesh.n_cells
        cells = np.repeat(np.arange(n), 4)
        vals = np.stack([-self.hy, self.hy, -self.hx, self.hx], axis=1)
        return from_triplets(cells, self.cell_edges.ravel(), vals.ravel(), (n, self.n_edges))

    def edge_geometry(self):
        """Per edge: (start point, unit tangent direction, length, normal axis)."""
        mesh = self.mesh
        xn, yn = mesh.mx.nodes, mesh.my.nodes
        Xv, Yv = np.meshgrid(xn, yn[:-1])
        Lv = np.broadcast_to(np.diff(yn)[:, None], Xv.shape)
        Xh, Yh = np.meshgrid(xn[:-1], yn)
        Lh = np.broadcast_to(np.diff(xn)[None, :], Xh.shape)
        x = np.concatenate([Xv.ravel(), Xh.ravel()])
        y = np.concatenate([Yv.ravel(), Yh.ravel()])
        length = np.concatenate([Lv.ravel(), Lh.ravel()])
        vertical = np.arange(self.n_edges) < self.n_vertical
        return x, y, length, vertical

    def function(self, flux=None) -> "Rt0Function":
        return Rt0Function(self, np.zeros(self.n_edges) if flux is None else np.asarray(flux, float))


@dataclass
class Rt0Function:
    space: Rt0Space
    flux: np.ndarray

    def __post_init__(self):
        if self.flux.shape != (self.space.n_edges,):
            raise ValueError(f"expected {self.space.n_edges} edge values, got {self.flux.shape}")

    def on_cells(self, s, t) -> tuple[np.ndarray, np.ndarray]:
        """Components (q_x, q_y) at reference points of every cell."""
        loc = self.flux[self.space.cell_edges]
        s = np.asarray(s)[None, :]
        t = np.asarray(t)[None, :]
        qx = loc[:, :1] * (1 - s) + loc[:, 1:2] * s
        qy = loc[:, 2:3] * (1 - t) + loc[:, 3:4] * t
        return qx, qy

    def divergence_on_cells(self) -> np.ndarray:
        loc = self.flux[self.space.cell_edges]
        return (loc[:, 1] - loc[:, 0]) / self.space.hx + (loc[:, 3] - loc[:, 2]) / self.space.hy

    def __call__(self, x, y):
        mesh = self.space.mesh
        xn, yn = mesh.mx.nodes, mesh.my.nodes
        x = np.asarray(x, float)
        y = np.asarray(y, float)
        i = np.clip(np.searchsorted(xn, x, side="right") - 1, 0, mesh.Nx - 1)
        j = np.clip(np.searchsorted(yn, y, side="right") - 1, 0, mesh.Ny - 1)
        s = (x - xn[i]) / (xn[i + 1] - xn[i])
        t = (y - yn[j]) / (yn[j + 1] - yn[j])
        loc = self.flux[self.space.cell_edges[j * mesh.Nx + i]]
        return loc[..., 0] * (1 - s) + loc[..., 1] * s, loc[..., 2] * (1 - t) + loc[..., 3] * t


def rt0_canonical_interpolant(field, mesh_or_space, order: int = EDGE_ORDER) -> Rt0Function:
    """Edge value = mean normal component of ``field(x, y) -> (vx, vy)`` over the edge."""
    space = mesh_or_space if isinstance(mesh_or_space, Rt0Space) else Rt0Space(mesh_or_space)
    x, y, length, vertical = space.edge_geometry()
    rule = gauss_legendre(order)
    s = 0.5 * (rule.points + 1.0)
    w = 0.5 * rule.weights
    px = x[:, None] + np.where(vertical, 0.0, length)[:, None] * s
    py = y[:, None] + np.where(vertical, length, 0.0)[:, None] * s
    vx, vy = field(px, py)
    vn = np.where(vertical[:, None], vx, vy)
    return Rt0Function(space, vn @ w)
