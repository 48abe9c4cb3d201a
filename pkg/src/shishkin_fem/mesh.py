"""Piecewise-uniform Shishkin meshes on [0, 1] and their tensor products."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Mesh1D:
    nodes: np.ndarray
    N: int
    lam: float
    h: float
    H: float
    lambda0: float
    eps: float
    c_star: float

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.nodes)

    @property
    def uniform(self) -> bool:
        return self.lam == 0.25


def transition_point(N: int, eps: float, c_star: float, lambda0: float,
                     log_N: int | None = None) -> float:
    """lambda = min(1/4, lambda0 * sqrt(eps / c_star) * ln N).

    ``log_N`` replaces the argument of the logarithm; the combination
    technique uses the fine-scale N there so coarse meshes stay nested.
    """
    n_log = N if log_N is None else log_N
    return min(0.25, lambda0 * math.sqrt(eps / c_star) * math.log(n_log))


def shishkin_1d(N: int, eps: float, c_star: float = 0.5, lambda0: float = 2.0,
                log_N: int | None = None) -> Mesh1D:
    if not isinstance(N, (int, np.integer)) or N < 4 or N % 4:
        raise ValueError(f"N must be a positive multiple of 4, got {N!r}")
    for name, value in (("eps", eps), ("c_star", c_star), ("lambda0", lambda0)):
        if not value > 0:
            raise ValueError(f"{name} must be positive, got {value!r}")
    if log_N is not None and log_N < 2:
        raise ValueError("log_N must be at least 2")
    N = int(N)
    lam = transition_point(N, eps, c_star, lambda0, log_N)
    h = 4.0 * lam / N
    H = 2.0 * (1.0 - 2.0 * lam) / N
    q = N // 4
    # endpoints of each segment are pinned, interior points are start + k*step
    left = np.linspace(0.0, lam, q + 1)
    middle = lam + H * np.arange(1, 2 * q)
    right = (1.0 - lam) + h * np.arange(q + 1)
    right[0], right[-1] = 1.0 - lam, 1.0
    nodes = np.concatenate([left, middle, right])
    return Mesh1D(nodes=nodes, N=N, lam=lam, h=h, H=H, lambda0=lambda0,
                  eps=eps, c_star=c_star)


def uniform_1d(N: int) -> Mesh1D:
    """Uniform mesh with step 1/N (lambda capped at 1/4)."""
    return shishkin_1d(N, eps=1.0, c_star=1.0, lambda0=2.0)


@dataclass(frozen=True)
class Mesh2D:
    """Tensor-product mesh of two 1D meshes.

    Nodes are numbered x-fastest: node (i, j) has index ``j * (Nx + 1) + i``;
    cell (i, j) likewise ``j * Nx + i``.  ``x_layers_only`` selects the coarse
    region (lam_x, 1-lam_x) x (0, 1) used for the anisotropic problem.
    """

    mx: Mesh1D
    my: Mesh1D
    x_layers_only: bool = False
    coarse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        xc = _coarse_intervals(self.mx)
        if self.x_layers_only:
            yc = np.ones(self.my.N, dtype=bool)
        else:
            yc = _coarse_intervals(self.my)
        object.__setattr__(self, "coarse", np.logical_and.outer(yc, xc).ravel())

    @property
    def Nx(self) -> int:
        return self.mx.N

    @property
    def Ny(self) -> int:
        return self.my.N

    @property
    def n_cells(self) -> int:
        return self.Nx * self.Ny

    @property
    def n_nodes(self) -> int:
        return (self.Nx + 1) * (self.Ny + 1)

    def cell_bounds(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Arrays (x0, x1, y0, y1) of length n_cells."""
        x, y = self.mx.nodes, self.my.nodes
        x0, y0 = np.meshgrid(x[:-1], y[:-1])
        x1, y1 = np.meshgrid(x[1:], y[1:])
        return x0.ravel(), x1.ravel(), y0.ravel(), y1.ravel()

    def cell_areas(self) -> np.ndarray:
        return np.outer(self.my.widths, self.mx.widths).ravel()

    def cell_nodes(self) -> np.ndarray:
        """(n_cells, 4) node indices, counter-clockwise from the lower-left."""
        nx1 = self.Nx + 1
        i, j = np.meshgrid(np.arange(self.Nx), np.arange(self.Ny))
        ll = (j * nx1 + i).ravel()
        return np.stack([ll, ll + 1, ll + 1 + nx1, ll + nx1], axis=1)

    def node_coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        X, Y = np.meshgrid(self.mx.nodes, self.my.nodes)
        return X.ravel(), Y.ravel()

    @property
    def fine(self) -> np.ndarray:
        return ~self.coarse


def _coarse_intervals(m: Mesh1D) -> np.ndarray:
    lo, hi = m.nodes[:-1], m.nodes[1:]
    return (lo >= m.lam) & (hi <= 1.0 - m.lam)


def tensor_mesh(mx: Mesh1D, my: Mesh1D, x_layers_only: bool = False) -> Mesh2D:
    return Mesh2D(mx, my, x_layers_only)


def shishkin_2d(N: int, eps: float, c_star: float = 0.5, lambda0: float = 2.0,
                Ny: int | None = None, log_N: int | None = None) -> Mesh2D:
    """Square-domain Shishkin mesh, optionally with a different y count."""
    mx = shishkin_1d(N, eps, c_star, lambda0, log_N)
    my = mx if Ny is None or Ny == N else shishkin_1d(Ny, eps, c_star, lambda0, log_N)
    return Mesh2D(mx, my)
