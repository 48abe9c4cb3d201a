"""Error measures: L2, sampled L-infinity, H1 seminorms, energy and balanced norms."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .fem import FeFunction
from .quadrature import cell_points

ERROR_ORDER = 5
LATTICE = np.linspace(0.0, 1.0, 5)


@dataclass(frozen=True)
class ErrorReport:
    eps: float
    l2: float
    linf_omega0: float
    linf_omegaf: float
    h1_semi: float
    h1_x: float
    h1_y: float
    order: int

    @property
    def linf(self) -> float:
        return max(self.linf_omega0, self.linf_omegaf)

    @property
    def energy(self) -> float:
        return math.sqrt(self.eps) * self.h1_semi + self.l2

    @property
    def balanced(self) -> float:
        return self.eps ** 0.25 * self.h1_semi + self.l2

    @property
    def energy_aniso(self) -> float:
        return math.sqrt(self.eps) * self.h1_x + self.h1_y + self.l2

    @property
    def balanced_aniso(self) -> float:
        return self.eps ** 0.25 * self.h1_x + self.h1_y + self.l2

    def as_dict(self) -> dict:
        d = asdict(self)
        d.update(energy=self.energy, balanced=self.balanced,
                 energy_aniso=self.energy_aniso, balanced_aniso=self.balanced_aniso)
        return d


def lattice_points():
    s, t = np.meshgrid(LATTICE, LATTICE)
    return s.ravel(), t.ravel()


def linf_split(mesh, values: np.ndarray) -> tuple[float, float]:
    """Max |values| over coarse (Omega_0) and fine cells; values are (n_cells, np)."""
    a = np.abs(values)
    coarse = mesh.coarse
    l0 = float(a[coarse].max()) if coarse.any() else 0.0
    lf = float(a[~coarse].max()) if (~coarse).any() else 0.0
    return l0, lf


def error_report(exact, fe: FeFunction, eps: float, order: int = ERROR_ORDER) -> ErrorReport:
    """Norms of ``exact.u - fe`` by cellwise Gauss quadrature of the given order."""
    space = fe.space
    mesh = space.mesh
    x, y, w, s, t = cell_points(mesh, order)
    e = exact.u(x, y) - fe.on_cells(s, t)
    ux, uy = exact.grad_u(x, y)
    gx, gy = fe.grad_on_cells(s, t)
    ex, ey = ux - gx, uy - gy
    l2 = math.sqrt(float(np.sum(w * e * e)))
    h1x = math.sqrt(float(np.sum(w * ex * ex)))
    h1y = math.sqrt(float(np.sum(w * ey * ey)))

    ls, lt = lattice_points()
    x0, x1, y0, y1 = mesh.cell_bounds()
    xl = x0[:, None] + (x1 - x0)[:, None] * ls
    yl = y0[:, None] + (y1 - y0)[:, None] * lt
    l0, lf = linf_split(mesh, exact.u(xl, yl) - fe.on_cells(ls, lt))
    return ErrorReport(eps, l2, l0, lf, math.hypot(h1x, h1y), h1x, h1y, order)


def fe_pair_norms(a: FeFunction, b: FeFunction, eps: float, c: float = 1.0) -> dict:
    """Norms of a - b from the mass and stiffness quadratic forms (no quadrature error)."""
    if a.space is not b.space:
        raise ValueError("FE functions live on different spaces")
    d = a.coef - b.coef
    Kx, Ky, M = a.space.matrices
    l2 = math.sqrt(max(float(d @ (M @ d)), 0.0))
    h1x = math.sqrt(max(float(d @ (Kx @ d)), 0.0))
    h1y = math.sqrt(max(float(d @ (Ky @ d)), 0.0))
    h1 = math.hypot(h1x, h1y)
    return {
        "l2": l2, "h1": h1, "h1x": h1x, "h1y": h1y,
        "energy": math.sqrt(eps) * h1 + l2,
        "balanced": eps ** 0.25 * h1 + l2,
        "energy_aniso": math.sqrt(eps) * h1x + h1y + l2,
        "balanced_aniso": eps ** 0.25 * h1x + h1y + l2,
        "triple": math.sqrt(eps * h1 * h1 + c * l2 * l2),
    }


MODELS = {
    "classic": lambda N: 1.0 / N,
    "logN": lambda N: math.log(N) / N,
    "logN2": lambda N: (math.log(N) / N) ** 2,
    "logN32": lambda N: math.log(N) ** 1.5 / N,
}


def eoc(errors, model: str = "classic") -> list[float]:
    """Rates ln(e_i / e_{i+1}) / ln(g(N_i) / g(N_{i+1})) against the model decay g."""
    try:
        g = MODELS[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}; choose from {sorted(MODELS)}") from None
    errors = list(errors)
    if len(errors) < 2:
        raise ValueError("need at least two (N, error) pairs")
    rates = []
    for (n0, e0), (n1, e1) in zip(errors, errors[1:]):
        if not n1 > n0:
            raise ValueError("N must be strictly increasing")
        if not (e0 > 0 and e1 > 0):
            raise ValueError("errors must be positive")
        rates.append(math.log(e0 / e1) / math.log(g(n0) / g(n1)))
    return rates
