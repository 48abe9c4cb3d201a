"""Continuous model problems and manufactured solutions with layers.

All layered solutions are built from the 1D profile

    phi(t) = 1 - psi(t),   psi(t) = (exp(-b t) + exp(-b (1 - t))) / (1 + exp(-b)),

with b = sqrt(c / eps), which solves -eps phi'' + c phi = c, phi(0) = phi(1) = 0.
psi is kept separately so that the layer part never suffers cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

Field = Callable[[np.ndarray, np.ndarray], np.ndarray]
VectorField = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class ExactSolution:
    u: Field
    grad_u: VectorField
    laplace_u: Field | None = None
    f: Field | None = None
    smooth: Field | None = None
    layer: Field | None = None

    @property
    def decomposition(self) -> tuple[Field, Field] | None:
        if self.smooth is None or self.layer is None:
            return None
        return self.smooth, self.layer


@dataclass(frozen=True)
class ReactionDiffusionProblem:
    """-d_x u_xx - d_y u_yy + c u = f on the unit square, u = 0 on the boundary."""

    eps: float
    c: float
    f: Field
    exact: ExactSolution | None = None
    anisotropic: bool = False
    name: str = ""

    def __post_init__(self):
        if not 0 < self.eps <= 1:
            raise ValueError(f"eps must lie in (0, 1], got {self.eps}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")

    @property
    def diffusion(self) -> tuple[float, float]:
        return (self.eps, 1.0) if self.anisotropic else (self.eps, self.eps)


@dataclass(frozen=True)
class SemilinearProblem:
    """-eps Laplace(u) + g(x, y, u) = 0, with d g / d u >= mu > 0."""

    eps: float
    g: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
    g_u: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
    mu: float
    exact: ExactSolution | None = None
    name: str = ""


class LayerProfile:
    """phi, psi = 1 - phi and derivatives for b = sqrt(c / eps)."""

    def __init__(self, eps: float, c: float):
        if not (eps > 0 and c > 0):
            raise ValueError("eps and c must be positive")
        self.beta = math.sqrt(c / eps)
        self._den = 1.0 + math.exp(-self.beta)

    def _exps(self, t):
        t = np.asarray(t, dtype=float)
        return np.exp(-self.beta * t), np.exp(-self.beta * (1.0 - t))

    def psi(self, t):
        a, b = self._exps(t)
        return (a + b) / self._den

    def phi(self, t):
        return 1.0 - self.psi(t)

    def dphi(self, t):
        a, b = self._exps(t)
        return self.beta * (a - b) / self._den

    def d2phi(self, t):
        return -self.beta ** 2 * self.psi(t)


def layered_product_solution(eps: float, c: float) -> ExactSolution:
    """u = phi(x) phi(y): boundary layers on all four edges plus corner layers."""
    p = LayerProfile(eps, c)

    def u(x, y):
        return p.phi(x) * p.phi(y)

    def grad_u(x, y):
        return p.dphi(x) * p.phi(y), p.phi(x) * p.dphi(y)

    def laplace_u(x, y):
        return p.d2phi(x) * p.phi(y) + p.phi(x) * p.d2phi(y)

    def f(x, y):
        # -eps phi'' = c psi, so f = c (1 - psi(x) psi(y))
        return c * (1.0 - p.psi(x) * p.psi(y))

    def smooth(x, y):
        return np.ones(np.broadcast(x, y).shape)

    def layer(x, y):
        sx, sy = p.psi(x), p.psi(y)
        return sx * sy - sx - sy

    return ExactSolution(u, grad_u, laplace_u, f, smooth, layer)


def smooth_sine_solution(eps: float, c: float) -> ExactSolution:
    pi = math.pi

    def u(x, y):
        return np.sin(pi * x) * np.sin(pi * y)

    def grad_u(x, y):
        return pi * np.cos(pi * x) * np.sin(pi * y), pi * np.sin(pi * x) * np.cos(pi * y)

    def laplace_u(x, y):
        return -2.0 * pi * pi * u(x, y)

    def f(x, y):
        return (2.0 * eps * pi * pi + c) * u(x, y)

    return ExactSolution(u, grad_u, laplace_u, f)


def linear_layered(eps: float, c: float = 1.0) -> ReactionDiffusionProblem:
    ex = layered_product_solution(eps, c)
    return ReactionDiffusionProblem(eps, c, ex.f, ex, name="linear-layered")


def smooth_sine(eps: float, c: float = 1.0) -> ReactionDiffusionProblem:
    ex = smooth_sine_solution(eps, c)
    return ReactionDiffusionProblem(eps, c, ex.f, ex, name="smooth-sine")


def semilinear_manufactured(eps: float, cubic: float = 1.0) -> SemilinearProblem:
    """g(x, y, u) = u + cubic * u^3 - r(x, y) with the layered product as solution.

    ``cubic=0`` gives the linear problem with c = 1.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if cubic < 0:
        raise ValueError("cubic coefficient must be non-negative (keeps g_u >= 1)")
    p = LayerProfile(eps, 1.0)
    ex = layered_product_solution(eps, 1.0)

    def r(x, y):
        px, py = p.phi(x), p.phi(y)
        ustar = px * py
        # -eps Laplace(u*) = psi(x) phi(y) + phi(x) psi(y) for c = 1
        return p.psi(x) * py + px * p.psi(y) + ustar + cubic * ustar ** 3

    def g(x, y, v):
        return v + cubic * v ** 3 - r(x, y)

    def g_u(x, y, v):
        return 1.0 + 3.0 * cubic * v ** 2 + 0.0 * x

    return SemilinearProblem(eps, g, g_u, 1.0, ex, name="semilinear-cubic")


def anisotropic_solution(eps: float, c: float) -> ExactSolution:
    """u = phi(x) sin(pi y) for -eps u_xx - u_yy + c u = f."""
    p = LayerProfile(eps, c)
    pi = math.pi

    def u(x, y):
        return p.phi(x) * np.sin(pi * y)

    def grad_u(x, y):
        return p.dphi(x) * np.sin(pi * y), pi * p.phi(x) * np.cos(pi * y)

    def laplace_u(x, y):
        return (p.d2phi(x) - pi * pi * p.phi(x)) * np.sin(pi * y)

    def f(x, y):
        return (c + pi * pi * p.phi(x)) * np.sin(pi * y)

    def smooth(x, y):
        return np.sin(pi * y) + 0.0 * x

    def layer(x, y):
        return -p.psi(x) * np.sin(pi * y)

    return ExactSolution(u, grad_u, laplace_u, f, smooth, layer)


def anisotropic_manufactured(eps: float, c: float = 1.0) -> ReactionDiffusionProblem:
    ex = anisotropic_solution(eps, c)
    return ReactionDiffusionProblem(eps, c, ex.f, ex, anisotropic=True, name="anisotropic")


def layered_sine(eps: float, c: float = 1.0) -> ReactionDiffusionProblem:
    """Layered product plus sin(pi x) sin(pi y): same layers, non-trivial smooth part."""
    a = layered_product_solution(eps, c)
    b = smooth_sine_solution(eps, c)

    def grad_u(x, y):
        (ax, ay), (bx, by) = a.grad_u(x, y), b.grad_u(x, y)
        return ax + bx, ay + by

    ex = ExactSolution(
        u=lambda x, y: a.u(x, y) + b.u(x, y),
        grad_u=grad_u,
        laplace_u=lambda x, y: a.laplace_u(x, y) + b.laplace_u(x, y),
        f=lambda x, y: a.f(x, y) + b.f(x, y),
        smooth=lambda x, y: 1.0 + b.u(x, y),
        layer=a.layer,
    )
    return ReactionDiffusionProblem(eps, c, ex.f, ex, name="layered-sine")


PROBLEMS = {
    "linear-layered": linear_layered,
    "semilinear-cubic": lambda eps, c=1.0: semilinear_manufactured(eps),
    "anisotropic": anisotropic_manufactured,
    "smooth-sine": smooth_sine,
    "layered-sine": layered_sine,
}


def make_problem(key: str, eps: float, c: float = 1.0):
    try:
        factory = PROBLEMS[key]
    except KeyError:
        raise ValueError(f"unknown problem {key!r}; choose from {sorted(PROBLEMS)}") from None
    return factory(eps, c)
