"""Gauss-Legendre rules on [-1, 1] and their tensor products on rectangles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_ORDER = 20


@dataclass(frozen=True)
class QuadRule1D:
    points: np.ndarray
    weights: np.ndarray

    @property
    def order(self) -> int:
        return len(self.points)


def _legendre(n: int, t: float) -> tuple[float, float]:
    """P_n(t) and P_n'(t) by the three-term recurrence."""
    p0, p1 = 1.0, t
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * t * p1 - (k - 1) * p0) / k
    if n == 0:
        return 1.0, 0.0
    dp = n * (t * p1 - p0) / (t * t - 1.0)
    return p1, dp


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> QuadRule1D:
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise ValueError(f"unsupported Gauss-Legendre order {n!r} (1..{MAX_ORDER})")
    points = np.empty(n)
    weights = np.empty(n)
    for i in range((n + 1) // 2):
        # Tricomi initial guess for the i-th largest root
        t = math.cos(math.pi * (i + 0.75) / (n + 0.5))
        for _ in range(100):
            p, dp = _legendre(n, t)
            dt = p / dp
            t -= dt
            if abs(dt) < 1e-16:
                break
        _, dp = _legendre(n, t)
        w = 2.0 / ((1.0 - t * t) * dp * dp)
        points[i], points[n - 1 - i] = t, -t
        weights[i] = weights[n - 1 - i] = w
    if n % 2:
        points[n // 2] = 0.0
    order = np.argsort(points)
    points, weights = points[order], weights[order]
    points.setflags(write=False)
    weights.setflags(write=False)
    return QuadRule1D(points, weights)


@lru_cache(maxsize=None)
def reference_square(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Tensor rule on [0, 1]^2: (s, t, w) flattened with s fastest."""
    rule = gauss_legendre(n)
    p = 0.5 * (rule.points + 1.0)
    w = 0.5 * rule.weights
    s, t = np.meshgrid(p, p)
    ww = np.outer(w, w)
    return s.ravel(), t.ravel(), ww.ravel()


def integrate_on_cell(rule: QuadRule1D, cell, integrand) -> float:
    """Integrate ``integrand(x, y)`` (vectorized) over ``cell = (x0, x1, y0, y1)``."""
    x0, x1, y0, y1 = cell
    if not (x1 > x0 and y1 > y0):
        raise ValueError("cell must have positive area")
    s, t, w = reference_square(rule.order)
    x = x0 + (x1 - x0) * s
    y = y0 + (y1 - y0) * t
    return float(np.sum(w * integrand(x, y)) * (x1 - x0) * (y1 - y0))


def cell_points(mesh, n: int):
    """Quadrature points of every cell of ``mesh``.

    Returns (x, y, w) with shape (n_cells, n*n); ``w`` already contains the
    cell area, plus the reference coordinates (s, t) of the points.
    """
    s, t, w = reference_square(n)
    x0, x1, y0, y1 = mesh.cell_bounds()
    hx = (x1 - x0)[:, None]
    hy = (y1 - y0)[:, None]
    x = x0[:, None] + hx * s
    y = y0[:, None] + hy * t
    return x, y, w * hx * hy, s, t
