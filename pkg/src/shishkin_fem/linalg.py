"""Sparse storage and symmetric Krylov solvers.

Matrices are ``scipy.sparse.csr_matrix`` instances with sorted, summed
indices.  The solvers are plain Jacobi-preconditioned CG for SPD systems and
preconditioned MINRES for symmetric indefinite ones; both report the true
relative residual recomputed after the iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.linalg
import scipy.sparse as sp

SparseMatrix = sp.csr_matrix

DENSE_LIMIT = 2000
DENSE_RESIDUAL = 1e-10


class SolverError(RuntimeError):
    """Raised by callers that cannot accept an unconverged solve."""

    def __init__(self, message: str, report: "LinearSolveReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class LinearSolveReport:
    iterations: int
    residual: float
    method: str
    converged: bool


def from_triplets(rows, cols, vals, shape) -> SparseMatrix:
    """COO triplets to CSR; duplicates are summed, indices sorted."""
    A = sp.coo_matrix((np.ravel(vals), (np.ravel(rows), np.ravel(cols))), shape=shape).tocsr()
    A.sum_duplicates()
    A.sort_indices()
    return A


def iteration_cap(n: int) -> int:
    return int(50 * math.sqrt(n)) + 1000


def relative_residual(A, x: np.ndarray, b: np.ndarray) -> float:
    nb = np.linalg.norm(b)
    r = np.linalg.norm(b - A @ x)
    return r / nb if nb > 0 else r


def _check(A, b):
    if A.shape[0] != A.shape[1] or A.shape[0] != len(b):
        raise ValueError(f"dimension mismatch: A is {A.shape}, b has length {len(b)}")


def solve_spd(A, b, tol: float = 1e-12, maxiter: int | None = None,
              x0: np.ndarray | None = None) -> tuple[np.ndarray, LinearSolveReport]:
    """Jacobi-preconditioned conjugate gradients.

    Iteration stops once both the plain and the preconditioned relative residual
    (D^-1 r against D^-1 b) are below ``tol``; the preconditioned one controls
    coefficients on rows with tiny entries (small cells), which the plain norm
    hardly sees.  The report carries the plain residual.
    """
    b = np.asarray(b, dtype=float)
    _check(A, b)
    n = len(b)
    maxiter = iteration_cap(n) if maxiter is None else maxiter
    nb = np.linalg.norm(b)
    x = np.zeros(n) if x0 is None else np.array(x0, dtype=float)
    if nb == 0.0:
        x[:] = 0.0
        return x, LinearSolveReport(0, 0.0, "pcg-jacobi", True)
    dinv = 1.0 / A.diagonal()
    nbp = np.linalg.norm(dinv * b)

    def small(r, factor=1.0):
        return (np.linalg.norm(r) <= factor * tol * nb
                and np.linalg.norm(dinv * r) <= factor * tol * nbp)

    it = 0
    # outer loop restarts from the true residual if the recursive one drifted
    while it < maxiter:
        r = b - A @ x
        if small(r):
            break
        z = dinv * r
        p = z.copy()
        rz = r @ z
        while it < maxiter:
            Ap = A @ p
            alpha = rz / (p @ Ap)
            x += alpha * p
            r -= alpha * Ap
            it += 1
            if small(r, 0.5):
                break
            z = dinv * r
            rz_new = r @ z
            p = z + (rz_new / rz) * p
            rz = rz_new
    res = relative_residual(A, x, b)
    return x, LinearSolveReport(it, res, "pcg-jacobi", res <= tol)


def minres(A, b, tol: float = 1e-12, maxiter: int | None = None,
           precond: Callable[[np.ndarray], np.ndarray] | None = None,
           ) -> tuple[np.ndarray, LinearSolveReport]:
    """Preconditioned MINRES (Paige-Saunders); ``precond`` applies M^-1, M SPD."""
    b = np.asarray(b, dtype=float)
    _check(A, b)
    n = len(b)
    maxiter = iteration_cap(n) if maxiter is None else maxiter
    apply_m = precond if precond is not None else (lambda v: v)
    x = np.zeros(n)
    nb = np.linalg.norm(b)
    if nb == 0.0:
        return x, LinearSolveReport(0, 0.0, "minres", True)

    r1 = b.copy()
    y = apply_m(r1)
    beta1 = math.sqrt(r1 @ y)
    r2 = r1
    beta, oldb = beta1, 0.0
    dbar = epsln = 0.0
    phibar = beta1
    cs, sn = -1.0, 0.0
    w = np.zeros(n)
    w2 = np.zeros(n)
    res = 1.0
    it = 0
    while it < maxiter:
        it += 1
        v = y / beta
        y = A @ v
        if it >= 2:
            y = y - (beta / oldb) * r1
        alfa = v @ y
        y = y - (alfa / beta) * r2
        r1, r2 = r2, y
        y = apply_m(r2)
        oldb = beta
        beta = math.sqrt(max(r2 @ y, 0.0))
        oldeps = epsln
        delta = cs * dbar + sn * alfa
        gbar = sn * dbar - cs * alfa
        epsln = sn * beta
        dbar = -cs * beta
        gamma = max(math.hypot(gbar, beta), np.finfo(float).eps)
        cs, sn = gbar / gamma, beta / gamma
        phi = cs * phibar
        phibar = sn * phibar
        w1, w2 = w2, w
        w = (v - oldeps * w1 - delta * w2) / gamma
        x = x + phi * w
        if phibar <= tol * beta1 or beta == 0.0:
            res = relative_residual(A, x, b)
            if res <= tol or beta == 0.0:
                break
    res = relative_residual(A, x, b)
    return x, LinearSolveReport(it, res, "minres", res <= tol)


def solve_dense_ldl(A, b) -> tuple[np.ndarray, LinearSolveReport]:
    """Dense symmetric (Bunch-Kaufman LDL^T) solve for small systems."""
    b = np.asarray(b, dtype=float)
    _check(A, b)
    if len(b) > DENSE_LIMIT:
        raise ValueError(f"dense fallback limited to dimension {DENSE_LIMIT}")
    Ad = A.toarray() if sp.issparse(A) else np.asarray(A, dtype=float)
    x = scipy.linalg.solve(Ad, b, assume_a="sym")
    res = relative_residual(A, x, b)
    return x, LinearSolveReport(1, res, "dense-ldl", bool(res <= DENSE_RESIDUAL))


def solve_sym_indefinite(A, b, tol: float = 1e-12, maxiter: int | None = None,
                         precond: Callable[[np.ndarray], np.ndarray] | None = None,
                         dense: bool = False) -> tuple[np.ndarray, LinearSolveReport]:
    if dense:
        return solve_dense_ldl(A, b)
    return minres(A, b, tol=tol, maxiter=maxiter, precond=precond)
