"""Independent reference computations used by the tests."""

import numpy as np


def fd_gradient(u, x, y, hx, hy=None):
    """Central differences of a scalar field."""
    hy = hx if hy is None else hy
    gx = (u(x + hx, y) - u(x - hx, y)) / (2 * hx)
    gy = (u(x, y + hy) - u(x, y - hy)) / (2 * hy)
    return gx, gy


def fd_second(u, x, y, hx, hy=None):
    """Second central differences (u_xx, u_yy)."""
    hy = hx if hy is None else hy
    uxx = (u(x + hx, y) - 2 * u(x, y) + u(x - hx, y)) / (hx * hx)
    uyy = (u(x, y + hy) - 2 * u(x, y) + u(x, y - hy)) / (hy * hy)
    return uxx, uyy


def _hat_integrals(nodes, fun, dfun, n_gauss=8):
    """For interior hats phi_i on 1D nodes: (fun, phi_i) and (dfun, phi_i')."""
    t, w = np.polynomial.legendre.leggauss(n_gauss)
    n = len(nodes) - 1
    b0 = np.zeros(n + 1)
    b1 = np.zeros(n + 1)
    for k in range(n):
        a, b = nodes[k], nodes[k + 1]
        h = b - a
        x = a + 0.5 * h * (t + 1)
        ww = 0.5 * h * w
        left = (b - x) / h
        right = (x - a) / h
        b0[k] += np.sum(ww * fun(x) * left)
        b0[k + 1] += np.sum(ww * fun(x) * right)
        b1[k] += np.sum(ww * dfun(x)) * (-1 / h)
        b1[k + 1] += np.sum(ww * dfun(x)) * (1 / h)
    return b0[1:-1], b1[1:-1]


def p1_matrices(nodes):
    """Dense 1D P1 mass and stiffness on interior nodes."""
    n = len(nodes) - 1
    M = np.zeros((n + 1, n + 1))
    K = np.zeros((n + 1, n + 1))
    for k in range(n):
        h = nodes[k + 1] - nodes[k]
        idx = [k, k + 1]
        M[np.ix_(idx, idx)] += h / 6 * np.array([[2, 1], [1, 2]])
        K[np.ix_(idx, idx)] += 1 / h * np.array([[1, -1], [-1, 1]])
    return M[1:-1, 1:-1], K[1:-1, 1:-1]


def l2_projection_1d(nodes, a, da):
    M, _ = p1_matrices(nodes)
    rhs, _ = _hat_integrals(nodes, a, da)
    return np.concatenate([[0.0], np.linalg.solve(M, rhs), [0.0]])


def ritz_projection_1d(nodes, b, db, c):
    M, K = p1_matrices(nodes)
    r0, r1 = _hat_integrals(nodes, b, db)
    return np.concatenate([[0.0], np.linalg.solve(K + c * M, r1 + c * r0), [0.0]])


def anisotropic_projection_oracle(xnodes, ynodes, a, da, b, db, c):
    """Nodal values of pi_y(pi_x(a(x) b(y))) on the tensor grid, x fastest."""
    px = l2_projection_1d(xnodes, a, da)
    qy = ritz_projection_1d(ynodes, b, db, c)
    return np.outer(qy, px).ravel()
