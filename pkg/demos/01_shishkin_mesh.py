"""
Shishkin meshes
===============

A piecewise-uniform mesh that is fine near both ends of [0, 1] and coarse in
the middle. The switch point lambda shrinks with sqrt(eps).
"""

import numpy as np

from shishkin_fem import shishkin_1d, shishkin_2d

# transition point, fine step h and coarse step H for a few eps
print(f"{'eps':>8} {'lambda':>12} {'h':>12} {'H':>10}")
for eps in (1e-2, 1e-4, 1e-6, 1e-8):
    m = shishkin_1d(64, eps)
    print(f"{eps:8.0e} {m.lam:12.4e} {m.h:12.4e} {m.H:10.5f}")

# for mild eps the transition point hits 1/4 and the mesh is uniform
m = shishkin_1d(16, 0.5)
print("uniform:", m.uniform, np.allclose(np.diff(m.nodes), 1 / 16))

# the 2D mesh tags its cells: coarse (Omega_0) vs layer cells
mesh = shishkin_2d(32, 1e-6)
print("cells:", mesh.n_cells, "coarse:", int(mesh.coarse.sum()),
      "coarse area:", round(float(mesh.cell_areas()[mesh.coarse].sum()), 5))
