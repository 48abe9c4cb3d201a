"""
Energy norm vs balanced norm
============================

Galerkin Q1 on a Shishkin mesh for -eps Laplace(u) + u = f with boundary
layers on all four edges. The energy norm weights |.|_1 by eps^1/2, so the
layers barely register; the balanced norm uses eps^1/4 and sees them.
"""

from shishkin_fem import FeSpaceQ1, eoc, error_report, linear_layered, shishkin_2d, solve_linear

eps = 1e-8
pb = linear_layered(eps)
rows = []
for N in (16, 32, 64, 128):
    uN = solve_linear(pb, FeSpaceQ1(shishkin_2d(N, eps)))
    rep = error_report(pb.exact, uN, eps)
    rows.append((N, rep.energy, rep.balanced))
    print(f"N={N:4d}  energy {rep.energy:.3e}  balanced {rep.balanced:.3e}  "
          f"CG iterations {uN.info['report'].iterations}")

# rates against N^-1 ln N
print("energy EOC  ", [round(r, 3) for r in eoc([(n, e) for n, e, _ in rows], "logN")])
print("balanced EOC", [round(r, 3) for r in eoc([(n, b) for n, _, b in rows], "logN")])

# the balanced error hardly depends on eps
for e in (1e-4, 1e-6, 1e-10):
    p = linear_layered(e)
    print(f"eps={e:.0e}: N=64 balanced error",
          f"{error_report(p.exact, solve_linear(p, FeSpaceQ1(shishkin_2d(64, e))), e).balanced:.4e}")
