"""
Supercloseness and the combination technique
============================================

u_N is much closer to the nodal interpolant than to u. The two-scale
combination u_{N,M} + u_{M,N} - u_{M,M} (M = sqrt N) reaches almost the
accuracy of the full N x N solve with far fewer unknowns.
"""

from shishkin_fem import (FeSpaceQ1, eoc, error_report, fe_pair_norms, lagrange_interpolant,
                          linear_layered, shishkin_2d, solve_combined, solve_linear)

eps = 1e-8
pb = linear_layered(eps)
close = []
for N in (16, 32, 64):
    space = FeSpaceQ1(shishkin_2d(N, eps, lambda0=2.5))
    d = fe_pair_norms(solve_linear(pb, space), lagrange_interpolant(pb.exact, space), eps)
    close.append((N, d["energy"]))
    print(f"N={N:3d}  ||u_N - u_I||_eps = {d['energy']:.3e}")
print("EOC vs (N^-1 ln N)^2:", [round(r, 3) for r in eoc(close, "logN2")])

eps = 1e-10
pb = linear_layered(eps)
ts = solve_combined(pb, 64, 8)
full = solve_linear(pb, ts.space)
print("combined", f"{error_report(pb.exact, ts.combined, eps).balanced:.4e}",
      "full", f"{error_report(pb.exact, full, eps).balanced:.4e}",
      "difference", f"{fe_pair_norms(ts.combined, full, eps)['balanced']:.4e}")
