"""
L2 projection and the Galerkin error
====================================

The L2 projection pi u is L-infinity stable on Shishkin meshes, and the
discrete error pi u - u_N is bounded in |.|_1 by |u - pi u|_1 with constant 1.
"""

from shishkin_fem import (FeSpaceQ1, error_report, fe_pair_norms, l2_projection, linear_layered,
                          linf_stability_probe, shishkin_2d, solve_linear)

eps = 1e-8
pb = linear_layered(eps)
for N in (16, 32, 64):
    space = FeSpaceQ1(shishkin_2d(N, eps))
    pu = l2_projection(pb.exact, space)
    uN = solve_linear(pb, space)
    proj = error_report(pb.exact, pu, eps, order=10).h1_semi
    disc = fe_pair_norms(pu, uN, eps)["h1"]
    stab = linf_stability_probe(l2_projection, pb.exact, space)
    print(f"N={N:3d}  eps^1/4|u-pi u|_1={eps ** 0.25 * proj:.3e}  "
          f"|pi u-u_N|_1/|u-pi u|_1={disc / proj:.3f}  Linf ratio={stab:.4f}")
