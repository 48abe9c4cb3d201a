"""
Mixed RT0 x P0 method
=====================

The flux q = -grad(u) is approximated with lowest-order Raviart-Thomas
elements and u with cellwise constants; the saddle-point system is solved by
MINRES with a block-diagonal preconditioner (small systems go to a dense
symmetric factorization).
"""

from shishkin_fem import linear_layered, mixed_error_report, shishkin_2d, solve_mixed
from shishkin_fem.mixed import conservation_defect

eps = 1e-8
pb = linear_layered(eps)
for N in (16, 32, 64):
    sol = solve_mixed(pb, shishkin_2d(N, eps))
    rep = mixed_error_report(pb.exact, sol)
    print(f"N={N:3d}  ||u-u_N|| {rep['l2_u']:.3e}  eps^1/4||q-q_N|| {rep['flux_weighted']:.3e}  "
          f"{sol.report.method} {sol.report.iterations:3d}  stability {sol.stability_constant:.4f}  "
          f"max conservation defect {abs(conservation_defect(sol, pb.f)).max():.1e}")
