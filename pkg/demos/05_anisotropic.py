"""
Anisotropic diffusion
=====================

-eps u_xx - u_yy + c u = f only has layers at x = 0 and x = 1, so the mesh is
Shishkin in x and uniform in y, and the norms weight only the x-derivative.
"""

from shishkin_fem import (FeSpaceQ1, Mesh2D, anisotropic_manufactured, anisotropic_projection, eoc,
                          error_report, shishkin_1d, solve_linear, uniform_1d)

eps = 1e-8
pb = anisotropic_manufactured(eps)
errs = []
for N in (16, 32, 64):
    space = FeSpaceQ1(Mesh2D(shishkin_1d(N, eps), uniform_1d(N), x_layers_only=True))
    uN = solve_linear(pb, space)
    pu = anisotropic_projection(pb, pb.exact, space)
    rep = error_report(pb.exact, uN, eps)
    errs.append((N, rep.balanced_aniso))
    print(f"N={N:3d}  balanced (aniso) {rep.balanced_aniso:.3e}  "
          f"eps^1/4|(u-pi u)_x| {eps ** 0.25 * error_report(pb.exact, pu, eps).h1_x:.3e}")
print("EOC vs N^-1 ln N:", [round(r, 3) for r in eoc(errs, "logN")])
