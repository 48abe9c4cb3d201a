"""
Semilinear problem with Newton's method
=======================================

-eps Laplace(u) + u + u^3 = r, manufactured so that the layered product is
the exact solution. Newton starts from zero; no damping is needed.
"""

from shishkin_fem import FeSpaceQ1, error_report, semilinear_manufactured, shishkin_2d, solve_semilinear

eps = 1e-8
pb = semilinear_manufactured(eps)
for N in (16, 32, 64):
    uN = solve_semilinear(pb, FeSpaceQ1(shishkin_2d(N, eps)))
    hist = uN.info["newton_history"]
    print(f"N={N:3d}  Newton steps {uN.info['newton_iterations']}  "
          f"balanced error {error_report(pb.exact, uN, eps).balanced:.3e}")

# residual history of the last solve: quadratic convergence at the end
print(" ".join(f"{h / hist[0]:.1e}" for h in hist))
