"""Finite elements on Shishkin meshes for singularly perturbed reaction-diffusion."""

from .combo import TwoScaleSolution, prolong, solve_combined
from .fem import (FeFunction, FeSpaceQ1, NewtonError, assemble, galerkin_orthogonality_check,
                  solve_linear, solve_semilinear)
from .linalg import LinearSolveReport, SolverError, solve_spd, solve_sym_indefinite
from .mesh import Mesh1D, Mesh2D, shishkin_1d, shishkin_2d, tensor_mesh, uniform_1d
from .mixed import MixedSolution, assemble_mixed, mixed_error_report, solve_mixed
from .norms import ErrorReport, eoc, error_report, fe_pair_norms
from .problems import (ExactSolution, ReactionDiffusionProblem, SemilinearProblem,
                       anisotropic_manufactured, layered_product_solution, layered_sine,
                       linear_layered, make_problem, semilinear_manufactured, smooth_sine)
from .projections import (anisotropic_projection, l2_projection, lagrange_interpolant,
                          linf_stability_probe, semilinear_projection)
from .quadrature import QuadRule1D, gauss_legendre, integrate_on_cell
from .rt0 import Rt0Function, Rt0Space, rt0_canonical_interpolant
from .study import StudyConfig, parse_config, run_study, verdict

__version__ = "0.1.0"
