__version__ = "0.1.0"

from maxdens.schema.params import BetaParams, DirichletParams, SimplexPoint
from maxdens.schema.config import SolverConfig, SolveReport
from maxdens.constraints import Concentration, Variance, MeanCosineError, ScaleConstraint
from maxdens.core.solver import solve_max_density, solve_max_density_beta
from maxdens.core.baselines import mean_method, mean_method_beta, mean_method_fixed_variance, \
    adaptive_variance_method, median_method

__all__ = ["__version__", "BetaParams", "DirichletParams", "SimplexPoint", "SolverConfig", "SolveReport",
           "Concentration", "Variance", "MeanCosineError", "ScaleConstraint", "solve_max_density",
           "solve_max_density_beta", "mean_method", "mean_method_beta", "mean_method_fixed_variance",
           "adaptive_variance_method", "median_method"]
