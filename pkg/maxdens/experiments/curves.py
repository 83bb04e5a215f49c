"""Percentile, CDF and logit-distance curves comparing the location methods across concentrations."""
import numpy as np
import pandas as pd

from maxdens.constraints import Concentration
from maxdens.core.baselines import mean_method, mean_method_beta, median_method
from maxdens.core.defaults import DEFAULT_MC_SAMPLES, DEFAULT_SEED, DEFAULT_Y_GRID, PERCENTILES
from maxdens.core.distributions import beta_cdf, beta_quantile, logit_distance_log_density, \
    logit_distance_samples_dirichlet
from maxdens.core.exceptions import DomainError
from maxdens.core.labels import CDF_COLUMNS, LOGIT_COLUMNS, LOGIT_SAMPLE_COLUMNS, PERCENTILE_COLUMNS
from maxdens.core.solver import solve_max_density, solve_max_density_beta
from maxdens.schema.config import SolverConfig
from maxdens.schema.params import BetaParams, DirichletParams, SimplexPoint

__all__ = ["location_params", "location_params_dirichlet", "percentile_table", "cdf_table", "logit_comparison",
           "logit_comparison_dirichlet"]

LOCATION_METHODS = ("mean", "max-density", "median")


def location_params(method: str, c: float, alpha: float, cfg: SolverConfig | None = None) -> BetaParams:
    """Beta parameters with concentration alpha placed at c by the named method."""
    if method == "mean":
        return mean_method_beta(c, alpha)
    if method == "max-density":
        return solve_max_density_beta(c, Concentration(alpha=alpha), cfg).params
    if method == "median":
        return median_method(c, Concentration(alpha=alpha))
    raise DomainError(f"unknown location method {method!r}; expected one of {LOCATION_METHODS}")


def location_params_dirichlet(method: str, c: SimplexPoint, alpha: float,
                              cfg: SolverConfig | None = None) -> DirichletParams:
    if method == "mean":
        return mean_method(c, alpha)
    if method == "max-density":
        return solve_max_density(c, Concentration(alpha=alpha), cfg).params
    raise DomainError(f"Dirichlet location methods are 'mean' and 'max-density', got {method!r}")


def percentile_table(method: str, c: float, alphas, percentiles=PERCENTILES,
                     cfg: SolverConfig | None = None) -> pd.DataFrame:
    rows = []
    for alpha in alphas:
        params = location_params(method, c, alpha, cfg)
        rows.extend({"method": method, "c": c, "alpha": alpha, "percentile": q, "value": beta_quantile(params, q)}
                    for q in percentiles)
    return pd.DataFrame(rows, columns=PERCENTILE_COLUMNS)


def cdf_table(method: str, c: float, alphas, x_grid, cfg: SolverConfig | None = None) -> pd.DataFrame:
    rows = []
    for alpha in alphas:
        params = location_params(method, c, alpha, cfg)
        rows.extend({"method": method, "c": c, "alpha": alpha, "x": x, "cdf": beta_cdf(params, x)} for x in x_grid)
    return pd.DataFrame(rows, columns=CDF_COLUMNS)


def logit_comparison(c: float, alphas, methods=LOCATION_METHODS, y_grid=DEFAULT_Y_GRID,
                     cfg: SolverConfig | None = None) -> pd.DataFrame:
    """Density of Y = |logit(X) - logit(c)| on y_grid for every (method, alpha)."""
    y = np.asarray(y_grid, dtype=float)
    frames = []
    for method in methods:
        for alpha in alphas:
            params = location_params(method, c, alpha, cfg)
            density = np.exp(logit_distance_log_density(params, c, y))
            frames.append(pd.DataFrame({"method": method, "c": c, "alpha": alpha, "y": y, "density": density},
                                       columns=LOGIT_COLUMNS))
    return pd.concat(frames, ignore_index=True)


def logit_comparison_dirichlet(c: SimplexPoint, alphas, methods=("mean", "max-density"),
                               samples: int = DEFAULT_MC_SAMPLES, seed: int = DEFAULT_SEED,
                               cfg: SolverConfig | None = None) -> pd.DataFrame:
    """
    Monte Carlo draws of Y = sum_i |logit(X_i) - logit(c_i)| for every (method, alpha); each cell
    has its own stream spawned from seed.
    """
    frames = []
    for method_index, method in enumerate(methods):
        for alpha_index, alpha in enumerate(alphas):
            params = location_params_dirichlet(method, c, alpha, cfg)
            rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(method_index, alpha_index)))
            y = logit_distance_samples_dirichlet(params, c, samples, rng)
            frames.append(pd.DataFrame({"method": method, "alpha": alpha, "sample": np.arange(samples), "y": y},
                                       columns=LOGIT_SAMPLE_COLUMNS))
    return pd.concat(frames, ignore_index=True)
