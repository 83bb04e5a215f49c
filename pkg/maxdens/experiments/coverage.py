"""
Exact frequentist coverage of Beta-Binomial HPD intervals for a rare-event probability.

For a true parameter theta0 the coverage is the binomial-weighted sum over every outcome y of the
indicator that theta0 lies in the posterior HPD interval; no simulation is involved.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import pandas as pd
from pydantic import Field, PositiveFloat, PositiveInt, field_validator

from maxdens.constraints import Concentration
from maxdens.core.baselines import mean_method_beta
from maxdens.core.defaults import DEFAULT_COVERAGE_ALPHA, DEFAULT_COVERAGE_C, DEFAULT_COVERAGE_LEVEL, \
    DEFAULT_COVERAGE_N, DEFAULT_THETA_GRID, NEGLIGIBLE_LOG_MASS, PRIOR_METHODS_LITERAL, TARGET_MODES_LITERAL
from maxdens.core.labels import COVERAGE_COLUMNS
from maxdens.core.solver import solve_max_density_beta
from maxdens.core.special import log_binomial_pmf
from maxdens.schema import FrozenSchema
from maxdens.schema.params import BetaParams
from .hpd import hpd_contains

__all__ = ["CoverageSpec", "prior_params", "exact_coverage", "coverage_curve"]

logger = logging.getLogger(__name__)

PRIOR_METHODS = ("mean", "max-density")
TARGET_MODES = ("fixed", "oracle")


class CoverageSpec(FrozenSchema):
    n: PositiveInt = DEFAULT_COVERAGE_N
    alpha: PositiveFloat = DEFAULT_COVERAGE_ALPHA
    c: float = Field(DEFAULT_COVERAGE_C, gt=0.0, lt=1.0)
    theta_grid: tuple[float, ...] = Field(DEFAULT_THETA_GRID, min_length=1)
    level: float = Field(DEFAULT_COVERAGE_LEVEL, gt=0.0, lt=1.0)
    prior_method: PRIOR_METHODS_LITERAL = "mean"
    target_mode: TARGET_MODES_LITERAL = "fixed"

    @field_validator('theta_grid')
    def validate_theta_grid(cls, value):
        if not all(0.0 < theta < 1.0 for theta in value):
            raise ValueError("every theta in the grid must lie in (0, 1)")
        return value


@lru_cache(maxsize=1024)
def _prior(method: str, location: float, alpha: float) -> BetaParams:
    if method == "mean":
        return mean_method_beta(location, alpha)
    return solve_max_density_beta(location, Concentration(alpha=alpha)).params


def prior_params(spec: CoverageSpec, theta0: float) -> BetaParams:
    """The prior centered on spec.c, or on theta0 itself in oracle mode."""
    location = spec.c if spec.target_mode == "fixed" else float(theta0)
    return _prior(spec.prior_method, location, spec.alpha)


def exact_coverage(spec: CoverageSpec, theta0: float) -> float:
    """
    Coverage of the level-HPD interval at theta0. Outcomes with log binomial mass below the
    negligible threshold are skipped.
    """
    prior = prior_params(spec, theta0)
    covered = []
    for y in range(spec.n + 1):
        log_mass = log_binomial_pmf(y, spec.n, theta0)
        if log_mass < NEGLIGIBLE_LOG_MASS:
            continue
        posterior = BetaParams(a=prior.a + y, b=prior.b + spec.n - y)
        if hpd_contains(posterior, spec.level, theta0):
            covered.append(math.exp(log_mass))
    return min(math.fsum(covered), 1.0)


def _coverage_rows(spec: CoverageSpec) -> list[dict]:
    return [{"mode": spec.target_mode, "method": spec.prior_method, "theta0": theta0,
             "coverage": exact_coverage(spec, theta0)} for theta0 in spec.theta_grid]


def coverage_curve(spec: CoverageSpec, modes=TARGET_MODES, methods=PRIOR_METHODS, workers: int = 1) -> pd.DataFrame:
    """
    Exact coverage over spec.theta_grid for every combination of target mode and prior method.
    """
    variants = [spec.model_copy(update={"target_mode": mode, "prior_method": method})
                for mode in modes for method in methods]
    logger.info("Computing coverage for %d curves of %d points", len(variants), len(spec.theta_grid))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            blocks = list(executor.map(_coverage_rows, variants))
    else:
        blocks = [_coverage_rows(variant) for variant in variants]
    return pd.DataFrame([row for block in blocks for row in block], columns=COVERAGE_COLUMNS)
