"""Mean and median parameterizations, the usual ways of centering a Beta or Dirichlet on a target."""
import logging
import math

import numpy as np

from maxdens.constraints import BaseConstraint, Concentration, Variance
from maxdens.schema.params import BetaParams, DirichletParams, SimplexPoint
from .distributions import beta_exists
from .exceptions import ConvergenceFailure, DomainError
from .special import log1p_exp, reg_inc_beta

__all__ = ['mean_method', 'mean_method_beta', 'mean_method_fixed_variance', 'adaptive_variance_method',
           'adaptive_sigma', 'median_method', 'median_adaptive_method', 'feasible_mean_interval',
           'constraint_curve', 'curve_parameter']

logger = logging.getLogger(__name__)

_LOGIT_BOUND = 700.0
_BRACKET_GRID = 65
_BISECTION_MAXITER = 200
_BISECTION_WIDTH = 1e-13


def _check_location(c: float) -> float:
    c = float(c)
    if not 0.0 < c < 1.0:
        raise DomainError(f"target location must lie in (0, 1), got {c!r}")
    return c


def mean_method(c: SimplexPoint, alpha: float) -> DirichletParams:
    return DirichletParams(a=alpha * c.vector)


def mean_method_beta(c: float, alpha: float) -> BetaParams:
    c = _check_location(c)
    return BetaParams(a=alpha * c, b=alpha * (1.0 - c))


def mean_method_fixed_variance(c: float, v: float) -> BetaParams | None:
    """
    Beta with mean c and variance v, or None when no such Beta exists.
    """
    c = _check_location(c)
    if not beta_exists(c, v):
        return None
    alpha = c * (1.0 - c) / v - 1.0
    return BetaParams(a=alpha * c, b=alpha * (1.0 - c))


def adaptive_sigma(c: float, v_cap: float) -> float:
    return min(c, 1.0 - c, math.sqrt(v_cap))


def adaptive_variance_method(c: float, v_cap: float) -> BetaParams:
    """
    Mean c with standard deviation min(c, 1 - c, sqrt(v_cap)), which always exists. The
    concentration is formed as (c / sigma) * ((1 - c) / sigma) - 1 so that sigma**2 never underflows.
    """
    c = _check_location(c)
    sigma = adaptive_sigma(c, v_cap)
    alpha = (c / sigma) * ((1.0 - c) / sigma) - 1.0
    if not alpha > 0.0:
        raise DomainError(f"standard deviation {sigma!r} is not attainable at mean {c!r}; v_cap must be below 1/4")
    return BetaParams(a=alpha * c, b=alpha * (1.0 - c))


def feasible_mean_interval(v: float) -> tuple[float, float]:
    """
    The open interval of means u for which a Beta with variance v exists.
    """
    lower = 2.0 * v / (1.0 + math.sqrt(1.0 - 4.0 * v))
    return lower, 1.0 - lower


def _sigmoid_pair(t):
    return np.exp(-log1p_exp(-t)), np.exp(-log1p_exp(t))


def constraint_curve(constraint: BaseConstraint):
    """
    The Beta shapes satisfying a concentration or variance constraint, as a function t -> (a, b)
    of one real parameter, vectorized over t.

    Along a concentration curve a = alpha * sigmoid(t); along a variance curve the mean runs over
    the feasible interval as a sigmoid of t and the concentration follows from the variance.
    """
    if isinstance(constraint, Concentration):
        alpha = constraint.alpha

        def shapes(t):
            low, high = _sigmoid_pair(t)
            return alpha * low, alpha * high

    elif isinstance(constraint, Variance):
        v = constraint.v
        lower, _ = feasible_mean_interval(v)
        width = math.sqrt(1.0 - 4.0 * v)

        def shapes(t):
            low, high = _sigmoid_pair(t)
            alpha = width * width * low * high / v
            return alpha * (lower + width * low), alpha * (lower + width * high)

    else:
        raise DomainError(f"only concentration and variance constraints trace a curve, got {constraint!r}")
    return shapes


def curve_parameter(constraint: BaseConstraint, c: float) -> float | None:
    """t at which constraint_curve passes through mean c; None when no member has that mean."""
    c = _check_location(c)
    if isinstance(constraint, Concentration):
        return math.log(c) - math.log1p(-c)
    if isinstance(constraint, Variance):
        lower, _ = feasible_mean_interval(constraint.v)
        q = (c - lower) / math.sqrt(1.0 - 4.0 * constraint.v)
        if not 0.0 < q < 1.0:
            return None
        return math.log(q) - math.log1p(-q)
    raise DomainError(f"only concentration and variance constraints trace a curve, got {constraint!r}")


def _bracket(objective, lo: float, hi: float) -> tuple[float, float, float]:
    f_lo, f_hi = objective(lo), objective(hi)
    if f_lo * f_hi <= 0.0:
        return lo, hi, f_lo
    grid = np.linspace(lo, hi, _BRACKET_GRID)
    values = [objective(t) for t in grid]
    for left, right, f_left, f_right in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if f_left * f_right <= 0.0:
            logger.debug("Median bracket found by grid search on [%g, %g]", left, right)
            return float(left), float(right), f_left
    raise ConvergenceFailure("could not bracket a Beta distribution with the requested median")


def median_method(c: float, constraint: BaseConstraint) -> BetaParams:
    """
    Beta with median c on the curve traced by the constraint.

    The root of I_c(a(t), b(t)) = 1/2 along constraint_curve is found by bisection in t.
    """
    c = _check_location(c)
    shapes = constraint_curve(constraint)

    def curve(t: float) -> BetaParams:
        a, b = shapes(t)
        return BetaParams(a=a, b=b)

    def objective(t: float) -> float:
        p = curve(t)
        return reg_inc_beta(c, p.a, p.b) - 0.5

    lo, hi, f_lo = _bracket(objective, -_LOGIT_BOUND, _LOGIT_BOUND)
    for _ in range(_BISECTION_MAXITER):
        mid = 0.5 * (lo + hi)
        f_mid = objective(mid)
        if f_mid == 0.0 or hi - lo <= _BISECTION_WIDTH:
            return curve(mid)
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return curve(0.5 * (lo + hi))


def median_adaptive_method(c: float, v_cap: float) -> BetaParams:
    """Median c with the adaptive standard deviation min(c, 1 - c, sqrt(v_cap))."""
    c = _check_location(c)
    return median_method(c, Variance(v=adaptive_sigma(c, v_cap) ** 2))
