"""
Highest posterior density intervals of Beta posteriors.

Flat and U-shaped densities have no unique HPD interval; those cases use the one-sided intervals
[0, Q(level)] and [Q(1 - level), 1], preferring the lower one on ties.
"""
import math

from maxdens.core.distributions import beta_cdf, beta_log_density, beta_quantile
from maxdens.core.exceptions import DomainError
from maxdens.core.special import TINY
from maxdens.schema.params import BetaParams

__all__ = ["hpd_interval", "hpd_contains"]

_BISECTION_MAXITER = 200
_DENSITY_TOL = 1e-9
_TIE_TOL = 1e-12
_ONE_BELOW = math.nextafter(1.0, 0.0)


def _check_level(level: float) -> float:
    level = float(level)
    if not 0.0 < level < 1.0:
        raise DomainError(f"credible level must lie in (0, 1), got {level!r}")
    return level


def _log_pdf(p: BetaParams, x: float) -> float:
    return beta_log_density(p, min(max(x, TINY), _ONE_BELOW))


def hpd_interval(posterior: BetaParams, level: float) -> tuple[float, float]:
    level = _check_level(level)
    a, b = posterior.a, posterior.b
    if a <= 1.0 and b <= 1.0:
        lower = (0.0, beta_quantile(posterior, level))
        upper = (beta_quantile(posterior, 1.0 - level), 1.0)
        if upper[1] - upper[0] < lower[1] - lower[0] - _TIE_TOL:
            return upper
        return lower
    if a <= 1.0:
        return 0.0, beta_quantile(posterior, level)
    if b <= 1.0:
        return beta_quantile(posterior, 1.0 - level), 1.0

    # unimodal: find the lower-tail mass t whose interval [Q(t), Q(t + level)] has equal end densities
    def upper_mass(t: float) -> float:
        return min(t + level, _ONE_BELOW)

    def gap(t: float) -> float:
        return _log_pdf(posterior, beta_quantile(posterior, t)) \
            - _log_pdf(posterior, beta_quantile(posterior, upper_mass(t)))

    lo, hi = 0.0, 1.0 - level
    t = hi / 2.0
    for _ in range(_BISECTION_MAXITER):
        t = 0.5 * (lo + hi)
        g = gap(t)
        if abs(g) <= _DENSITY_TOL or t in (lo, hi):
            break
        if g < 0.0:
            lo = t
        else:
            hi = t
    return beta_quantile(posterior, t), beta_quantile(posterior, upper_mass(t))


def _equal_density_point(posterior: BetaParams, theta: float, mode: float) -> float:
    """The point on the other side of the mode where the density equals the density at theta."""
    target = _log_pdf(posterior, theta)
    if theta < mode:
        lo, hi = mode, _ONE_BELOW
    else:
        lo, hi = TINY, mode
    for _ in range(_BISECTION_MAXITER):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        above = _log_pdf(posterior, mid) > target
        if (theta < mode) == above:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def hpd_contains(posterior: BetaParams, level: float, theta: float) -> bool:
    """
    Whether theta lies in hpd_interval(posterior, level), decided without constructing the interval:
    theta is inside iff the region where the density exceeds its value at theta has mass at most level.
    """
    level = _check_level(level)
    theta = float(theta)
    if not 0.0 < theta < 1.0:
        raise DomainError(f"theta must lie in (0, 1), got {theta!r}")
    a, b = posterior.a, posterior.b
    if a <= 1.0 and b <= 1.0:
        lo, hi = hpd_interval(posterior, level)
        return lo <= theta <= hi
    if a <= 1.0:
        return beta_cdf(posterior, theta) <= level
    if b <= 1.0:
        return beta_cdf(posterior, theta) >= 1.0 - level
    mode = (a - 1.0) / (a + b - 2.0)
    if theta == mode:
        return True
    other = _equal_density_point(posterior, theta, mode)
    lo, hi = (theta, other) if theta < mode else (other, theta)
    return beta_cdf(posterior, hi) - beta_cdf(posterior, lo) <= level
