"""Special functions behind every density, constraint and quantile in maxdens.

All probability arithmetic is carried out in log space; callers combine terms with
``numpy.logaddexp`` or :func:`log1p_exp` rather than exponentiating early.
"""
import logging
import math
import sys

import numpy as np

from .defaults import ASYMPTOTIC_THRESHOLD, FPMIN, INC_BETA_EPS, INC_BETA_MAXITER, INV_INC_BETA_MAXITER, \
    INV_INC_BETA_TOL
from .exceptions import DomainError

__all__ = ['log_gamma', 'digamma', 'trigamma', 'log_beta', 'reg_inc_beta', 'inv_reg_inc_beta',
           'log_binomial_pmf', 'log1p_exp', 'TINY']

logger = logging.getLogger(__name__)

TINY = sys.float_info.min
_LOG_TINY = math.log(TINY)
_ONE_BELOW = math.nextafter(1.0, 0.0)


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")
    return value


def log_gamma(x: float) -> float:
    x = _check_positive("x", x)
    return math.lgamma(x)


def _positive_array(name: str, value) -> np.ndarray:
    x = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x <= 0.0):
        raise DomainError(f"{name} must hold positive finite numbers, got {value!r}")
    return x


def _shift_to_asymptotic(x: np.ndarray, term) -> tuple[np.ndarray, np.ndarray]:
    """
    Apply the upward recurrence until every entry is at least ASYMPTOTIC_THRESHOLD, summing
    term(x) over the skipped arguments. Any x > 0 needs at most ceil(threshold) shifts.
    """
    total = np.zeros_like(x)
    with np.errstate(divide="ignore", over="ignore"):
        for _ in range(math.ceil(ASYMPTOTIC_THRESHOLD)):
            small = x < ASYMPTOTIC_THRESHOLD
            if not small.any():
                break
            total = total + np.where(small, term(x), 0.0)
            x = np.where(small, x + 1.0, x)
    return x, total


def _as_result(value: np.ndarray):
    return float(value) if value.ndim == 0 else value


def digamma(x):
    """
    psi(x) by upward recurrence to x >= 6 followed by the asymptotic series
    (Bernoulli terms through x**-14). Accepts scalars or arrays; tends to -inf as x -> 0.
    """
    x, shifted = _shift_to_asymptotic(_positive_array("x", x), lambda y: 1.0 / y)
    f = 1.0 / (x * x)
    series = f * (1.0 / 12 - f * (1.0 / 120 - f * (1.0 / 252 - f * (1.0 / 240 - f * (
        1.0 / 132 - f * (691.0 / 32760 - f * (1.0 / 12)))))))
    return _as_result(np.log(x) - 0.5 / x - series - shifted)


def trigamma(x):
    """psi'(x); overflows to +inf rather than raising for x below about 1e-154."""
    x, shifted = _shift_to_asymptotic(_positive_array("x", x), lambda y: 1.0 / y / y)
    t = 1.0 / x
    f = t * t
    series = t * f * (1.0 / 6 - f * (1.0 / 30 - f * (1.0 / 42 - f * (1.0 / 30 - f * (
        5.0 / 66 - f * (691.0 / 2730 - f * (7.0 / 6)))))))
    return _as_result(shifted + t + 0.5 * f + series)


def log_beta(a: float, b: float) -> float:
    a = _check_positive("a", a)
    b = _check_positive("b", b)
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _inc_beta_continued_fraction(x: float, a: float, b: float) -> float:
    """Modified Lentz evaluation of the incomplete beta continued fraction."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < FPMIN:
        d = FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, INC_BETA_MAXITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < FPMIN:
            d = FPMIN
        c = 1.0 + aa / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < INC_BETA_EPS:
            return h
    logger.warning("Incomplete beta continued fraction hit %d iterations at x=%r a=%r b=%r",
                   INC_BETA_MAXITER, x, a, b)
    return h


def reg_inc_beta(x: float, a: float, b: float) -> float:
    """
    Regularized incomplete beta function I_x(a, b), i.e. the Beta(a, b) CDF at x.
    """
    a = _check_positive("a", a)
    b = _check_positive("b", b)
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    log_front = a * math.log(x) + b * math.log1p(-x) - log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        value = math.exp(log_front) * _inc_beta_continued_fraction(x, a, b) / a
    else:
        value = 1.0 - math.exp(log_front) * _inc_beta_continued_fraction(1.0 - x, b, a) / b
    return min(max(value, 0.0), 1.0)


def _initial_quantile(p: float, a: float, b: float, lb: float) -> float:
    mean = a / (a + b)
    log_lower = (math.log(p) + math.log(a) + lb) / a
    if log_lower < math.log(mean):
        return math.exp(log_lower) if log_lower > _LOG_TINY else TINY
    log_upper = (math.log1p(-p) + math.log(b) + lb) / b
    if log_upper < math.log1p(-mean):
        return -math.expm1(log_upper) if log_upper > _LOG_TINY else _ONE_BELOW
    return mean


def inv_reg_inc_beta(p: float, a: float, b: float) -> float:
    """
    x in (0, 1) with I_x(a, b) = p, by Newton steps safeguarded with a bisection bracket.

    The bracket is halved geometrically while it spans several orders of magnitude, so
    quantiles deep in a boundary spike are reached in a few dozen steps. Quantiles below the
    smallest normal double are clamped to it.
    """
    a = _check_positive("a", a)
    b = _check_positive("b", b)
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p!r}")
    lb = log_beta(a, b)
    if reg_inc_beta(TINY, a, b) >= p:
        logger.debug("Quantile p=%r of Beta(%r, %r) underflows; clamping", p, a, b)
        return TINY
    if reg_inc_beta(_ONE_BELOW, a, b) <= p:
        return _ONE_BELOW

    lo, hi = TINY, _ONE_BELOW
    x = min(max(_initial_quantile(p, a, b, lb), TINY), _ONE_BELOW)
    for _ in range(INV_INC_BETA_MAXITER):
        err = reg_inc_beta(x, a, b) - p
        if abs(err) <= INV_INC_BETA_TOL:
            return x
        if err < 0.0:
            lo = x
        else:
            hi = x
        log_pdf = (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x) - lb
        candidate = x - err * math.exp(-log_pdf) if -700.0 < log_pdf < 700.0 else math.nan
        if not lo < candidate < hi:
            if hi > 4.0 * lo:
                candidate = math.sqrt(lo) * math.sqrt(hi)
            else:
                candidate = 0.5 * (lo + hi)
        if candidate == x or hi - lo <= 4.0 * math.ulp(hi):
            return candidate
        x = candidate
    logger.debug("Quantile search for p=%r of Beta(%r, %r) stopped at x=%r", p, a, b, x)
    return x


def log_binomial_pmf(y: int, n: int, theta: float) -> float:
    if int(y) != y or int(n) != n or not 0 <= y <= n:
        raise DomainError(f"need integers 0 <= y <= n, got y={y!r}, n={n!r}")
    theta = float(theta)
    if not 0.0 < theta < 1.0:
        raise DomainError(f"theta must lie in (0, 1), got {theta!r}")
    y, n = int(y), int(n)
    log_choose = math.lgamma(n + 1) - math.lgamma(y + 1) - math.lgamma(n - y + 1)
    return log_choose + y * math.log(theta) + (n - y) * math.log1p(-theta)


def log1p_exp(x):
    """log(1 + e^x) without overflow or round-off to zero; accepts scalars or arrays."""
    x = np.asarray(x, dtype=float)
    value = np.log1p(np.exp(-np.abs(x))) + np.maximum(x, 0.0)
    return float(value) if value.ndim == 0 else value
