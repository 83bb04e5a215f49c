import numpy as np

from maxdens.core.defaults import DEFAULT_ACF_MAX_LAG
from maxdens.core.exceptions import DegenerateSeries, DomainError
from maxdens.core.typing_utils import FloatArray, VectorLike
from .targets import TargetDistribution

__all__ = ["acf", "ks_distance"]


def acf(states: VectorLike, max_lag: int = DEFAULT_ACF_MAX_LAG) -> FloatArray:
    """
    Sample autocorrelation at lags 0..max_lag, from the mean-centered biased (1/N) autocovariance.
    """
    x = np.asarray(states, dtype=float)
    n = x.size
    if n <= max_lag:
        raise DomainError(f"need more than {max_lag} states for lags up to {max_lag}, got {n}")
    x = x - x.mean()
    gamma0 = float(np.dot(x, x)) / n
    if gamma0 == 0.0:
        raise DegenerateSeries("autocorrelation of a constant series is undefined")
    return np.array([float(np.dot(x[:n - k], x[k:])) / n for k in range(max_lag + 1)]) / gamma0


def ks_distance(states: VectorLike, target: TargetDistribution) -> float:
    """sup |F_N(x) - F(x)| against the exact target CDF."""
    x = np.sort(np.asarray(states, dtype=float))
    n = x.size
    if n == 0:
        raise DomainError("KS distance needs at least one state")
    unique, inverse = np.unique(x, return_inverse=True)
    cdf = target.cdf_many(unique)[inverse]
    upper = np.arange(1, n + 1) / n - cdf
    lower = cdf - np.arange(n) / n
    return float(max(upper.max(), lower.max()))
