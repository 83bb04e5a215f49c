"""Beta and Dirichlet densities, moments, sampling and the scale summaries built on them."""
import math

import numpy as np

from maxdens.schema.params import BetaParams, DirichletParams, SimplexPoint
from .exceptions import DomainError
from .special import TINY, inv_reg_inc_beta, log1p_exp, log_beta, log_gamma, reg_inc_beta
from .typing_utils import FloatArray, VectorLike

__all__ = ['beta_log_density', 'beta_cdf', 'beta_mean', 'beta_variance', 'beta_exists', 'beta_sample',
           'beta_quantile', 'dirichlet_log_density', 'dirichlet_mean', 'dirichlet_covariance', 'dirichlet_sample',
           'dirichlet_sample_matrix', 'logit_distance_log_density', 'logit_distance_samples_dirichlet',
           'cosine_error', 'cosine_errors', 'taylor_mean_cosine_error']

_ONE_BELOW = math.nextafter(1.0, 0.0)


def _as_vector(point: SimplexPoint | VectorLike) -> FloatArray:
    if isinstance(point, SimplexPoint):
        return point.vector
    return np.asarray(point, dtype=float)


def beta_log_density(p: BetaParams, x: float) -> float:
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError(f"Beta density is evaluated on the open interval (0, 1), got x={x!r}")
    return (p.a - 1.0) * math.log(x) + (p.b - 1.0) * math.log1p(-x) - log_beta(p.a, p.b)


def beta_cdf(p: BetaParams, x: float) -> float:
    return reg_inc_beta(min(max(float(x), 0.0), 1.0), p.a, p.b)


def beta_mean(p: BetaParams) -> float:
    return p.a / (p.a + p.b)


def beta_variance(p: BetaParams) -> float:
    s = p.a + p.b
    return p.a * p.b / (s * s * (s + 1.0))


def beta_exists(u: float, v: float) -> bool:
    """
    True iff some Beta distribution has mean u and variance v.
    """
    if not 0.0 < v < 0.25:
        return False
    return abs(u - 0.5) < 0.5 * math.sqrt(1.0 - 4.0 * v)


def beta_quantile(p: BetaParams, q: float) -> float:
    return inv_reg_inc_beta(q, p.a, p.b)


def dirichlet_log_density(p: DirichletParams, x: SimplexPoint) -> float:
    if p.dimension != x.dimension:
        raise DomainError(f"dimension mismatch: parameters K={p.dimension}, point K={x.dimension}")
    a = p.vector
    log_norm = log_gamma(math.fsum(p.a)) - math.fsum(log_gamma(ai) for ai in p.a)
    return log_norm + float(np.dot(a - 1.0, np.log(x.vector)))


def dirichlet_mean(p: DirichletParams) -> FloatArray:
    a = p.vector
    return a / a.sum()


def dirichlet_covariance(p: DirichletParams) -> FloatArray:
    u = dirichlet_mean(p)
    return (np.diag(u) - np.outer(u, u)) / (p.concentration + 1.0)


def _log_standard_gamma(shape: FloatArray, rng: np.random.Generator) -> FloatArray:
    """
    log of Gamma(shape, 1) variates by Marsaglia-Tsang; shapes below one use the U**(1/shape) boost,
    applied in log space so that tiny shapes do not underflow.
    """
    shape = np.asarray(shape, dtype=float)
    boost = shape < 1.0
    d = np.where(boost, shape + 1.0, shape).ravel() - 1.0 / 3.0
    c = 1.0 / np.sqrt(9.0 * d)
    out = np.empty(d.size)
    pending = np.arange(d.size)
    while pending.size:
        z = rng.standard_normal(pending.size)
        u = 1.0 - rng.random(pending.size)
        v = 1.0 + c[pending] * z
        positive = v > 0.0
        cube = np.where(positive, v, 1.0) ** 3
        dd = d[pending]
        accept = positive & (np.log(u) < 0.5 * z * z + dd - dd * cube + dd * np.log(cube))
        out[pending[accept]] = np.log(dd[accept]) + np.log(cube[accept])
        pending = pending[~accept]
    out = out.reshape(shape.shape)
    if np.any(boost):
        u = 1.0 - rng.random(shape.shape)
        out = np.where(boost, out + np.log(u) / shape, out)
    return out


def beta_sample(p: BetaParams, rng: np.random.Generator, size: int | None = None):
    """
    X = G_a / (G_a + G_b) from two Gamma draws. Draws that round to 0 or 1 are clamped into (0, 1).
    """
    shape = np.array([p.a, p.b]) if size is None else np.tile([p.a, p.b], (size, 1))
    log_g = _log_standard_gamma(shape, rng)
    log_ga, log_gb = log_g[..., 0], log_g[..., 1]
    x = np.clip(np.exp(log_ga - np.logaddexp(log_ga, log_gb)), TINY, _ONE_BELOW)
    return float(x) if size is None else x


def _dirichlet_log_samples(p: DirichletParams, rng: np.random.Generator, size: int) -> FloatArray:
    log_g = _log_standard_gamma(np.tile(p.vector, (size, 1)), rng)
    top = log_g.max(axis=1, keepdims=True)
    return log_g - (top + np.log(np.exp(log_g - top).sum(axis=1, keepdims=True)))


def dirichlet_sample_matrix(p: DirichletParams, rng: np.random.Generator, size: int) -> FloatArray:
    """size x K matrix of Dirichlet draws, rows normalized independent Gammas."""
    return np.maximum(np.exp(_dirichlet_log_samples(p, rng, size)), TINY)


def dirichlet_sample(p: DirichletParams, rng: np.random.Generator) -> SimplexPoint:
    return SimplexPoint(c=dirichlet_sample_matrix(p, rng, 1)[0])


def logit_distance_log_density(p: BetaParams, c: float, y):
    """
    log density of Y = |logit(X) - logit(c)| for X ~ Beta(a, b).

    Each of the two branches x < c and x > c contributes a * log(x) + b * log(1 - x) - log B(a, b)
    at its preimage; the logs of x and 1 - x are softplus terms, and the branches are combined
    with logaddexp.
    """
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)) or np.any(y <= 0.0):
        raise DomainError("logit distance density is defined for finite y > 0")
    if not 0.0 < c < 1.0:
        raise DomainError(f"target location must lie in (0, 1), got {c!r}")
    ell = math.log(c) - math.log1p(-c)
    lb = log_beta(p.a, p.b)
    below = -p.a * log1p_exp(y - ell) - p.b * log1p_exp(ell - y) - lb
    above = -p.a * log1p_exp(-y - ell) - p.b * log1p_exp(y + ell) - lb
    value = np.logaddexp(below, above)
    return float(value) if value.ndim == 0 else value


def logit_distance_samples_dirichlet(p: DirichletParams, c: SimplexPoint, samples: int,
                                     rng: np.random.Generator) -> FloatArray:
    """
    Monte Carlo draws of Y = sum_i |logit(X_i) - logit(c_i)|; the K > 2 density has no closed form.
    """
    if p.dimension != c.dimension:
        raise DomainError(f"dimension mismatch: parameters K={p.dimension}, target K={c.dimension}")
    log_x = _dirichlet_log_samples(p, rng, samples)
    logit_x = log_x - np.log1p(-np.minimum(np.exp(log_x), _ONE_BELOW))
    target = c.vector
    logit_c = np.log(target) - np.log1p(-target)
    return np.abs(logit_x - logit_c).sum(axis=1)


def cosine_error(x: SimplexPoint | VectorLike, c: SimplexPoint | VectorLike) -> float:
    x, c = _as_vector(x), _as_vector(c)
    if x.shape != c.shape:
        raise DomainError(f"dimension mismatch: {x.shape} vs {c.shape}")
    value = 1.0 - float(np.dot(x, c)) / (float(np.linalg.norm(x)) * float(np.linalg.norm(c)))
    return min(max(value, 0.0), 1.0)


def cosine_errors(samples: FloatArray, c: SimplexPoint | VectorLike) -> FloatArray:
    """Row-wise cosine error of an n x K sample matrix against c."""
    c = _as_vector(c)
    samples = np.asarray(samples, dtype=float)
    if samples.shape[-1] != c.shape[0]:
        raise DomainError(f"dimension mismatch: samples have K={samples.shape[-1]}, target K={c.shape[0]}")
    cosine = samples @ c / (np.linalg.norm(samples, axis=1) * np.linalg.norm(c))
    return np.clip(1.0 - cosine, 0.0, 1.0)


def taylor_mean_cosine_error(p: DirichletParams) -> float:
    """
    Second-order Taylor approximation of E CosErr(X, E X) for X ~ Dirichlet(a), from power sums of a.
    """
    a = p.vector
    s1, s2, s3 = a.sum(), np.dot(a, a), np.sum(a ** 3)
    return float(s1 / (2.0 * (1.0 + s1) * s2) * (s1 - s3 / s2))
