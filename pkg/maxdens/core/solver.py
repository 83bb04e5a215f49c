"""
Maximum density parameters: the shapes a that maximize the Dirichlet density at a target location c
subject to one scale constraint h(a) = 0.

The objective f(a) = -log Dirichlet(c | a) is convex in a, but a variance constraint does not bound a
convex set and can leave several KKT points. Two-dimensional problems under a concentration or
variance constraint are therefore started from each local maximum of the density at c along the
constraint curve, and the converged solution with the highest density at c is kept. Each iteration
solves the KKT system

    [H  J^T] [delta ]   [-g]
    [J  0  ] [lambda] = [-h]

and moves a fraction rho of the way along delta, halving any coordinate that would turn nonpositive.
"""
import logging
import math

import numpy as np

from maxdens.constraints import BaseConstraint, Concentration, Variance, as_shape_vector
from maxdens.schema.config import SolveReport, SolverConfig
from maxdens.schema.params import BetaParams, DirichletParams, SimplexPoint
from .baselines import constraint_curve, curve_parameter
from .defaults import CURVE_MAX_STARTS, CURVE_SCAN_BOUND, CURVE_SCAN_POINTS, DIRICHLET_INIT_SCALE, KKT_TOLERANCE
from .distributions import dirichlet_log_density
from .exceptions import ConvergenceFailure, DomainError, SingularSystem
from .special import digamma, trigamma
from .typing_utils import FloatArray, VectorLike

__all__ = ['neg_log_density_gradient_hessian', 'newton_eq_step', 'kkt_residual', 'curve_starts',
           'solve_max_density', 'solve_max_density_beta']

logger = logging.getLogger(__name__)

_KKT_RESIDUAL_RTOL = 1e-8
_LOCAL_SCAN = np.linspace(-1.0, 1.0, 41)
_ZOOM_POINTS = 17
_ZOOM_WIDTH = 1e-10
_lgamma = np.vectorize(math.lgamma, otypes=[float])


def neg_log_density_gradient_hessian(c: SimplexPoint, a: VectorLike) -> tuple[FloatArray, FloatArray]:
    """
    Gradient g_i = psi(a_i) - psi(s) - log c_i and Hessian H_ij = psi'(a_i) 1(i = j) - psi'(s)
    of -log Dirichlet(c | a), with s = sum(a).
    """
    a = as_shape_vector(a)
    if a.size != c.dimension:
        raise DomainError(f"dimension mismatch: shapes K={a.size}, target K={c.dimension}")
    s = float(np.sum(a))
    gradient = digamma(a) - digamma(s) - np.log(c.vector)
    hessian = np.diag(trigamma(a)) - trigamma(s)
    return gradient, hessian


def newton_eq_step(gradient: FloatArray, hessian: FloatArray, jacobian: FloatArray,
                   h: float) -> tuple[FloatArray, float]:
    """
    Solve the (K+1)x(K+1) KKT system by LU with partial pivoting plus one round of iterative
    refinement. Returns the Newton direction and the multiplier.
    """
    k = gradient.size
    kkt = np.zeros((k + 1, k + 1))
    kkt[:k, :k] = hessian
    kkt[:k, k] = jacobian
    kkt[k, :k] = jacobian
    rhs = np.append(-gradient, -h)
    try:
        solution = np.linalg.solve(kkt, rhs)
        solution = solution + np.linalg.solve(kkt, rhs - kkt @ solution)
    except np.linalg.LinAlgError as e:
        raise SingularSystem(f"KKT system is singular: {e}") from e
    if not np.all(np.isfinite(solution)):
        raise SingularSystem("KKT system produced a non-finite step")
    residual = float(np.max(np.abs(kkt @ solution - rhs)))
    if residual > _KKT_RESIDUAL_RTOL * (1.0 + float(np.max(np.abs(rhs)))):
        logger.debug("KKT solve residual %.3e exceeds the relative tolerance", residual)
    return solution[:k], float(solution[k])


def kkt_residual(c: SimplexPoint, a: VectorLike, constraint: BaseConstraint) -> float:
    """
    Stationarity residual ||D(g + lambda J)||_inf with the least-squares multiplier, where
    D = diag(min(a_i, 1)).

    When every shape is at least one this is the plain residual ||g + lambda J||_inf. Smaller shapes
    are measured in log coordinates, d/d log a_i = a_i d/da_i, because their gradient entries grow like
    1/a_i; for them the value differs from the unscaled norm, and lambda is the least-squares
    multiplier of the scaled system rather than the one returned by the Newton step.
    """
    a = as_shape_vector(a)
    gradient, _ = neg_log_density_gradient_hessian(c, a)
    scale = np.minimum(a, 1.0)
    scaled_gradient = scale * gradient
    scaled_jacobian = scale * constraint.jacobian(a)
    lam = -float(np.dot(scaled_gradient, scaled_jacobian)) / float(np.dot(scaled_jacobian, scaled_jacobian))
    return float(np.max(np.abs(scaled_gradient + lam * scaled_jacobian)))


def _curve_log_density(shapes, t, log_x: float, log_y: float) -> FloatArray:
    """log Beta((x, y) | a(t), b(t)) along a constraint curve; -inf where a shape leaves (0, inf)."""
    a, b = shapes(np.atleast_1d(np.asarray(t, dtype=float)))
    values = np.full(a.shape, -np.inf)
    ok = np.isfinite(a) & np.isfinite(b) & (a > 0.0) & (b > 0.0)
    a, b = a[ok], b[ok]
    values[ok] = (a - 1.0) * log_x + (b - 1.0) * log_y - _lgamma(a) - _lgamma(b) + _lgamma(a + b)
    return values


def _zoom_maximum(objective, lo: float, hi: float) -> tuple[float, float]:
    while True:
        grid = np.linspace(lo, hi, _ZOOM_POINTS)
        values = objective(grid)
        best = int(np.argmax(values))
        if hi - lo <= _ZOOM_WIDTH * (1.0 + abs(grid[best])):
            return float(grid[best]), float(values[best])
        lo, hi = grid[max(best - 1, 0)], grid[min(best + 1, _ZOOM_POINTS - 1)]


def curve_starts(c: SimplexPoint, constraint: BaseConstraint) -> list[FloatArray]:
    """
    Starting shapes for a two-dimensional concentration or variance problem: the local maxima of the
    density at c along the constraint curve, highest first, at most CURVE_MAX_STARTS of them.

    The curve is scanned on a fixed logit grid plus a fine grid around the member with mean c, so a
    narrow peak near the mean is never stepped over. Every other problem gets no curve starts.
    """
    if c.dimension != 2 or not isinstance(constraint, (Concentration, Variance)):
        return []
    shapes = constraint_curve(constraint)
    log_x, log_y = np.log(c.vector)

    def objective(t):
        return _curve_log_density(shapes, t, log_x, log_y)

    grid = np.linspace(-CURVE_SCAN_BOUND, CURVE_SCAN_BOUND, CURVE_SCAN_POINTS)
    t_mean = curve_parameter(constraint, float(c.vector[0]))
    if t_mean is not None:
        grid = np.union1d(grid, t_mean + _LOCAL_SCAN)
    values = objective(grid)
    padded = np.concatenate(([-np.inf], values, [-np.inf]))
    peaks = np.flatnonzero(np.isfinite(values) & (values >= padded[:-2]) & (values >= padded[2:]))
    peaks = peaks[np.argsort(-values[peaks], kind="stable")][:CURVE_MAX_STARTS]

    refined = []
    for i in peaks:
        t, value = _zoom_maximum(objective, grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)])
        a, b = shapes(t)
        if np.isfinite(value):
            refined.append((value, np.array([a, b], dtype=float)))
    refined.sort(key=lambda item: -item[0])
    return [start for _, start in refined]


def _newton_attempt(c: SimplexPoint, constraint: BaseConstraint, initial: FloatArray, cfg: SolverConfig,
                    maxiter: int):
    a = initial.copy()
    h, step_norm = constraint.value(a), float("inf")
    for iteration in range(1, maxiter + 1):
        try:
            gradient, hessian = neg_log_density_gradient_hessian(c, a)
            delta, _ = newton_eq_step(gradient, hessian, constraint.jacobian(a), h)
            previous = a
            a = previous + cfg.rho * delta
            a = np.where(a <= 0.0, previous / 2.0, a)
            h = constraint.value(a)
            step_norm = float(np.sum(np.abs(a / previous - 1.0)))
        except SingularSystem as e:
            raise SingularSystem(e.message, iteration=iteration) from e
        except (ArithmeticError, ValueError) as e:
            raise SingularSystem(f"numerical failure: {e}", iteration=iteration) from e
        if not np.isfinite(h) or not np.isfinite(step_norm):
            raise SingularSystem("iterate left the domain of the constraint", iteration=iteration)
        if abs(h) + step_norm < cfg.tol:
            return a, iteration, h, step_norm, True
    return a, maxiter, h, step_norm, False


def _solve(c: SimplexPoint, constraint: BaseConstraint, cfg: SolverConfig, initial: FloatArray,
           as_beta: bool) -> SolveReport:
    """
    Newton attempts from every curve start, then from the fixed initial point only if none of them
    converged. A round without a converged attempt is repeated with cfg.restarted() until the
    restart count or cfg.max_total_iterations runs out.
    """
    constraint.check_dimension(c.dimension)
    starts = [("curve", start) for start in curve_starts(c, constraint)] + [("initial", initial)]
    attempt_cfg, spent, report = cfg, 0, None
    for restart in range(cfg.max_restarts + 1):
        best = None
        for label, start in starts:
            remaining = cfg.max_total_iterations - spent
            if remaining <= 0 or (label == "initial" and best is not None):
                break
            maxiter = min(attempt_cfg.maxiter, remaining)
            try:
                a, iterations, h, step_norm, converged = _newton_attempt(c, constraint, start, attempt_cfg, maxiter)
            except SingularSystem as e:
                spent += e.extra.get("iteration", 1)
                logger.debug("Attempt %d from the %s start for %r stopped: %s", restart, label, constraint,
                             e.message)
                continue
            spent += iterations
            params = BetaParams(a=a[0], b=a[1]) if as_beta else DirichletParams(a=a)
            report = SolveReport(params=params, iterations=iterations, restarts=restart, final_h=h,
                                 final_step_norm=step_norm, converged=converged, rho=attempt_cfg.rho,
                                 maxiter=maxiter, start=label)
            if converged:
                density = dirichlet_log_density(DirichletParams(a=a), c)
                if best is None or density > best[0]:
                    best = (density, report, a)
        if best is not None:
            _, report, a = best
            report.kkt_residual = kkt_residual(c, a, constraint)
            if report.kkt_residual > KKT_TOLERANCE:
                logger.warning("Solution for %r has KKT residual %.3e", constraint, report.kkt_residual)
            return report
        if spent >= cfg.max_total_iterations:
            logger.debug("Solve for %r spent its budget of %d iterations", constraint, cfg.max_total_iterations)
            break
        attempt_cfg = attempt_cfg.restarted()
        logger.debug("Round %d for %r did not converge; restarting with rho=%g", restart, constraint,
                     attempt_cfg.rho)
    raise ConvergenceFailure(f"maximum density solve for {constraint!r} did not converge after {restart} restarts "
                             f"and {spent} iterations", report=report, restarts=restart, iterations=spent)


def solve_max_density(c: SimplexPoint, constraint: BaseConstraint, cfg: SolverConfig | None = None) -> SolveReport:
    """
    Maximum density Dirichlet parameters at c. Curve starts come first where they exist; otherwise,
    or when none of them converges, the iteration starts from a = 10 (c + 1) / 2.

    Raises ConvergenceFailure once the restart or iteration budget is spent and InfeasibleConstraint
    for a constraint that no distribution of this dimension can satisfy.
    """
    cfg = cfg or SolverConfig()
    initial = DIRICHLET_INIT_SCALE * (c.vector + 1.0) / 2.0
    return _solve(c, constraint, cfg, initial, as_beta=False)


def solve_max_density_beta(c: float, constraint: BaseConstraint, cfg: SolverConfig | None = None) -> SolveReport:
    """The two-dimensional case; the fallback start is (a, b) = (c, 1 - c)."""
    c = float(c)
    if not 0.0 < c < 1.0:
        raise DomainError(f"target location must lie in (0, 1), got {c!r}")
    cfg = cfg or SolverConfig()
    return _solve(SimplexPoint.beta(c), constraint, cfg, np.array([c, 1.0 - c]), as_beta=True)
