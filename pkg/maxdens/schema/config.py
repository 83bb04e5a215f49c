from pydantic import Field, NonNegativeInt, PositiveFloat, PositiveInt

from maxdens.core.defaults import DEFAULT_MAX_RESTARTS, DEFAULT_MAX_TOTAL_ITERATIONS, DEFAULT_MAXITER, \
    DEFAULT_RHO, DEFAULT_TOL, RESTART_MAXITER_FACTOR, RESTART_RHO_FACTOR
from maxdens.schema import FrozenSchema, Schema
from maxdens.schema.params import BetaParams, DirichletParams

__all__ = ['SolverConfig', 'SolveReport']


class SolverConfig(FrozenSchema):
    rho: float = Field(DEFAULT_RHO, gt=0.0, le=1.0)
    maxiter: PositiveInt = DEFAULT_MAXITER
    tol: PositiveFloat = DEFAULT_TOL
    max_restarts: NonNegativeInt = DEFAULT_MAX_RESTARTS
    max_total_iterations: PositiveInt = DEFAULT_MAX_TOTAL_ITERATIONS

    def restarted(self) -> "SolverConfig":
        """The configuration for the next attempt: a smaller step and a larger iteration budget."""
        return self.model_copy(update={"rho": self.rho / RESTART_RHO_FACTOR,
                                       "maxiter": self.maxiter * RESTART_MAXITER_FACTOR})


class SolveReport(Schema):
    params: BetaParams | DirichletParams
    iterations: int
    restarts: int
    final_h: float
    final_step_norm: float
    converged: bool
    rho: float
    maxiter: int
    start: str = "initial"
    kkt_residual: float = float("nan")

    def __repr__(self):
        state = "converged" if self.converged else "failed"
        return f"SolveReport({self.params!r}, {state} after {self.iterations} iterations, {self.restarts} restarts)"
