import logging
import math

import numpy as np
from pydantic import Field

from maxdens.core.defaults import DEFAULT_MH_BURNIN, DEFAULT_MH_INITIAL_STATE, DEFAULT_MH_ITERS
from maxdens.core.distributions import beta_log_density, beta_sample
from maxdens.core.exceptions import ConvergenceFailure, DomainError, InfeasibleConstraint
from maxdens.schema import Schema
from maxdens.schema.config import SolverConfig
from maxdens.schema.params import BetaParams
from .proposals import BaseProposal, ProposalSpec, build_proposal
from .targets import TargetDistribution

__all__ = ["MhCounters", "MhRun", "log_acceptance_ratio", "mh_step", "run_chain"]

logger = logging.getLogger(__name__)


class MhCounters(Schema):
    accepted: int = 0
    solver_failures: int = 0
    infeasible_returns: int = 0


class MhRun(Schema):
    target: str
    method: str
    seed: int
    iters: int
    burnin: int
    states: np.ndarray = Field(repr=False)
    accepted: int
    solver_failures: int
    infeasible_returns: int

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.iters


def log_acceptance_ratio(target: TargetDistribution, x: float, x_new: float, forward: BetaParams,
                         backward: BetaParams) -> float:
    """
    log of pi(x') Beta(x | a_x', b_x') / (pi(x) Beta(x' | a_x, b_x)); swapping the states and the
    parameter pairs negates it.
    """
    return (target.log_density(x_new) + beta_log_density(backward, x)
            - target.log_density(x) - beta_log_density(forward, x_new))


def mh_step(target: TargetDistribution, proposal: BaseProposal, x: float, rng: np.random.Generator,
            counters: MhCounters | None = None) -> tuple[float, bool]:
    """
    One Metropolis-Hastings transition from x. A proposal whose reverse move is impossible, or whose
    parameters could not be computed, is rejected.
    """
    counters = counters if counters is not None else MhCounters()
    try:
        forward = proposal.params(x)
    except (ConvergenceFailure, InfeasibleConstraint, DomainError):
        counters.solver_failures += 1
        return x, False
    if forward is None:
        counters.infeasible_returns += 1
        return x, False
    x_new = beta_sample(forward, rng)
    try:
        backward = proposal.params(x_new)
    except (ConvergenceFailure, InfeasibleConstraint, DomainError):
        counters.solver_failures += 1
        return x, False
    if backward is None:
        counters.infeasible_returns += 1
        return x, False
    log_ratio = log_acceptance_ratio(target, x, x_new, forward, backward)
    if math.log1p(-rng.random()) < log_ratio:
        counters.accepted += 1
        return x_new, True
    return x, False


def run_chain(target: TargetDistribution, spec: ProposalSpec, iters: int = DEFAULT_MH_ITERS,
              burnin: int = DEFAULT_MH_BURNIN, seed: int = 0, cfg: SolverConfig | None = None,
              initial_state: float = DEFAULT_MH_INITIAL_STATE) -> MhRun:
    """
    Run burnin + iters transitions from initial_state and keep the last iters states.
    Acceptance and failure counts cover the kept states only.
    """
    if iters <= 0 or burnin < 0:
        raise DomainError(f"need iters > 0 and burnin >= 0, got iters={iters}, burnin={burnin}")
    rng = np.random.default_rng(seed)
    proposal = build_proposal(spec, cfg)
    x = float(initial_state)
    for _ in range(burnin):
        x, _ = mh_step(target, proposal, x, rng)
    counters = MhCounters()
    states = np.empty(iters)
    for i in range(iters):
        x, _ = mh_step(target, proposal, x, rng, counters)
        states[i] = x
    if counters.solver_failures:
        logger.warning("Chain %s/%s seed=%d: %d proposals rejected after solver failures", target.name,
                       spec.label, seed, counters.solver_failures)
    return MhRun(target=target.name, method=spec.label, seed=seed, iters=iters, burnin=burnin, states=states,
                 **counters.model_dump())
