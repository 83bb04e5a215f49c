"""
Independence-style Beta proposals for Metropolis-Hastings on (0, 1): at state x the proposal is
Beta(a_x, b_x), with (a_x, b_x) chosen by one of the location methods centered on x.
"""
from typing import ClassVar

from pydantic import Field, PositiveFloat

from maxdens.constraints import Concentration, Variance
from maxdens.core.baselines import adaptive_variance_method, mean_method_beta, mean_method_fixed_variance, \
    median_adaptive_method, median_method
from maxdens.core.defaults import DEFAULT_MH_ALPHA, DEFAULT_MH_VARIANCE, MH_METHODS_LITERAL
from maxdens.core.exceptions import ConvergenceFailure, DomainError, InfeasibleConstraint, MaxDensError
from maxdens.core.solver import solve_max_density_beta
from maxdens.schema import FrozenSchema
from maxdens.schema.config import SolverConfig
from maxdens.schema.params import BetaParams

__all__ = ["ProposalSpec", "BaseProposal", "MaxDensityVariance", "MeanConcentration", "MeanVariance",
           "MeanAdaptive", "MedianConcentration", "MedianVariance", "MedianAdaptive", "PROPOSALS",
           "METHOD_ORDER", "build_proposal", "propose"]


class ProposalSpec(FrozenSchema):
    method: MH_METHODS_LITERAL
    v: float = Field(DEFAULT_MH_VARIANCE, gt=0.0, lt=0.25)
    alpha: PositiveFloat = DEFAULT_MH_ALPHA

    @property
    def label(self) -> str:
        """The method name, with its tuning parameter when it differs from the default."""
        parameter = PROPOSALS[self.method].parameter
        value = getattr(self, parameter)
        if value == type(self).model_fields[parameter].default:
            return self.method
        return f"{self.method}({parameter}={value:g})"


class BaseProposal:
    """
    Maps a state x to proposal parameters. Results, including solver failures, are memoized
    on the exact state for the life of the object, so one instance serves one chain.
    """

    method: ClassVar[str] = "base"
    parameter: ClassVar[str] = "v"

    def __init__(self, spec: ProposalSpec, cfg: SolverConfig | None = None):
        self.spec = spec
        self.cfg = cfg or SolverConfig()
        self._memo: dict[float, BetaParams | None | MaxDensError] = {}

    def compute(self, x: float) -> BetaParams | None:
        raise NotImplementedError

    def params(self, x: float) -> BetaParams | None:
        """
        Proposal parameters at x; None when no proposal centered on x exists.
        Raises ConvergenceFailure, InfeasibleConstraint or DomainError when the parameters could not be
        computed, for instance at a state that underflowed to 0 or 1.
        """
        try:
            cached = self._memo[x]
        except KeyError:
            try:
                cached = self.compute(x)
            except (ConvergenceFailure, InfeasibleConstraint, DomainError) as e:
                cached = e
            self._memo[x] = cached
        if isinstance(cached, MaxDensError):
            raise cached
        return cached

    def __repr__(self):
        return f"{self.__class__.__name__}({self.spec.label})"


class MaxDensityVariance(BaseProposal):
    method = "I"

    def compute(self, x: float) -> BetaParams:
        return solve_max_density_beta(x, Variance(v=self.spec.v), self.cfg).params


class MeanConcentration(BaseProposal):
    method = "II"
    parameter = "alpha"

    def compute(self, x: float) -> BetaParams:
        return mean_method_beta(x, self.spec.alpha)


class MeanVariance(BaseProposal):
    """Mean x with fixed variance; states where that Beta does not exist get no proposal."""
    method = "III"

    def compute(self, x: float) -> BetaParams | None:
        return mean_method_fixed_variance(x, self.spec.v)


class MeanAdaptive(BaseProposal):
    method = "IV"

    def compute(self, x: float) -> BetaParams:
        return adaptive_variance_method(x, self.spec.v)


class MedianConcentration(BaseProposal):
    method = "M-alpha"
    parameter = "alpha"

    def compute(self, x: float) -> BetaParams:
        return median_method(x, Concentration(alpha=self.spec.alpha))


class MedianVariance(BaseProposal):
    method = "M-v"

    def compute(self, x: float) -> BetaParams:
        return median_method(x, Variance(v=self.spec.v))


class MedianAdaptive(BaseProposal):
    method = "M-adaptive"

    def compute(self, x: float) -> BetaParams:
        return median_adaptive_method(x, self.spec.v)


PROPOSALS: dict[str, type[BaseProposal]] = {
    proposal.method: proposal
    for proposal in (MaxDensityVariance, MeanConcentration, MeanVariance, MeanAdaptive,
                     MedianConcentration, MedianVariance, MedianAdaptive)
}
METHOD_ORDER: tuple[str, ...] = tuple(PROPOSALS)


def build_proposal(spec: ProposalSpec, cfg: SolverConfig | None = None) -> BaseProposal:
    return PROPOSALS[spec.method](spec, cfg)


def propose(spec: ProposalSpec, x: float, cfg: SolverConfig | None = None) -> BetaParams | None:
    """One-off proposal parameters at x, without memoization."""
    return PROPOSALS[spec.method](spec, cfg).compute(x)
