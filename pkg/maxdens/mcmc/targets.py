import math

import numpy as np
from pydantic import Field

from maxdens.core.distributions import beta_cdf, beta_log_density
from maxdens.core.exceptions import DomainError
from maxdens.schema import FrozenSchema
from maxdens.schema.params import BetaParams

__all__ = ["TargetDistribution", "TARGETS", "get_target"]


class TargetDistribution(FrozenSchema):
    """A finite mixture of Beta distributions on (0, 1)."""

    name: str
    weights: tuple[float, ...] = Field(min_length=1)
    components: tuple[BetaParams, ...] = Field(min_length=1)

    def log_density(self, x: float) -> float:
        terms = [math.log(w) + beta_log_density(p, x) for w, p in zip(self.weights, self.components)]
        return float(np.logaddexp.reduce(terms)) if len(terms) > 1 else terms[0]

    def cdf(self, x: float) -> float:
        return math.fsum(w * beta_cdf(p, x) for w, p in zip(self.weights, self.components))

    def cdf_many(self, xs) -> np.ndarray:
        return np.array([self.cdf(x) for x in xs])

    def __repr__(self):
        return f"Target {self.name}"


def _single(name: str, a: float, b: float) -> TargetDistribution:
    return TargetDistribution(name=name, weights=(1.0,), components=(BetaParams(a=a, b=b),))


TARGETS: dict[str, TargetDistribution] = {
    "A": _single("A", 1.0, 1.0),
    "B": _single("B", 1.0, 1000.0),
    "C": TargetDistribution(name="C", weights=(0.75, 0.25),
                            components=(BetaParams(a=2.0, b=5.0), BetaParams(a=10.0, b=2.0))),
    "D": _single("D", 0.5, 0.5),
}


def get_target(name: str) -> TargetDistribution:
    try:
        return TARGETS[name]
    except KeyError:
        raise DomainError(f"unknown target {name!r}; expected one of {sorted(TARGETS)}") from None
