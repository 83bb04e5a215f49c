import math

import numpy as np
from pydantic import Field, PositiveFloat

from maxdens.constraints.base_constraint import BaseConstraint
from maxdens.core.typing_utils import FloatArray

__all__ = ["MeanCosineError", "power_sums"]


def _leave_one_out_sums(a: FloatArray) -> FloatArray:
    before = np.concatenate(([0.0], np.cumsum(a)[:-1]))
    after = np.concatenate((np.cumsum(a[::-1])[:-1][::-1], [0.0]))
    return before + after


def power_sums(a: FloatArray) -> tuple[float, float, float, float]:
    """
    s1, s2, s3 and the spread s1 - s3/s2. The spread is summed as sum(a_i^2 * (s1 - a_i)) / s2
    over leave-one-out sums, which stays accurate when one coordinate dominates.
    """
    s1 = float(np.sum(a))
    s2 = float(np.dot(a, a))
    s3 = float(np.sum(a ** 3))
    spread = float(np.dot(a * a, _leave_one_out_sums(a))) / s2
    return s1, s2, s3, spread


class MeanCosineError(BaseConstraint):
    """
    Fixed mean cosine error kappa between a Dirichlet draw and its mean, through the second-order
    Taylor approximation, in log form:
    h(a) = -log 2 + log s1 - log(1 + s1) - log s2 + log(s1 - s3/s2) - log kappa.
    """

    kind = "cosine"
    parameter = "kappa"

    kappa: PositiveFloat = Field(allow_inf_nan=False)

    def value(self, a: FloatArray) -> float:
        s1, s2, _, spread = power_sums(a)
        return -math.log(2.0) + math.log(s1) - math.log1p(s1) - math.log(s2) + math.log(spread) \
            - math.log(self.kappa)

    def jacobian(self, a: FloatArray) -> FloatArray:
        s1, s2, s3, spread = power_sums(a)
        d_spread = 1.0 - (3.0 * a * a * s2 - 2.0 * a * s3) / (s2 * s2)
        return 1.0 / (s1 * (1.0 + s1)) - 2.0 * a / s2 + d_spread / spread
