import numpy as np
from pydantic import Field, PositiveFloat

from maxdens.constraints.base_constraint import BaseConstraint
from maxdens.core.typing_utils import FloatArray

__all__ = ["Concentration"]


class Concentration(BaseConstraint):
    """Fixed concentration: the shapes sum to alpha. Written as the ratio sum(a)/alpha - 1."""

    kind = "concentration"
    parameter = "alpha"

    alpha: PositiveFloat = Field(allow_inf_nan=False)

    def value(self, a: FloatArray) -> float:
        return float(np.sum(a)) / self.alpha - 1.0

    def jacobian(self, a: FloatArray) -> FloatArray:
        return np.full(a.shape, 1.0 / self.alpha)
