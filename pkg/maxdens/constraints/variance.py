import math

import numpy as np
from pydantic import Field, field_validator

from maxdens.constraints.base_constraint import BaseConstraint
from maxdens.core.exceptions import InfeasibleConstraint
from maxdens.core.typing_utils import FloatArray

__all__ = ["Variance"]


class Variance(BaseConstraint):
    """
    Fixed variance of a Beta distribution, in log form:
    h(a, b) = log a + log b - 2 log(a + b) - log(a + b + 1) - log v.

    Every v in (0, 1/4) is attainable for every target location; nothing else is.
    """

    kind = "variance"
    parameter = "v"

    v: float = Field(allow_inf_nan=False)

    @field_validator('v')
    def validate_v(cls, value):
        if not 0.0 < value < 0.25:
            raise InfeasibleConstraint(f"a Beta variance must lie in (0, 1/4), got v={value!r}", v=value)
        return value

    def check_dimension(self, k: int) -> None:
        if k != 2:
            raise InfeasibleConstraint(f"the variance constraint is defined for Beta distributions only, got K={k}",
                                       dimension=k)

    def value(self, a: FloatArray) -> float:
        self.check_dimension(a.size)
        x, y = float(a[0]), float(a[1])
        s = x + y
        return math.log(x) + math.log(y) - 2.0 * math.log(s) - math.log1p(s) - math.log(self.v)

    def jacobian(self, a: FloatArray) -> FloatArray:
        self.check_dimension(a.size)
        s = float(a[0] + a[1])
        return 1.0 / a - 2.0 / s - 1.0 / (s + 1.0)
