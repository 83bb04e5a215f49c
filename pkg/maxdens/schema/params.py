import math

import numpy as np
from pydantic import Field, PositiveFloat, field_validator

from maxdens.core.typing_utils import FloatArray
from maxdens.schema import FrozenSchema

__all__ = ['BetaParams', 'DirichletParams', 'SimplexPoint']


class BetaParams(FrozenSchema):
    a: PositiveFloat = Field(allow_inf_nan=False)
    b: PositiveFloat = Field(allow_inf_nan=False)

    @property
    def concentration(self) -> float:
        return self.a + self.b

    @property
    def mean(self) -> float:
        return self.a / (self.a + self.b)

    def as_dirichlet(self) -> "DirichletParams":
        return DirichletParams(a=(self.a, self.b))

    def __repr__(self):
        return f"Beta({self.a!r}, {self.b!r})"


class DirichletParams(FrozenSchema):
    a: tuple[float, ...] = Field(min_length=2)

    @field_validator('a', mode='before')
    def validate_shapes(cls, value):
        shapes = tuple(float(v) for v in np.asarray(value, dtype=float).ravel())
        if not all(math.isfinite(v) and v > 0.0 for v in shapes):
            raise ValueError("every Dirichlet shape must be positive and finite")
        return shapes

    @property
    def dimension(self) -> int:
        return len(self.a)

    @property
    def vector(self) -> FloatArray:
        return np.array(self.a, dtype=float)

    @property
    def concentration(self) -> float:
        return math.fsum(self.a)

    def as_beta(self) -> BetaParams:
        if self.dimension != 2:
            raise ValueError(f"only a 2-dimensional Dirichlet is a Beta, got K={self.dimension}")
        return BetaParams(a=self.a[0], b=self.a[1])


class SimplexPoint(FrozenSchema):
    """
    A point strictly inside the probability simplex; entries are renormalized on construction.
    """

    c: tuple[float, ...] = Field(min_length=2)

    @field_validator('c', mode='before')
    def validate_location(cls, value):
        entries = np.asarray(value, dtype=float).ravel()
        if not np.all(np.isfinite(entries)) or np.any(entries <= 0.0):
            raise ValueError("simplex entries must be positive and finite; floor zeros before construction")
        return tuple(float(v) for v in entries / math.fsum(entries))

    @property
    def dimension(self) -> int:
        return len(self.c)

    @property
    def vector(self) -> FloatArray:
        return np.array(self.c, dtype=float)

    @classmethod
    def beta(cls, c: float) -> "SimplexPoint":
        return cls(c=(c, 1.0 - c))
