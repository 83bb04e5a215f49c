from typing import ClassVar

import numpy as np

from maxdens.core.exceptions import DomainError
from maxdens.core.typing_utils import FloatArray, VectorLike
from maxdens.schema import FrozenSchema

__all__ = ['BaseConstraint', 'as_shape_vector', 'constraint_value', 'constraint_jacobian']


def as_shape_vector(a: VectorLike) -> FloatArray:
    a = np.asarray(a, dtype=float).ravel()
    if a.size < 2 or not np.all(np.isfinite(a)) or np.any(a <= 0.0):
        raise DomainError("shape parameters must be at least two positive finite numbers")
    return a


class BaseConstraint(FrozenSchema):
    """
    A scale constraint h(a) = 0 on the shape vector. This is the structure every constraint follows;
    subclasses supply the value, its analytic Jacobian and the parameter they are built from.
    """

    kind: ClassVar[str] = "base"
    parameter: ClassVar[str] = "value"

    def value(self, a: FloatArray) -> float:
        raise NotImplementedError

    def jacobian(self, a: FloatArray) -> FloatArray:
        raise NotImplementedError

    def check_dimension(self, k: int) -> None:
        pass

    @property
    def target(self) -> float:
        return getattr(self, self.parameter)

    @classmethod
    def from_value(cls, value: float) -> "BaseConstraint":
        return cls.model_validate({cls.parameter: value})

    def __repr__(self):
        return f"{self.__class__.__name__}({self.parameter}={self.target!r})"


def constraint_value(constraint: BaseConstraint, a: VectorLike) -> float:
    return constraint.value(as_shape_vector(a))


def constraint_jacobian(constraint: BaseConstraint, a: VectorLike) -> FloatArray:
    return constraint.jacobian(as_shape_vector(a))
