from .base_constraint import BaseConstraint, as_shape_vector, constraint_value, constraint_jacobian
from .concentration import Concentration
from .variance import Variance
from .cosine_error import MeanCosineError, power_sums

__all__ = ["BaseConstraint", "Concentration", "Variance", "MeanCosineError", "ScaleConstraint",
           "CONSTRAINTS", "build_constraint", "constraint_value", "constraint_jacobian", "as_shape_vector",
           "power_sums"]

ScaleConstraint = Concentration | Variance | MeanCosineError

CONSTRAINTS: dict[str, type[BaseConstraint]] = {
    Concentration.kind: Concentration,
    Variance.kind: Variance,
    MeanCosineError.kind: MeanCosineError,
}


def build_constraint(kind: str, value: float) -> BaseConstraint:
    try:
        constraint_class = CONSTRAINTS[kind]
    except KeyError:
        raise ValueError(f"unknown constraint {kind!r}; expected one of {sorted(CONSTRAINTS)}") from None
    return constraint_class.from_value(value)
