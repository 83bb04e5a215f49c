from pydantic import BaseModel, ConfigDict

__all__ = ['Schema', 'FrozenSchema']


class Schema(BaseModel):
    """
    Base model for every value type, config and manifest in maxdens.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, from_attributes=True)


class FrozenSchema(Schema):
    """
    Immutable value type; distribution parameters and locations never change after construction.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, from_attributes=True, frozen=True)
