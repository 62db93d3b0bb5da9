class DimensionError(ValueError):
    """Operands have incompatible or invalid shapes."""


class ContractError(ValueError):
    """An input violates a documented precondition (e.g. non-Hermitian matrix)."""


class UnsupportedDimension(ValueError):
    """The requested construction does not exist for this dimension or field."""
