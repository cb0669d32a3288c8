class DomainError(ValueError):
    """An operation was called outside its domain."""


class BoundMismatchError(DomainError):
    """Operands live in truncated rings of different bounds or over different fields."""


class KernelConditionError(DomainError):
    """A GammaTable has two images in the same column whose product is nonzero."""


class SerializationError(ValueError):
    """Text does not follow the arithring line format."""
