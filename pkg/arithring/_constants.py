from enum import Enum


class _CONSTANTS:
    BOUND_KEY = "bound"
    FIELD_KEY = "field"
    CLASS_KEY = "class"
    ORDER_KEY = "order"
    GAMMA_KEY = "gamma"
    ROLE_KEY = "role"
    VERIFIED_KEY = "verified"
    RATIONAL = "rational"
    GAUSSIAN = "gaussian"


class Marker(Enum):
    """Distinguished non-numeric results."""

    # exterior zero of the monoid-with-zero (N+, unitary product)
    ZERO = "zero"
    UNDEFINED = "undefined"
    NOT_FOUND_WITHIN = "not-found-within"
    NOT_POLYNOMIAL_TYPE = "not-polynomial-type"

    def __str__(self) -> str:
        return self.value


ZERO = Marker.ZERO
UNDEFINED = Marker.UNDEFINED
NOT_FOUND_WITHIN = Marker.NOT_FOUND_WITHIN
NOT_POLYNOMIAL_TYPE = Marker.NOT_POLYNOMIAL_TYPE
