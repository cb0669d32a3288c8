from ._arithfunc import (
    ArithFunc,
    add,
    check_compatible,
    e,
    one,
    scale,
    sum_functions,
    zero,
)
from ._convolution import dconv, uconv, upow
from ._field import GAUSSIAN, RATIONAL, CoefficientField, get_field
from ._inverse import geometric_inverse, inverse, is_unit, mobius_star
from ._multiplicative import is_multiplicative, multiplicative_from
from ._valuation import (
    ABOVE_BOUND,
    Finite,
    OrderValue,
    degree,
    is_topologically_nilpotent,
    norm,
    order,
    pairing,
    power_orders,
)

__all__ = [
    "ArithFunc",
    "CoefficientField",
    "RATIONAL",
    "GAUSSIAN",
    "get_field",
    "OrderValue",
    "Finite",
    "ABOVE_BOUND",
    "e",
    "zero",
    "one",
    "add",
    "scale",
    "sum_functions",
    "check_compatible",
    "uconv",
    "dconv",
    "upow",
    "order",
    "norm",
    "degree",
    "pairing",
    "power_orders",
    "is_topologically_nilpotent",
    "is_unit",
    "inverse",
    "geometric_inverse",
    "mobius_star",
    "multiplicative_from",
    "is_multiplicative",
]
