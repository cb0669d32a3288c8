"""arithring."""

# Set default logging handler to avoid logging with logging.lastResort logger.
import logging

from ._constants import (
    _CONSTANTS,
    NOT_FOUND_WITHIN,
    NOT_POLYNOMIAL_TYPE,
    UNDEFINED,
    ZERO,
    Marker,
)
from ._exceptions import (
    BoundMismatchError,
    DomainError,
    KernelConditionError,
    SerializationError,
)
from ._settings import settings

# this import needs to come after prior imports to prevent circular import
from . import numtheory, algebra, structure, factorization, data, cli

# https://github.com/python-poetry/poetry/pull/2366#issuecomment-652418094
from importlib.metadata import version

package_name = "arithring"
__version__ = version(package_name)

settings.verbosity = logging.INFO

__all__ = [
    "settings",
    "_CONSTANTS",
    "Marker",
    "ZERO",
    "UNDEFINED",
    "NOT_FOUND_WITHIN",
    "NOT_POLYNOMIAL_TYPE",
    "DomainError",
    "BoundMismatchError",
    "KernelConditionError",
    "SerializationError",
    "numtheory",
    "algebra",
    "structure",
    "factorization",
    "data",
    "cli",
]
