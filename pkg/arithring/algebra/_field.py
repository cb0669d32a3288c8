import re
from fractions import Fraction
from typing import Union

import numpy as np
import sympy
from sympy.polys.domains import QQ, QQ_I, ZZ
from sympy.polys.polyerrors import CoercionFailed

from arithring._constants import _CONSTANTS
from arithring._exceptions import DomainError, SerializationError
from arithring._settings import settings

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_GAUSSIAN_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)i$")


def _to_rational(x):
    if isinstance(x, QQ.dtype):
        return x
    if isinstance(x, bool):
        raise DomainError("booleans are not coefficients")
    if isinstance(x, (int, np.integer, ZZ.dtype)):
        return QQ(int(x))
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, sympy.Rational):
        return QQ(int(x.p), int(x.q))
    if isinstance(x, str):
        return RATIONAL.parse(x)
    raise DomainError("cannot convert {!r} to an exact rational".format(x))


class CoefficientField:
    """
    Exact coefficient field of an :class:`~arithring.algebra.ArithFunc`.

    A thin wrapper around a sympy domain (``QQ`` or ``QQ_I``) that adds the
    conversions and the text format used across arithring.

    Parameters
    ----------
    name
        ``"rational"`` or ``"gaussian"``.
    domain
        The sympy domain whose elements are the coefficients.
    """

    def __init__(self, name: str, domain):
        self.name = name
        self.domain = domain

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def is_zero(self, a) -> bool:
        return a == self.domain.zero

    def convert(self, x):
        """
        Convert `x` into an element of this field.

        Accepts Python and numpy integers, :class:`fractions.Fraction`, sympy
        rationals, strings in the text format and elements of the domain itself.
        The Gaussian field also takes ``(re, im)`` pairs and sympy expressions
        such as ``1 + 2*I``.
        """
        if self.domain is QQ:
            if isinstance(x, QQ_I.dtype):
                if x.y != QQ.zero:
                    raise DomainError("{} is not rational".format(x))
                return x.x
            return _to_rational(x)
        if isinstance(x, QQ_I.dtype):
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, tuple):
            re_, im_ = x
            return QQ_I(_to_rational(re_), _to_rational(im_))
        if isinstance(x, sympy.Expr) and not isinstance(x, sympy.Rational):
            try:
                return QQ_I.from_sympy(x)
            except CoercionFailed:
                raise DomainError("cannot convert {!r} to a Gaussian rational".format(x))
        return QQ_I(_to_rational(x), QQ.zero)

    def parse(self, text: str):
        """Parse a coefficient written as ``p/q`` or, for the Gaussian field, ``p/q+r/si``."""
        text = text.strip()
        if self.domain is QQ_I:
            m = _GAUSSIAN_RE.match(text)
            if m is not None:
                return QQ_I(RATIONAL.parse(m.group(1)), RATIONAL.parse(m.group(2)))
            return QQ_I(RATIONAL.parse(text), QQ.zero)
        m = _RATIONAL_RE.match(text)
        if m is None:
            raise SerializationError("malformed rational coefficient {!r}".format(text))
        denominator = int(m.group(2)) if m.group(2) is not None else 1
        if denominator == 0:
            raise SerializationError("zero denominator in {!r}".format(text))
        return QQ(int(m.group(1)), denominator)

    def format(self, a) -> str:
        """Inverse of :meth:`parse`, always writing the denominator."""
        if self.domain is QQ_I:
            real, imag = _format_rational(a.x), _format_rational(a.y)
            sign = "" if imag.startswith("-") else "+"
            return "{}{}{}i".format(real, sign, imag)
        return _format_rational(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefficientField) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return "CoefficientField({!r})".format(self.name)


def _format_rational(a) -> str:
    return "{}/{}".format(int(QQ.numer(a)), int(QQ.denom(a)))


RATIONAL = CoefficientField(_CONSTANTS.RATIONAL, QQ)
GAUSSIAN = CoefficientField(_CONSTANTS.GAUSSIAN, QQ_I)
_FIELDS = {RATIONAL.name: RATIONAL, GAUSSIAN.name: GAUSSIAN}


def get_field(field: Union[str, CoefficientField, None] = None) -> CoefficientField:
    """Resolve a field name, defaulting to ``arithring.settings.field``."""
    if field is None:
        field = settings.field
    if isinstance(field, CoefficientField):
        return field
    try:
        return _FIELDS[field]
    except KeyError:
        raise DomainError(
            "unknown field {!r}, expected one of {}".format(field, list(_FIELDS))
        )
