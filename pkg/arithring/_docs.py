"""Shared docstrings."""
from inspect import cleandoc

doc_binary_operands = """\
f
    Left operand, an element of the truncated ring A_N.
g
    Right operand. Must have the same bound and coefficient field as `f`,
    otherwise :class:`~arithring.BoundMismatchError` is raised.\
"""

doc_bound = """\
bound
    Truncation bound N; the function is defined on the indices ``1..N``.\
"""

doc_field = """\
field
    Coefficient field, one of ``"rational"``, ``"gaussian"`` or a
    :class:`~arithring.algebra.CoefficientField`. Defaults to
    ``arithring.settings.field``.\
"""

doc_truncation = """\
All identities hold in the quotient ring A_N: an element whose support lies
above the bound is the zero element there.\
"""


def _doc_params(**kwds):
    """\
    Fill ``{placeholders}`` of the decorated object's docstring with shared snippets.

    Docstrings should start with "\\" in the first line for proper formatting.
    """

    def dec(obj):
        obj.__orig_doc__ = obj.__doc__
        obj.__doc__ = cleandoc(obj.__doc__).format_map(kwds)
        return obj

    return dec
