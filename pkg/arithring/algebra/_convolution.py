import math
from operator import index

from arithring._docs import _doc_params, doc_binary_operands, doc_truncation
from arithring._exceptions import DomainError

from ._arithfunc import ArithFunc, _empty, check_compatible, e, support_below


def _convolve(f: ArithFunc, g: ArithFunc, unitary: bool) -> ArithFunc:
    check_compatible(f, g)
    bound = f.bound
    out = _empty(bound, f.field)
    fv, gv = f._values, g._values
    g_support = g.support
    for i in f.support:
        a = fv[i]
        for j in support_below(g_support, bound // i):
            if unitary and math.gcd(i, j) != 1:
                continue
            out[i * j] += a * gv[j]
    return ArithFunc(out, f.field)


@_doc_params(doc_binary_operands=doc_binary_operands, doc_truncation=doc_truncation)
def uconv(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    """\
    Unitary convolution ``(f ⊕ g)(n) = sum over d || n of f(d) g(n / d)``.

    {doc_truncation}

    Parameters
    ----------
    {doc_binary_operands}

    Examples
    --------
    >>> uconv(e(2, 10), e(3, 10)) == e(6, 10)
    True
    >>> uconv(e(2, 10), e(2, 10)).is_zero()
    True
    """
    return _convolve(f, g, unitary=True)


@_doc_params(doc_binary_operands=doc_binary_operands)
def dconv(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    """\
    Dirichlet convolution, summing over all divisors instead of unitary ones.

    Parameters
    ----------
    {doc_binary_operands}
    """
    return _convolve(f, g, unitary=False)


def upow(f: ArithFunc, n: int) -> ArithFunc:
    """
    ``n``-th unitary power of `f` by repeated squaring; ``upow(f, 0)`` is ``e(1)``.

    Stops early once the running power vanishes at the bound.
    """
    n = index(n)
    if n < 0:
        raise DomainError("exponent must be nonnegative, got {}".format(n))
    result = e(1, f.bound, f.field)
    base = f
    while n:
        if n & 1:
            result = uconv(result, base)
            if result.is_zero():
                break
        n >>= 1
        if n:
            base = uconv(base, base)
    return result
