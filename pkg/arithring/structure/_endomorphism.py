import logging
import warnings
from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple

from arithring._exceptions import BoundMismatchError, DomainError, KernelConditionError
from arithring.algebra import (
    ArithFunc,
    Finite,
    check_compatible,
    e,
    get_field,
    order,
    uconv,
    zero,
)
from arithring.algebra._arithfunc import FieldLike, _empty
from arithring.numtheory import get_sieve, prime, prime_powers

logger = logging.getLogger(__name__)

Column = Tuple[int, int]


class GammaTable:
    """
    Images ``gamma_(i,j)`` of the prime powers ``p_i ** j`` under an endomorphism.

    The endomorphism ``theta`` of A_N sends ``e_k`` with
    ``k = p_i1^j1 ... p_ir^jr`` to ``gamma_(i1,j1) ⊕ ... ⊕ gamma_(ir,jr)`` and
    extends linearly. The table is validated when it is built:

    * two images in the same column ``i`` must multiply to zero (this includes an
      image with itself), otherwise :class:`~arithring.KernelConditionError`;
    * an image of order below ``p_i ** j`` triggers a warning, since such a map
      can send functions supported above N to something visible below N and the
      homomorphism law may then fail in A_N;
    * entries for prime powers above N are ignored with a warning.

    Missing entries map to zero.

    Parameters
    ----------
    images
        ``{(i, j): gamma_(i,j)}``, all at a common bound and field.
    bound
        Bound of the table, required when `images` is empty.
    field
        Coefficient field, used when `images` is empty.
    """

    def __init__(
        self,
        images: Mapping[Column, ArithFunc],
        bound: Optional[int] = None,
        field: FieldLike = None,
    ):
        images = {(int(i), int(j)): g for (i, j), g in images.items()}
        if images:
            first = next(iter(images.values()))
            check_compatible(*images.values())
            if bound is not None and bound != first.bound:
                raise BoundMismatchError(
                    "table images live at bound {}, not {}".format(first.bound, bound)
                )
            if field is not None and get_field(field) != first.field:
                raise BoundMismatchError(
                    "table images are over {}, not {}".format(
                        first.field.name, get_field(field).name
                    )
                )
            bound, field = first.bound, first.field
        elif bound is None:
            raise DomainError("an empty GammaTable needs an explicit bound")
        self.bound = bound
        self.field = get_field(field)

        kept = {}
        for (i, j), image in sorted(images.items()):
            if i < 1 or j < 1:
                raise DomainError(
                    "table keys are (prime index, exponent) >= 1, got {}".format((i, j))
                )
            q = prime(i) ** j
            if q > bound:
                warnings.warn(
                    "entry {} for {} lies above the bound {} and is ignored".format(
                        (i, j), q, bound
                    ),
                    UserWarning,
                )
                continue
            if order(image) < Finite(q):
                warnings.warn(
                    "image of {} has order {} < {}; the map may not be a homomorphism "
                    "of the truncated ring".format((i, j), order(image), q),
                    UserWarning,
                )
            kept[(i, j)] = image
        self._images: Dict[Column, ArithFunc] = kept
        self._check_kernel_condition()
        self._cache: Dict[int, ArithFunc] = {}

    def _check_kernel_condition(self):
        columns = {}
        for (i, j), image in self._images.items():
            columns.setdefault(i, []).append((j, image))
        for i, entries in columns.items():
            for a, (j, g) in enumerate(entries):
                for k, h in entries[a:]:
                    if not uconv(g, h).is_zero():
                        raise KernelConditionError(
                            "gamma_({0},{1}) ⊕ gamma_({0},{2}) is not zero".format(i, j, k)
                        )

    @classmethod
    def identity(cls, bound: int, field: FieldLike = None) -> "GammaTable":
        """The table ``gamma_(i,j) = e(p_i ** j)`` of the identity map."""
        return cls.from_rule(bound, lambda i, j: e(prime(i) ** j, bound, field), field)

    @classmethod
    def from_rule(
        cls,
        bound: int,
        rule: Callable[[int, int], Optional[ArithFunc]],
        field: FieldLike = None,
    ) -> "GammaTable":
        """
        Tabulate ``rule(i, j)`` over every prime power ``p_i ** j <= bound``.

        `rule` may return None to leave an entry out (zero image).

        Examples
        --------
        >>> doubling = GammaTable.from_rule(
        ...     100, lambda i, j: e(prime(i) ** (2 * j), 100) if prime(i) ** (2 * j) <= 100 else None
        ... )
        """
        sieve = get_sieve()
        images = {}
        for q in prime_powers(bound):
            (p, j), = sieve.factor_pairs(int(q))
            image = rule(sieve.prime_index(p), j)
            if image is not None:
                images[(sieve.prime_index(p), j)] = image
        return cls(images, bound=bound, field=field)

    def __getitem__(self, key: Column) -> ArithFunc:
        image = self._images.get(key)
        return zero(self.bound, self.field) if image is None else image

    def __contains__(self, key: Column) -> bool:
        return key in self._images

    def __len__(self) -> int:
        return len(self._images)

    def items(self) -> Iterator[Tuple[Column, ArithFunc]]:
        return iter(self._images.items())

    def image_of_index(self, k: int) -> ArithFunc:
        """``theta(e_k)``, the ⊕-product of the images of the prime-power parts of ``k``."""
        image = self._cache.get(k)
        if image is None:
            sieve = get_sieve()
            image = e(1, self.bound, self.field)
            for p, a in sieve.factor_pairs(k):
                image = uconv(image, self[(sieve.prime_index(p), a)])
                if image.is_zero():
                    break
            self._cache[k] = image
        return image

    def __repr__(self) -> str:
        return "GammaTable(bound={}, field={!r}, entries={})".format(
            self.bound, self.field.name, len(self)
        )


def apply_endomorphism(f: ArithFunc, t: GammaTable) -> ArithFunc:
    """
    Apply the endomorphism defined by `t` to `f`.

    Computes ``theta(f) = sum_k f(k) theta(e_k)``; ``theta(e_1) = e_1``.
    Images of the basis elements are memoized on the table.

    Parameters
    ----------
    f
        Function at the bound and field of the table.
    t
        A validated :class:`GammaTable`.
    """
    if f.bound != t.bound or f.field != t.field:
        raise BoundMismatchError(
            "function at ({}, {}) but table at ({}, {})".format(
                f.bound, f.field.name, t.bound, t.field.name
            )
        )
    total = _empty(f.bound, f.field)
    for k, c in f.items():
        image = t.image_of_index(k)
        for n, v in image.items():
            total[n] += c * v
    logger.debug("Endomorphism image cache holds {} entries".format(len(t._cache)))
    return ArithFunc(total, f.field)
