import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from arithring._constants import _CONSTANTS
from arithring._exceptions import DomainError, SerializationError
from arithring.algebra import ArithFunc, e, get_field, scale
from arithring.factorization import FactorizationCertificate
from arithring.structure import BasisFamily, CanonicalDecomposition, GammaTable

logger = logging.getLogger(__name__)

Block = Tuple[ArithFunc, Dict[str, str]]


def _format_header(f: ArithFunc, metadata: Optional[Mapping[str, object]] = None) -> str:
    fields = [
        "{}={}".format(_CONSTANTS.BOUND_KEY, f.bound),
        "{}={}".format(_CONSTANTS.FIELD_KEY, f.field.name),
    ]
    for key, value in (metadata or {}).items():
        fields.append("{}={}".format(key, value))
    return "# " + " ".join(fields)


def _parse_header(line: str) -> Dict[str, str]:
    if not line.startswith("#"):
        raise SerializationError("expected a '# bound=... field=...' header, got {!r}".format(line))
    header = {}
    for token in line[1:].split():
        key, sep, value = token.partition("=")
        if not sep or not key or not value:
            raise SerializationError("malformed header entry {!r}".format(token))
        header[key] = value
    for key in (_CONSTANTS.BOUND_KEY, _CONSTANTS.FIELD_KEY):
        if key not in header:
            raise SerializationError("header {!r} lacks '{}='".format(line, key))
    return header


def dumps(f: ArithFunc, metadata: Optional[Mapping[str, object]] = None) -> str:
    """
    Serialize `f` to the arithring line format.

    Parameters
    ----------
    f
        Function to write.
    metadata
        Extra ``key=value`` pairs appended to the header, e.g. ``{"order": 4}``.

    Returns
    -------
    A header line followed by one ``<index> <coefficient>`` line per nonzero
    value, in ascending index order, newline terminated.

    Examples
    --------
    >>> print(dumps(e(6, 10)), end="")
    # bound=10 field=rational
    6 1/1
    """
    lines = [_format_header(f, metadata)]
    lines += ["{} {}".format(k, f.field.format(c)) for k, c in f.items()]
    return "\n".join(lines) + "\n"


def _parse_block(lines: Sequence[str]) -> Block:
    header = _parse_header(lines[0])
    metadata = {
        k: v
        for k, v in header.items()
        if k not in (_CONSTANTS.BOUND_KEY, _CONSTANTS.FIELD_KEY)
    }
    try:
        bound = int(header[_CONSTANTS.BOUND_KEY])
        field = get_field(header[_CONSTANTS.FIELD_KEY])
    except (ValueError, DomainError) as err:
        raise SerializationError("invalid header {!r}: {}".format(lines[0], err))
    if bound < 1:
        raise SerializationError("bound must be positive, got {}".format(bound))
    values = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise SerializationError("expected '<index> <coefficient>', got {!r}".format(line))
        try:
            k = int(parts[0])
        except ValueError:
            raise SerializationError("invalid index in {!r}".format(line))
        if not 1 <= k <= bound:
            raise SerializationError("index {} outside 1..{}".format(k, bound))
        if k in values:
            raise SerializationError("index {} given twice".format(k))
        values[k] = field.parse(parts[1])
    return ArithFunc.from_dict(values, bound, field), metadata


def _split_blocks(text: str) -> List[List[str]]:
    blocks, current = [], []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if current:
                blocks.append(current)
                current = []
            continue
        current.append(line)
    if current:
        blocks.append(current)
    return blocks


def loads(text: str) -> ArithFunc:
    """Parse a single function written by :func:`dumps`."""
    blocks = _split_blocks(text)
    if len(blocks) != 1:
        raise SerializationError("expected exactly one block, found {}".format(len(blocks)))
    return _parse_block(blocks[0])[0]


def dumps_blocks(
    funcs: Sequence[ArithFunc], metadata: Optional[Sequence[Mapping[str, object]]] = None
) -> str:
    """Serialize several functions, one block each, separated by blank lines."""
    if metadata is None:
        metadata = [None] * len(funcs)
    if len(metadata) != len(funcs):
        raise ValueError("need one metadata mapping per function")
    return "\n".join(dumps(f, meta) for f, meta in zip(funcs, metadata))


def loads_blocks(
    text: str, return_metadata: bool = False
) -> Union[List[ArithFunc], List[Block]]:
    """
    Parse the output of :func:`dumps_blocks`.

    Parameters
    ----------
    text
        Blank-line separated blocks.
    return_metadata
        If True, return ``(function, extra_header_entries)`` pairs.
    """
    blocks = [_parse_block(lines) for lines in _split_blocks(text)]
    if return_metadata:
        return blocks
    return [f for f, _ in blocks]


def split_verified(text: str) -> List[Tuple[str, bool]]:
    """
    Cut certificate text at its ``verified:`` lines.

    Returns the block text preceding each flag together with the flag.
    """
    chunks, current = [], []
    prefix = _CONSTANTS.VERIFIED_KEY + ":"
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith(prefix):
            flag = stripped[len(prefix) :].strip()
            if flag not in ("true", "false"):
                raise SerializationError("invalid verified flag {!r}".format(stripped))
            chunks.append(("\n".join(current), flag == "true"))
            current = []
        else:
            current.append(line)
    if any(line.strip() for line in current):
        raise SerializationError("trailing blocks without a 'verified:' line")
    return chunks


def dumps_certificate(certificate: FactorizationCertificate) -> str:
    """Target block, factor blocks, then ``verified: true|false``."""
    text = dumps_blocks(
        [certificate.target] + list(certificate.factors),
        [{_CONSTANTS.ROLE_KEY: "target"}]
        + [{_CONSTANTS.ROLE_KEY: "factor"}] * len(certificate.factors),
    )
    return text + "\n{}: {}\n".format(
        _CONSTANTS.VERIFIED_KEY, "true" if certificate.verified else "false"
    )


def dumps_certificates(certificates: Sequence[FactorizationCertificate]) -> str:
    return "\n".join(dumps_certificate(c) for c in certificates)


def _certificate_from_blocks(blocks: List[Block], verified: bool) -> FactorizationCertificate:
    targets = [f for f, meta in blocks if meta.get(_CONSTANTS.ROLE_KEY) == "target"]
    factors = [f for f, meta in blocks if meta.get(_CONSTANTS.ROLE_KEY) == "factor"]
    if len(targets) != 1 or len(factors) + 1 != len(blocks):
        raise SerializationError("a certificate needs one role=target block and role=factor blocks")
    return FactorizationCertificate(targets[0], tuple(factors), verified)


def loads_certificates(text: str) -> List[FactorizationCertificate]:
    """Parse the output of :func:`dumps_certificates`."""
    return [
        _certificate_from_blocks(loads_blocks(chunk, return_metadata=True), verified)
        for chunk, verified in split_verified(text)
    ]


def loads_certificate(text: str) -> FactorizationCertificate:
    """
    Parse a single certificate.

    The ``verified`` flag is taken from the text as written; call
    :func:`~arithring.factorization.verify_factorization` to recheck it.
    """
    certificates = loads_certificates(text)
    if len(certificates) != 1:
        raise SerializationError("expected one certificate, found {}".format(len(certificates)))
    return certificates[0]


def dumps_basis(family: BasisFamily) -> str:
    """One block per entry, tagged ``order=<k>``."""
    return dumps_blocks(
        [family[k] for k in family.orders],
        [{_CONSTANTS.ORDER_KEY: k} for k in family.orders],
    )


def loads_basis(text: str, bound: Optional[int] = None, field=None) -> BasisFamily:
    """
    Parse the output of :func:`dumps_basis`.

    `bound` and `field` describe the family when the text holds no block.
    """
    blocks = loads_blocks(text, return_metadata=True)
    if not blocks:
        if bound is None:
            raise SerializationError("an empty basis file needs an explicit bound")
        return BasisFamily({}, bound, get_field(field))
    entries = {}
    for f, meta in blocks:
        try:
            k = int(meta[_CONSTANTS.ORDER_KEY])
        except (KeyError, ValueError):
            raise SerializationError("basis blocks need an integer 'order=' header entry")
        entries[k] = f
    try:
        return BasisFamily(entries, blocks[0][0].bound, blocks[0][0].field)
    except DomainError as err:
        raise SerializationError("invalid basis: {}".format(err))


def dumps_gamma_table(table: GammaTable) -> str:
    """One block per entry, tagged ``gamma=<i>,<j>``."""
    keys = sorted(k for k, _ in table.items())
    return dumps_blocks(
        [table[k] for k in keys],
        [{_CONSTANTS.GAMMA_KEY: "{},{}".format(i, j)} for i, j in keys],
    )


def loads_gamma_table(text: str, bound: Optional[int] = None, field=None) -> GammaTable:
    """
    Parse the output of :func:`dumps_gamma_table`.

    The table is validated as it is built, so a kernel-condition violation
    raises :class:`~arithring.KernelConditionError`.
    """
    images = {}
    for f, meta in loads_blocks(text, return_metadata=True):
        try:
            i, j = (int(x) for x in meta[_CONSTANTS.GAMMA_KEY].split(","))
        except (KeyError, ValueError):
            raise SerializationError("gamma table blocks need a 'gamma=<i>,<j>' header entry")
        images[(i, j)] = f
    if not images and bound is None:
        raise SerializationError("an empty gamma table file needs an explicit bound")
    return GammaTable(images, bound=bound, field=field)


def dumps_decomposition(decomposition: CanonicalDecomposition) -> str:
    """Constant term as a ``class=0`` block, then one ``class=<i>`` block per part."""
    constant = scale(
        decomposition.constant_term, e(1, decomposition.bound, decomposition.field)
    )
    classes = sorted(decomposition.parts)
    return dumps_blocks(
        [constant] + [decomposition.parts[i] for i in classes],
        [{_CONSTANTS.CLASS_KEY: 0}] + [{_CONSTANTS.CLASS_KEY: i} for i in classes],
    )
