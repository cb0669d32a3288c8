import os
from pathlib import Path
from typing import List, Mapping, Optional, Sequence, Union

from arithring.algebra import ArithFunc

from ._io import dumps, dumps_blocks, loads, loads_blocks

PathLike = Union[str, Path]


def read_arithfunc(path: PathLike) -> ArithFunc:
    """
    Read a single function from a UTF-8 file in the arithring line format.

    Parameters
    ----------
    path
        Path to the file.
    """
    with open(os.fspath(path), encoding="utf-8") as handle:
        return loads(handle.read())


def write_arithfunc(f: ArithFunc, path: PathLike, metadata: Optional[Mapping[str, object]] = None):
    """Write `f` to `path`, overwriting it."""
    with open(os.fspath(path), "w", encoding="utf-8") as handle:
        handle.write(dumps(f, metadata))


def read_blocks(path: PathLike, return_metadata: bool = False) -> List:
    """Read every block of a multi-block file."""
    with open(os.fspath(path), encoding="utf-8") as handle:
        return loads_blocks(handle.read(), return_metadata=return_metadata)


def write_blocks(
    funcs: Sequence[ArithFunc],
    path: PathLike,
    metadata: Optional[Sequence[Mapping[str, object]]] = None,
):
    """Write `funcs` to `path`, one block each."""
    with open(os.fspath(path), "w", encoding="utf-8") as handle:
        handle.write(dumps_blocks(funcs, metadata))
