import logging
import sys
from typing import Iterable, Literal, Optional

from rich.console import Console
from rich.progress import track as rich_track
from tqdm import tqdm

from arithring._settings import settings

_STYLES = ("rich", "tqdm")


def _quiet() -> bool:
    return settings.verbosity > logging.INFO


def track(
    sequence: Iterable,
    description: str = "Working...",
    disable: bool = False,
    style: Optional[Literal["rich", "tqdm"]] = None,
    total: Optional[int] = None,
    unit: str = "it",
):
    """
    Wrap a loop over search candidates in a progress bar.

    Bars go to stderr, so command-line output on stdout stays parseable. No
    bar is drawn when `disable` is set or when ``arithring.settings.verbosity``
    is above ``logging.INFO``; the sequence is then returned unchanged.

    Parameters
    ----------
    sequence
        Iterable sequence.
    description
        Text shown to the left of the bar.
    disable
        Switch to turn off the bar.
    style
        ``"rich"`` or ``"tqdm"``, default ``arithring.settings.progress_bar_style``.
    total
        Length of `sequence` when it has no ``len``.
    unit
        Name of one step, used by the tqdm style only.

    Examples
    --------
    >>> from arithring.utils import track
    >>> for k in track([2, 3, 5], description="Searching", unit="candidate"):
    ...     pass
    """
    style = settings.progress_bar_style if style is None else style
    if style not in _STYLES:
        raise ValueError("style must be one of {}, got {!r}".format(list(_STYLES), style))
    if disable or _quiet():
        return sequence
    if total is None and hasattr(sequence, "__len__"):
        total = len(sequence)
    if style == "tqdm":
        return tqdm(sequence, desc=description, total=total, unit=unit, file=sys.stderr)
    return rich_track(
        sequence,
        description=description,
        total=total,
        console=Console(stderr=True),
        transient=True,
    )
