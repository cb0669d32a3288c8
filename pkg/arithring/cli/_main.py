import logging
import sys
from typing import List, Optional

from rich.console import Console

from arithring._exceptions import DomainError, SerializationError

from ._parser import build_parser

logger = logging.getLogger(__name__)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one arithring command.

    Parameters
    ----------
    argv
        Arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns
    -------
    Exit status: 0 on success, 1 on a domain error (including a bound or field
    mismatch between an input file and the flags), 2 on a usage error or
    unreadable input.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    console = Console(stderr=True)
    try:
        output = args.handler(args)
    except DomainError as err:
        console.print("error: {}".format(err), style="bold red", markup=False, highlight=False)
        return 1
    except (SerializationError, OSError) as err:
        console.print("error: {}".format(err), style="bold red", markup=False, highlight=False)
        return 2
    if args.output is None:
        sys.stdout.write(output)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(output)
        logger.debug("Wrote {} output to {}".format(args.verb, args.output))
    return 0


def main() -> int:
    """Console-script entry point."""
    return run(sys.argv[1:])
