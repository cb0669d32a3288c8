from ._main import main, run
from ._parser import build_parser

__all__ = ["run", "main", "build_parser"]
