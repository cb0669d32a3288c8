import logging
from typing import Literal, Union

import numpy as np
from rich.console import Console
from rich.logging import RichHandler

arithring_logger = logging.getLogger("arithring")


class ArithringConfig:
    """
    Config manager for arithring.

    Examples
    --------
    To set the seed used by the synthetic generators

    >>> arithring.settings.seed = 1

    To change the bound of the smallest-prime-factor sieve

    >>> arithring.settings.sieve_bound = 10 ** 5

    To build new functions over the Gaussian rationals by default

    >>> arithring.settings.field = "gaussian"

    To set the progress bar style, choose one of "rich", "tqdm"

    >>> arithring.settings.progress_bar_style = "rich"

    To set the verbosity

    >>> import logging
    >>> arithring.settings.verbosity = logging.INFO
    """

    def __init__(
        self,
        verbosity: int = logging.INFO,
        progress_bar_style: Literal["rich", "tqdm"] = "tqdm",
        seed: int = 0,
        sieve_bound: int = 10 ** 6,
        field: Literal["rational", "gaussian"] = "rational",
    ):

        self.verbosity = verbosity
        self.seed = seed
        self.sieve_bound = sieve_bound
        self.field = field
        if progress_bar_style not in ["rich", "tqdm"]:
            raise ValueError("Progress bar style must be in ['rich', 'tqdm']")
        self.progress_bar_style = progress_bar_style

    @property
    def field(self) -> str:
        """Coefficient field used by constructors when none is given (default `'rational'`)."""
        return self._field

    @field.setter
    def field(self, field: Literal["rational", "gaussian"]):
        if field not in ["rational", "gaussian"]:
            raise ValueError("field must be one of ['rational', 'gaussian']")
        self._field = field

    @property
    def progress_bar_style(self) -> str:
        """Library to use for progress bar."""
        return self._pbar_style

    @progress_bar_style.setter
    def progress_bar_style(self, pbar_style: Literal["tqdm", "rich"]):
        """Library to use for progress bar."""
        self._pbar_style = pbar_style

    @property
    def seed(self) -> int:
        """Random seed for numpy."""
        return self._seed

    @seed.setter
    def seed(self, seed: int):
        """Random seed for numpy."""
        np.random.seed(seed)
        self._seed = seed

    @property
    def sieve_bound(self) -> int:
        """
        Largest integer the smallest-prime-factor sieve covers (default `10**6`).

        The sieve is rebuilt lazily the next time a factorization is requested.
        """
        return self._sieve_bound

    @sieve_bound.setter
    def sieve_bound(self, bound: int):
        if bound < 2:
            raise ValueError("sieve_bound must be at least 2")
        self._sieve_bound = int(bound)

    @property
    def verbosity(self) -> int:
        """Verbosity level (default `logging.INFO`)."""
        return self._verbosity

    @verbosity.setter
    def verbosity(self, level: Union[str, int]):
        """
        Sets logging configuration for arithring based on chosen level of verbosity.

        If "arithring" logger has no StreamHandler, add one.
        Else, set its level to `level`.

        Parameters
        ----------
        level
            Sets "arithring" logging level to `level`
        """
        self._verbosity = level
        arithring_logger.setLevel(level)
        if len(arithring_logger.handlers) == 0:
            console = Console(force_terminal=True, stderr=True)
            if console.is_jupyter is True:
                console.is_jupyter = False
            ch = RichHandler(show_path=False, console=console, show_time=False)
            formatter = logging.Formatter("%(message)s")
            ch.setFormatter(formatter)
            arithring_logger.addHandler(ch)
        else:
            arithring_logger.setLevel(level)

    def reset_logging_handler(self):
        """
        Resets "arithring" log handler to a basic RichHandler().

        This is useful if piping outputs to a file.
        """
        arithring_logger.removeHandler(arithring_logger.handlers[0])
        ch = RichHandler(show_path=False, show_time=False)
        formatter = logging.Formatter("%(message)s")
        ch.setFormatter(formatter)
        arithring_logger.addHandler(ch)


settings = ArithringConfig()
