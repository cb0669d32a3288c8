from ._datasets import (
    prime_indicator,
    prime_power_indicator,
    synthetic_arithfunc,
    synthetic_class_function,
)
from ._io import (
    dumps,
    dumps_basis,
    dumps_blocks,
    dumps_certificate,
    dumps_certificates,
    dumps_decomposition,
    dumps_gamma_table,
    loads,
    loads_basis,
    loads_blocks,
    loads_certificate,
    loads_certificates,
    loads_gamma_table,
)
from ._read import read_arithfunc, read_blocks, write_arithfunc, write_blocks

__all__ = [
    "synthetic_arithfunc",
    "synthetic_class_function",
    "prime_power_indicator",
    "prime_indicator",
    "dumps",
    "loads",
    "dumps_blocks",
    "loads_blocks",
    "dumps_certificate",
    "dumps_certificates",
    "loads_certificate",
    "loads_certificates",
    "dumps_basis",
    "loads_basis",
    "dumps_gamma_table",
    "loads_gamma_table",
    "dumps_decomposition",
    "read_arithfunc",
    "write_arithfunc",
    "read_blocks",
    "write_blocks",
]
