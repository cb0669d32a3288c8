from ._factorization import Factorization, factor, phi_decode, phi_encode
from ._sieve import Sieve, get_sieve
from ._unitary import (
    class_index,
    decode_subset,
    encode_subset,
    is_prime,
    is_prime_power,
    is_squarefree,
    leading_prime,
    omega,
    prime,
    prime_index,
    prime_powers,
    prime_support,
    primorial,
    subset_product,
    unitary_divisor_table,
    unitary_divisors,
    unitary_product,
)

__all__ = [
    "Factorization",
    "Sieve",
    "get_sieve",
    "factor",
    "phi_encode",
    "phi_decode",
    "unitary_product",
    "unitary_divisors",
    "unitary_divisor_table",
    "omega",
    "leading_prime",
    "class_index",
    "prime",
    "prime_index",
    "prime_support",
    "is_prime",
    "is_squarefree",
    "is_prime_power",
    "primorial",
    "prime_powers",
    "encode_subset",
    "decode_subset",
    "subset_product",
]
