from ._associate import is_associate
from ._certificate import (
    FactorizationCertificate,
    factorization_length_bound,
    verify_factorization,
)
from ._search import atom_search

__all__ = [
    "FactorizationCertificate",
    "verify_factorization",
    "factorization_length_bound",
    "is_associate",
    "atom_search",
]
