"""Multiplicative arithmetic functions and their periodic counterparts."""
from .arith import factor_table, factorize, is_prime, primes_up_to, totient
from .functions import (
    BUILTIN_NAMES,
    MultiplicativeFunction,
    mf_builtin,
    mf_conjugate,
    mf_eval,
    mf_is_multiplicative_scan,
    mf_pointwise_product,
    prime_power_table,
)
from .periodic import (
    BOX,
    PeriodicMultiplicative,
    SarkozyForm,
    box_multiplicativity_check,
    list_dirichlet_characters,
    lw_build,
    periodic_eval,
    periodic_make,
)

__all__ = [
    "factorize", "factor_table", "is_prime", "primes_up_to", "totient",
    "BUILTIN_NAMES", "MultiplicativeFunction", "mf_builtin", "mf_conjugate", "mf_eval",
    "mf_is_multiplicative_scan", "mf_pointwise_product", "prime_power_table",
    "BOX", "PeriodicMultiplicative", "SarkozyForm", "box_multiplicativity_check",
    "list_dirichlet_characters", "lw_build", "periodic_eval", "periodic_make",
]
