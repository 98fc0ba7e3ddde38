"""Card-dealing permutations, their signs, and the symbols they compute.

Dealing ``m*n`` cards into a grid by rows, by columns or along a wrapping
diagonal gives permutations whose signs are Zolotarev symbols; this package
builds those deals, evaluates the symbols several independent ways, and
sweeps parameter ranges to check that everything agrees.
"""

__version__ = "0.1.0"

from .perms import (  # noqa: E402
    Permutation,
    compose,
    count_inversions_fast,
    count_inversions_naive,
    cycle_decomposition,
    identity,
    inverse,
    sign_via_cycles,
    sign_via_inversions,
)
from .symbols import (  # noqa: E402
    jacobi_factored,
    jacobi_reciprocity,
    legendre_bruteforce,
    legendre_euler,
    zolotarev_symbol,
)

__all__ = [
    "Permutation",
    "compose",
    "count_inversions_fast",
    "count_inversions_naive",
    "cycle_decomposition",
    "identity",
    "inverse",
    "jacobi_factored",
    "jacobi_reciprocity",
    "legendre_bruteforce",
    "legendre_euler",
    "sign_via_cycles",
    "sign_via_inversions",
    "zolotarev_symbol",
]
