"""Selects the matching-count kernel at import time.

The compiled extension is used when it was built and ``CORNERGAP_PURE`` is
unset; otherwise the pure-Python sweep runs.  Both return the exact count.
"""

from __future__ import annotations

import math
import os

from ._matching import count_by_sweep

try:
    from ._matching_ext import count_mod as _count_mod
except ImportError:  # extension not built
    _count_mod = None

# The sixteen largest primes below 2**62, so sums of two residues fit in 64 bits.
PRIMES = (
    4611686018427387847, 4611686018427387817, 4611686018427387787, 4611686018427387761,
    4611686018427387751, 4611686018427387737, 4611686018427387733, 4611686018427387709,
    4611686018427387701, 4611686018427387631, 4611686018427387617, 4611686018427387587,
    4611686018427387461, 4611686018427387421, 4611686018427387409, 4611686018427387329,
)
MAX_OFFSET = 63


def compiled_available() -> bool:
    return _count_mod is not None


def active_kernel() -> str:
    if _count_mod is not None and not os.environ.get("CORNERGAP_PURE"):
        return "compiled"
    return "python"


def crt(residues, moduli) -> int:
    total, modulus = 0, 1
    for r, m in zip(residues, moduli):
        # lift total to satisfy the new congruence
        t = ((r - total) * pow(modulus, -1, m)) % m
        total += modulus * t
        modulus *= m
    return total


def count_compiled(forward, bound: int) -> int:
    """Exact count via residues modulo enough primes to exceed ``bound``."""
    if _count_mod is None:
        raise RuntimeError("compiled kernel not available")
    moduli = []
    prod = 1
    for p in PRIMES:
        moduli.append(p)
        prod *= p
        if prod > bound:
            break
    else:
        raise OverflowError("count bound exceeds the prime budget")
    residues = _count_mod(forward, moduli)
    return crt(residues, moduli)


def count_forward(forward: list[tuple[int, ...]], bound: int | None = None, kernel: str | None = None) -> int:
    """Count perfect matchings of a graph given as forward offsets.

    ``bound`` is any upper bound on the answer; it sizes the prime set for
    the compiled kernel.  ``kernel`` forces ``"python"`` or ``"compiled"``.
    """
    kernel = kernel or active_kernel()
    widest = max((max(o) for o in forward if o), default=0)
    if kernel == "compiled" and widest <= MAX_OFFSET and bound is not None:
        try:
            return count_compiled(forward, bound)
        except OverflowError:
            pass
    elif kernel == "compiled" and _count_mod is None:
        raise RuntimeError("compiled kernel not available")
    return count_by_sweep(forward)


def degree_bound(degrees) -> int:
    return math.prod(max(d, 1) for d in degrees)
