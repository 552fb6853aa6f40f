"""Classical prime generation.

These functions are the brute-force ground truth for everything the hydra
machinery derives. Nothing here imports from the hydra modules.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import OracleLimitExceeded

#: Largest bound any sieve-backed function will accept.
DEFAULT_LIMIT = 10**8

_limit = DEFAULT_LIMIT


def set_limit(limit: int) -> None:
    global _limit
    if limit < 2:
        raise ValueError("oracle limit must be at least 2")
    _limit = int(limit)


def get_limit() -> int:
    return _limit


def _check(n: int) -> None:
    if n > _limit:
        raise OracleLimitExceeded(f"oracle bound {n} exceeds limit {_limit}")


def sieve(n: int) -> np.ndarray:
    """Boolean array ``a`` of length n+1 with ``a[x]`` true iff x is prime."""
    _check(n)
    flags = np.ones(max(n + 1, 2), dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags[: n + 1]


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    return np.flatnonzero(sieve(n)).tolist()


def primes_first(n: int) -> list[int]:
    """The first n primes."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return []
    # Rosser's bound p_n < n(ln n + ln ln n) for n >= 6
    bound = 15 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 1
    return primes_upto(bound)[:n]


def is_prime(x: int) -> bool:
    """Trial division; exact for any x >= 1."""
    if x < 2:
        return False
    if x < 4:
        return True
    if x % 2 == 0:
        return False
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


def next_prime_after(x: int) -> int:
    """Smallest prime strictly greater than x."""
    n = max(x + 1, 2)
    while not is_prime(n):
        n += 1
    return n


def prime_count(n: int) -> int:
    """pi(n): the number of primes <= n."""
    if n < 2:
        return 0
    return int(np.count_nonzero(sieve(n)))


def gap_pairs_upto(n: int, d: int, consecutive: bool = False) -> list[tuple[int, int]]:
    """All prime pairs (p, p+d) with p+d <= n.

    With ``consecutive`` only pairs with no prime strictly between them are kept.
    """
    if d < 2 or d % 2:
        raise ValueError(f"distance must be even and >= 2, got {d}")
    if n < 3:
        return []
    flags = sieve(n)
    ps = np.flatnonzero(flags)
    if consecutive:
        gaps = np.diff(ps)
        lo = ps[:-1][gaps == d]
    else:
        lo = ps[ps + d <= n]
        lo = lo[flags[lo + d]]
    return [(int(p), int(p) + d) for p in lo]
