"""Test-side oracles, written without touching the package under test."""

import math

from hypothesis import strategies as st

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trial_primes(lo: int, hi: int) -> list[int]:
    """Primes p with lo < p < hi."""
    return [n for n in range(lo + 1, hi) if trial_is_prime(n)]


def coprime_residues(k: int) -> list[int]:
    return [h for h in range(1, k + 1) if math.gcd(h, k) == 1]


def brute_pairs(k: int, d: int) -> int:
    """Unordered coprime residue pairs at head or wrapped distance d."""
    alive = set(coprime_residues(k))
    found = set()
    for h in alive:
        for other in (h + d, h + k - d):
            if other != h and other in alive:
                found.add((h, other))
    return len(found)


@st.composite
def prime_lists(draw, limit: int = 200_000, pool=SMALL_PRIMES):
    """Distinct primes in random split order with product <= limit."""
    order = draw(st.permutations(pool))
    n = draw(st.integers(0, len(pool)))
    out, k = [], 1
    for p in order[:n]:
        if k * p > limit:
            break
        out.append(p)
        k *= p
    return out
