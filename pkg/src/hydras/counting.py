"""Closed-form snake counts.

All values are Python ints, so they stay exact for hydras far too large to
materialize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import DuplicatePrime, MissingBase, NonpositiveFactor

TWIN_BASE = frozenset({2, 3})


@dataclass(frozen=True)
class CountReport:
    primes: tuple[int, ...]
    k: int
    k1: int
    k2_twin: int | None = None
    pair_bound: int | None = None

    def as_dict(self) -> dict:
        return {
            "k": str(self.k),
            "k1": str(self.k1),
            "k2_twin": None if self.k2_twin is None else str(self.k2_twin),
            "pair_bound": None if self.pair_bound is None else str(self.pair_bound),
        }


def primorial(P: Iterable[int]) -> int:
    return math.prod(P)


def alive_count(P: Iterable[int]) -> int:
    return math.prod(p - 1 for p in P)


def twin_count(P: Iterable[int]) -> int:
    """Exact number of alive snake pairs at distance 2 in H(P)."""
    P = set(P)
    if not TWIN_BASE <= P:
        raise MissingBase(f"twin count needs {{2, 3}} in P, got {sorted(P)}")
    return math.prod(p - 2 for p in P - TWIN_BASE)


def pair_lower_bound(P: Sequence[int], Q: Sequence[int], q_j: int, j: int = 2) -> int:
    """Lower bound q_j * prod_{p in P \\ Q} (p - j) on j-tuples of alive snakes in H(P)."""
    if j < 2:
        raise ValueError("tuple size j must be >= 2")
    missing = set(Q) - set(P)
    if missing:
        raise ValueError(f"Q is not a subset of P: {sorted(missing)} missing")
    rest = [p for p in P if p not in set(Q)]
    small = [p for p in rest if p <= j]
    if small:
        raise NonpositiveFactor(f"primes {small} outside Q give factors p-{j} <= 0")
    return q_j * math.prod(p - j for p in rest)


def counts(P: Sequence[int]) -> CountReport:
    P = tuple(int(p) for p in P)
    if len(set(P)) != len(P):
        raise DuplicatePrime(f"repeated prime in {P}")
    k2 = twin_count(P) if TWIN_BASE <= set(P) else None
    return CountReport(P, primorial(P), alive_count(P), k2)


def predict_split(report: CountReport, p: int) -> CountReport:
    """Counts after splitting by a new prime p, from the recursive forms."""
    if p in report.primes:
        raise DuplicatePrime(f"{p} already in {report.primes}")
    primes = report.primes + (p,)
    if report.k2_twin is not None:
        k2 = report.k2_twin * (p - 2)
    elif TWIN_BASE <= set(primes):
        # base case: H(2,3) holds exactly one twin pair
        k2 = twin_count(primes)
    else:
        k2 = None
    bound = None if report.pair_bound is None else report.pair_bound * (p - 2)
    return replace(report, primes=primes, k=report.k * p, k1=report.k1 * (p - 1), k2_twin=k2, pair_bound=bound)
