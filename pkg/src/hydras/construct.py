"""Hydras guaranteed to hold a pair at a given even distance or consecutive gap.

Each construction first splits by an *artificial* prime selection that forces
the wanted pair, then lets hydra recursion add the missing small primes until
the prime set is natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import BudgetExceeded, InternalLemmaViolation, InvalidDistance
from .hydra import DEFAULT_BUDGET, Budget, Hydra, is_natural, next_prime, recurse, root, split
from .metrics import wheeldiff
from .primes import is_prime, next_prime_after

Mode = Literal["distance", "gap_brute", "gap_efficient"]


@dataclass(frozen=True)
class ConstructionPlan:
    artificial: tuple[int, ...]
    natural_fill: tuple[int, ...]
    target: int
    mode: Mode

    @property
    def split_order(self) -> tuple[int, ...]:
        return self.artificial + self.natural_fill

    @property
    def wavelength(self) -> int:
        return math.prod(self.split_order)


@dataclass(frozen=True)
class WitnessPair:
    low_head: int
    high_head: int
    kind: str  # "head" or "wrapped"
    consecutive: bool


def _check_target(d: int) -> None:
    if d < 2 or d % 2:
        raise InvalidDistance(f"target must be even and >= 2, got {d}")


def _primes_between(lo: int, hi: int) -> tuple[int, ...]:
    """Primes p with lo < p < hi."""
    return tuple(p for p in range(lo + 1, hi) if is_prime(p))


def maillet_plan(d: int) -> ConstructionPlan:
    """Plan H(2, p_d) then the primes between 2 and p_d, p_d the first odd prime >= d/2+1."""
    _check_target(d)
    p_d = next_prime_after(max(3, d // 2 + 1) - 1)
    return ConstructionPlan((2, p_d), _primes_between(2, p_d), d, "distance")


def polignac_plan(delta: int, mode: str = "efficient") -> ConstructionPlan:
    _check_target(delta)
    if mode not in ("brute", "efficient"):
        raise ValueError(f"mode must be 'brute' or 'efficient', got {mode!r}")
    if delta == 2:
        # no auxiliary primes are needed, but a gap needs two alive snakes
        return ConstructionPlan((2, 3), (), delta, f"gap_{mode}")
    if mode == "brute":
        chosen = _first_primes_from(delta, delta - 1)
        return ConstructionPlan(chosen, _primes_between(1, chosen[0]), delta, "gap_brute")
    chosen = _first_primes_from(delta - 1, delta // 2 - 1)
    return ConstructionPlan(chosen + (2,), _primes_between(2, chosen[0]), delta, "gap_efficient")


def _first_primes_from(start: int, count: int) -> tuple[int, ...]:
    out = []
    p = start - 1
    while len(out) < count:
        p = next_prime_after(p)
        out.append(p)
    return tuple(out)


def build(plan: ConstructionPlan, budget: Budget = DEFAULT_BUDGET) -> Hydra:
    """Split by the artificial primes, then recurse until the hydra is natural."""
    if plan.wavelength > budget.max_snakes:
        raise BudgetExceeded(f"plan needs {plan.wavelength} snakes, budget is {budget.max_snakes}")
    H = root()
    for p in plan.artificial:
        H = split(H, p, budget)
    filled = []
    while not is_natural(H):
        filled.append(next_prime(H))
        H = recurse(H, budget)
    if tuple(filled) != plan.natural_fill:
        raise InternalLemmaViolation(f"recursion added {filled}, plan expected {list(plan.natural_fill)}")
    return H


def _consecutive(ah: np.ndarray, lo: int, hi: int, kind: str) -> bool:
    if kind == "head":
        return not np.any((ah > lo) & (ah < hi))
    return not np.any((ah > hi) | (ah < lo))


def distance_witness(H: Hydra, d: int) -> WitnessPair | None:
    """First alive pair at distance d, scanning low heads ascending."""
    ah = H.alive_heads()
    members = set(ah.tolist())
    k = H.wavelength
    for h in ah.tolist():
        for hi, kind in ((h + d, "head"), (h + k - d, "wrapped")):
            if hi != h and hi in members:
                return WitnessPair(h, hi, kind, _consecutive(ah, h, hi, kind))
    return None


def gap_witness(H: Hydra, delta: int) -> WitnessPair | None:
    gv = wheeldiff(H)
    hits = np.flatnonzero(gv.values == delta)
    if len(hits) == 0 or len(gv) < 2:
        return None
    i = int(hits[0])
    if i == len(gv) - 1:
        return WitnessPair(int(gv.heads[0]), int(gv.heads[-1]), "wrapped", True)
    return WitnessPair(int(gv.heads[i]), int(gv.heads[i + 1]), "head", True)


def maillet_hydra(d: int, budget: Budget = DEFAULT_BUDGET) -> tuple[Hydra, WitnessPair]:
    H = build(maillet_plan(d), budget)
    w = distance_witness(H, d)
    if w is None:
        raise InternalLemmaViolation(f"H{H.primes} has no pair at distance {d}")
    return H, w


def polignac_hydra(delta: int, mode: str = "efficient", budget: Budget = DEFAULT_BUDGET) -> tuple[Hydra, WitnessPair]:
    H = build(polignac_plan(delta, mode), budget)
    w = gap_witness(H, delta)
    if w is None:
        raise InternalLemmaViolation(f"H{H.primes} has no consecutive gap {delta}")
    return H, w


def scan_witness(plan: ConstructionPlan, limit: int | None = None) -> WitnessPair:
    """Locate a witness in H(plan primes) by gcd tests alone, without a snake table.

    Works for plans far beyond the materialization budget; scans candidates
    upward from 1 and stops at the first match.
    """
    k = plan.wavelength
    limit = k if limit is None else min(limit, k)
    target = plan.target
    if plan.mode == "distance":
        for n in range(1, limit - target + 1):
            if math.gcd(n, k) == 1 and math.gcd(n + target, k) == 1:
                between = any(math.gcd(m, k) == 1 for m in range(n + 1, n + target))
                return WitnessPair(n, n + target, "head", not between)
    else:
        prev = None
        for n in range(1, limit + 1):
            if math.gcd(n, k) != 1:
                continue
            if prev is not None and n - prev == target:
                return WitnessPair(prev, n, "head", True)
            prev = n
    raise InternalLemmaViolation(f"no witness for {plan} below {limit}")
