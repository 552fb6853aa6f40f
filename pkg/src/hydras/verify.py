"""Cross-checks of hydra-derived quantities against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import primes as oracle
from .construct import maillet_hydra, maillet_plan, polignac_hydra, polignac_plan
from .counting import alive_count, counts, predict_split, primorial, twin_count
from .errors import BudgetExceeded
from .hydra import DEFAULT_BUDGET, Budget, Hydra, natural, next_prime, snake_of
from .metrics import count_consecutive_pairs, count_pairs, wheeldiff, wheeldist


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def window_candidates(H: Hydra) -> list[int]:
    """Alive numbers n with 1 < n < next_prime(H)**2 (heads and tails)."""
    bound = next_prime(H) ** 2
    ah = H.alive_heads()
    k = H.wavelength
    out = []
    for base in range(0, bound, k):
        vals = ah + base
        out.extend(vals[(vals > 1) & (vals < bound)].tolist())
    return sorted(out)


def window_twins(H: Hydra) -> list[tuple[int, int]]:
    cand = window_candidates(H)
    s = set(cand)
    return [(n, n + 2) for n in cand if n + 2 in s]


def oracle_window(H: Hydra) -> tuple[list[int], list[tuple[int, int]]]:
    """Oracle primes and twin pairs strictly between max(P) and next_prime(H)**2."""
    lo = max(H.primes, default=1)
    bound = oracle.next_prime_after(lo) ** 2
    ps = [p for p in oracle.primes_upto(bound - 1) if p > lo]
    tw = [(p, q) for p, q in oracle.gap_pairs_upto(bound - 1, 2) if p > lo]
    return ps, tw


def _natural_checks(H: Hydra) -> Iterator[Check]:
    P = H.primes
    tag = "H(" + ",".join(map(str, P)) + ")"
    alive = int(H.alive.sum())
    yield Check(f"{tag} k = primorial", len(H) == primorial(P) == H.wavelength)
    yield Check(f"{tag} k1 = prod(p-1)", alive == alive_count(P), f"{alive} vs {alive_count(P)}")
    if {2, 3} <= set(P):
        got = count_pairs(H, 2).count
        yield Check(f"{tag} k2 = prod(p-2)", got == twin_count(P), f"{got} vs {twin_count(P)}")
    nxt, ref = next_prime(H), oracle.next_prime_after(max(P, default=1))
    yield Check(f"{tag} next prime", nxt == ref, f"{nxt} vs {ref}")
    ps, tw = oracle_window(H)
    yield Check(f"{tag} primality window", window_candidates(H) == ps)
    yield Check(f"{tag} twin window", window_twins(H) == tw)
    yield Check(f"{tag} sum(wheeldiff) = k", int(wheeldiff(H).values.sum()) == H.wavelength)
    if alive <= 2000:
        m = wheeldist(H).matrix
        off = ~np.eye(len(m), dtype=bool)
        yield Check(f"{tag} d_h + d_w = k", bool(np.all((m + m.T)[off] == H.wavelength)))
    if H.wavelength <= 30030:
        ok = all(snake_of(H, n).head == (n - 1) % H.wavelength + 1 for n in range(1, 3 * H.wavelength + 1))
        yield Check(f"{tag} MECE on [1, 3k]", ok)


def run_checks(max_prime: int = 13, budget: Budget = DEFAULT_BUDGET) -> Iterator[Check]:
    limit = 10**4
    trial = [x for x in range(limit + 1) if oracle.is_prime(x)]
    yield Check("oracle sieve = trial division up to 10^4", oracle.primes_upto(limit) == trial)

    P = oracle.primes_upto(max_prime)
    report = counts([])
    for n in range(len(P) + 1):
        prefix = P[:n]
        if n:
            report = predict_split(report, prefix[-1])
        yield Check(f"predict_split chain to {prefix}", report == counts(prefix))
        if primorial(prefix) > budget.max_snakes:
            continue
        yield from _natural_checks(natural(prefix, budget))

    for d in range(2, 2 * max_prime - 1, 2):
        if max(maillet_plan(d).split_order) > max_prime:
            continue
        try:
            H, w = maillet_hydra(d, budget)
        except BudgetExceeded:
            continue
        ok = count_pairs(H, d).count >= 1 and w.high_head - w.low_head in (d, H.wavelength - d)
        yield Check(f"maillet d={d}", ok, f"H{H.primes} witness {w.low_head},{w.high_head}")
    for delta in range(2, 11, 2):
        for mode in ("efficient", "brute"):
            if max(polignac_plan(delta, mode).split_order) > max_prime:
                continue
            try:
                H, w = polignac_hydra(delta, mode, budget)
            except BudgetExceeded:
                continue
            ok = count_consecutive_pairs(H, delta) >= 1
            yield Check(f"polignac {mode} gap={delta}", ok, f"H{H.primes}")


def run(max_prime: int = 13, budget: Budget = DEFAULT_BUDGET, echo: Callable[[str], None] = print) -> bool:
    all_ok = True
    for c in run_checks(max_prime, budget):
        all_ok &= c.ok
        echo(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail and not c.ok else ""))
    return all_ok
