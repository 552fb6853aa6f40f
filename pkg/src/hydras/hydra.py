"""Snakes, hydras and prime-driven splitting.

A hydra ``H(P)`` partitions the positive integers into ``k = prod(P)``
arithmetic progressions (snakes) ``h, h+k, h+2k, ...`` with heads ``1..k``.
Only the heads and one alive bit per snake are stored; the wavelength lives
on the hydra and remainders are recomputed from the heads when needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, DuplicatePrime, EmptySelection, NotMaterialized, NotPrime
from .primes import is_prime, primes_first

SELECTORS = ("alive", "all", "twins")


@dataclass(frozen=True)
class Budget:
    """Upper bound on the number of snakes a materialized hydra may hold."""

    max_snakes: int = 2**24

    def __post_init__(self):
        if self.max_snakes < 1:
            raise ValueError("max_snakes must be >= 1")


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class RecursiveIndex:
    primes: tuple[int, ...]
    remainders: tuple[int, ...]

    @classmethod
    def of(cls, head: int, primes: Sequence[int]) -> RecursiveIndex:
        return cls(tuple(primes), tuple(head % p for p in primes))

    @property
    def alive(self) -> bool:
        return all(self.remainders)

    def __str__(self) -> str:
        return ".".join(map(str, self.remainders))


@dataclass(frozen=True)
class Snake:
    head: int
    wavelength: int
    alive: bool
    index: RecursiveIndex

    def tail(self, count: int) -> list[int]:
        return [self.head + i * self.wavelength for i in range(1, count + 1)]

    @property
    def first_candidate(self) -> int:
        # 1 is not prime, so the first snake's candidate is its second element
        return self.head if self.head > 1 else 1 + self.wavelength

    def __contains__(self, n: int) -> bool:
        return n >= self.head and (n - self.head) % self.wavelength == 0


class Hydra:
    """An ordered prime list, its wavelength, and optionally the snake table.

    ``heads``/``alive`` are None for count-only hydras. A *view* (built by
    :func:`subscript` or JSON with a partial snake list) holds a subset of the
    snakes but keeps the parent's primes and wavelength.
    """

    __slots__ = ("primes", "wavelength", "heads", "alive", "is_view")

    def __init__(
        self,
        primes: Iterable[int],
        heads: np.ndarray | None = None,
        alive: np.ndarray | None = None,
        is_view: bool = False,
    ):
        self.primes = tuple(int(p) for p in primes)
        self.wavelength = math.prod(self.primes)
        self.heads = heads
        self.alive = alive
        self.is_view = is_view

    @property
    def materialized(self) -> bool:
        return self.heads is not None

    @property
    def k(self) -> int:
        return self.wavelength

    def __len__(self) -> int:
        return 0 if self.heads is None else len(self.heads)

    def __getitem__(self, prefixes) -> Hydra:
        if isinstance(prefixes, str):
            prefixes = [prefixes]
        return subscript(self, list(prefixes))

    def __repr__(self) -> str:
        ps = ",".join(map(str, self.primes))
        kind = "view" if self.is_view else ("table" if self.materialized else "count-only")
        return f"H({ps}) [{kind}, k={self.wavelength}]"

    def require_table(self) -> None:
        if self.heads is None:
            raise NotMaterialized(f"{self!r} has no snake table")

    def alive_heads(self) -> np.ndarray:
        self.require_table()
        return self.heads[self.alive]

    def snake(self, position: int) -> Snake:
        """Snake at ``position`` in the (head ordered) table."""
        h = int(self.heads[position])
        return Snake(h, self.wavelength, bool(self.alive[position]), RecursiveIndex.of(h, self.primes))

    def snakes(self, selector: str = "alive") -> Iterator[Snake]:
        for pos in selected_positions(self, selector):
            yield self.snake(int(pos))


def _check_new_prime(primes: Sequence[int], p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p in primes:
        raise DuplicatePrime(f"{p} already splits H({','.join(map(str, primes))})")


def root() -> Hydra:
    """The hydra with no primes: one alive snake s(1,1)."""
    return Hydra((), np.array([1], dtype=np.int64), np.array([True]))


def count_only(primes: Iterable[int]) -> Hydra:
    """Hydra carrying primes and wavelength but no snake table."""
    seen: list[int] = []
    for p in primes:
        _check_new_prime(seen, int(p))
        seen.append(int(p))
    return Hydra(seen)


def split(H: Hydra, p: int, budget: Budget = DEFAULT_BUDGET) -> Hydra:
    """Split every snake of H into p snakes with heads h, h+k, ..., h+(p-1)k.

    The outer loop runs over the p offsets and the inner over the old snakes,
    which leaves the new heads ascending without sorting.
    """
    p = int(p)
    _check_new_prime(H.primes, p)
    H.require_table()
    k = H.wavelength
    if k * p > budget.max_snakes:
        raise BudgetExceeded(f"splitting by {p} needs {k * p} snakes, budget is {budget.max_snakes}")
    heads = np.concatenate([H.heads + j * k for j in range(p)])
    alive = np.tile(H.alive, p) & (heads % p != 0)
    return Hydra(H.primes + (p,), heads, alive, is_view=H.is_view)


def next_prime(H: Hydra) -> int:
    """Smallest first candidate over the alive snakes."""
    ah = H.alive_heads()
    if len(ah) == 0:
        raise EmptySelection("hydra has no alive snake")
    cand = ah[ah > 1]
    best = int(cand[0]) if len(cand) else None
    if ah[0] == 1:
        one = 1 + H.wavelength
        best = one if best is None else min(best, one)
    return best


def recurse(H: Hydra, budget: Budget = DEFAULT_BUDGET) -> Hydra:
    return split(H, next_prime(H), budget)


def natural(P: int | Iterable[int], budget: Budget = DEFAULT_BUDGET) -> Hydra:
    """Hydra split by the given primes in order (or by the first P primes)."""
    primes = primes_first(P) if isinstance(P, (int, np.integer)) else [int(p) for p in P]
    for i, p in enumerate(primes):
        _check_new_prime(primes[:i], p)
    if math.prod(primes) > budget.max_snakes:
        raise BudgetExceeded(f"H({','.join(map(str, primes))}) needs {math.prod(primes)} snakes, "
                             f"budget is {budget.max_snakes}")
    H = root()
    for p in primes:
        H = split(H, p, budget)
    return H


def is_natural(H: Hydra) -> bool:
    return set(H.primes) == set(primes_first(len(H.primes)))


def equals(H1: Hydra, H2: Hydra) -> bool:
    return set(H1.primes) == set(H2.primes)


def _partner_mask(ah: np.ndarray, k: int, d: int) -> np.ndarray:
    """Mask over the sorted array ``ah`` marking heads that belong to a pair at distance d."""
    mask = np.zeros(len(ah), dtype=bool)
    for gap in {d, k - d}:
        if gap <= 0:
            continue
        hi = ah + gap
        pos = np.searchsorted(ah, hi)
        hit = (pos < len(ah)) & (ah[np.minimum(pos, len(ah) - 1)] == hi)
        mask |= hit
        mask[pos[hit]] = True
    return mask


def selected_positions(H: Hydra, selector: str = "alive") -> np.ndarray:
    H.require_table()
    if selector == "all":
        return np.arange(len(H.heads))
    alive_pos = np.flatnonzero(H.alive)
    if selector == "alive":
        return alive_pos
    if selector == "twins":
        return alive_pos[_partner_mask(H.heads[alive_pos], H.wavelength, 2)]
    raise ValueError(f"unknown selector {selector!r}; expected one of {SELECTORS}")


def heads(H: Hydra, selector: str = "alive") -> list[int]:
    return H.heads[selected_positions(H, selector)].tolist()


def first_candidates(H: Hydra) -> list[tuple[str, int]]:
    """(index, first candidate) for every alive snake, ascending by candidate."""
    out = [(str(s.index), s.first_candidate) for s in H.snakes("alive")]
    out.sort(key=lambda item: item[1])
    return out


def parse_index(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split("."))
    except ValueError:
        raise EmptySelection(f"malformed recursive index {text!r}") from None


def subscript(H: Hydra, prefixes: Sequence[str]) -> Hydra:
    """View of the snakes whose recursive index starts with any of ``prefixes``."""
    H.require_table()
    keep = np.zeros(len(H.heads), dtype=bool)
    for text in prefixes:
        rem = parse_index(text)
        if len(rem) > len(H.primes):
            raise EmptySelection(f"index {text!r} is longer than the prime list of H{H.primes}")
        match = np.ones(len(H.heads), dtype=bool)
        for p, r in zip(H.primes, rem):
            match &= H.heads % p == r
        keep |= match
    if not keep.any():
        raise EmptySelection(f"no snake matches {list(prefixes)}")
    return Hydra(H.primes, H.heads[keep], H.alive[keep], is_view=True)


def select_heads(H: Hydra, wanted: Iterable[int]) -> Hydra:
    """View restricted to the given heads (unknown heads raise EmptySelection)."""
    H.require_table()
    wanted = np.unique(np.asarray(list(wanted), dtype=np.int64))
    pos = np.searchsorted(H.heads, wanted)
    ok = (pos < len(H.heads)) & (H.heads[np.minimum(pos, len(H.heads) - 1)] == wanted)
    if not ok.all() or len(wanted) == 0:
        raise EmptySelection(f"heads {wanted[~ok].tolist()} not in {H!r}")
    return Hydra(H.primes, H.heads[pos], H.alive[pos], is_view=True)


def snake_of(H: Hydra, n: int) -> Snake:
    """The unique snake containing n."""
    H.require_table()
    if n < 1:
        raise ValueError("n must be positive")
    h = (n - 1) % H.wavelength + 1
    pos = int(np.searchsorted(H.heads, h))
    if pos >= len(H.heads) or H.heads[pos] != h:
        raise EmptySelection(f"{n} lies in s({h},{H.wavelength}), which this view does not hold")
    return H.snake(pos)
