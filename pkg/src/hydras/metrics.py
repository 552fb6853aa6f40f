"""Distances between alive snakes, gap tables, pair counts and densities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import InvalidDistance
from .hydra import Hydra, RecursiveIndex


def _label(h: int, primes) -> str:
    return str(RecursiveIndex.of(int(h), primes))


@dataclass(frozen=True)
class GapVector:
    """Gaps between consecutive alive heads, the last one wrapping to the first."""

    heads: np.ndarray
    values: np.ndarray
    primes: tuple[int, ...]

    @property
    def labels(self) -> list[str]:
        names = [_label(h, self.primes) for h in self.heads]
        return [f"{names[(i + 1) % len(names)]}-{names[i]}" for i in range(len(names))]

    def entries(self) -> list[tuple[str, int]]:
        return list(zip(self.labels, self.values.tolist()))

    def histogram(self) -> dict[int, int]:
        vals, cnt = np.unique(self.values, return_counts=True)
        return dict(zip(vals.tolist(), cnt.tolist()))

    def __len__(self) -> int:
        return len(self.values)


def wheeldiff(H: Hydra) -> GapVector:
    ah = H.alive_heads()
    if len(ah) == 0:
        raise InvalidDistance("wheeldiff needs at least one alive snake")
    gaps = np.append(np.diff(ah), ah[0] + H.wavelength - ah[-1])
    return GapVector(ah, gaps, H.primes)


@dataclass(frozen=True)
class DistanceTable:
    """Head distances below the diagonal, wrapped distances above it."""

    labels: list[str]
    matrix: np.ndarray


def wheeldist(H: Hydra) -> DistanceTable:
    ah = H.alive_heads()
    diff = ah[:, None] - ah[None, :]  # [j][i] = h_j - h_i
    m = np.where(diff > 0, diff, np.where(diff < 0, diff + H.wavelength, 0))
    return DistanceTable([_label(h, H.primes) for h in ah], m)


def _check_even(d: int, k: int | None = None) -> None:
    if d < 2 or d % 2:
        raise InvalidDistance(f"distance must be even and >= 2, got {d}")
    if k is not None and k > 2 and d >= k:
        raise InvalidDistance(f"distance {d} out of range for wavelength {k}")


class Pair(NamedTuple):
    low: int
    high: int
    kind: str  # "head", "wrapped" or "both"


class PairCount(NamedTuple):
    count: int
    pairs: list[Pair]


def _matches(ah: np.ndarray, gap: int) -> np.ndarray:
    """Positions i with ah[i] + gap also in ah."""
    if gap <= 0:
        return np.zeros(len(ah), dtype=bool)
    hi = ah + gap
    pos = np.searchsorted(ah, hi)
    return (pos < len(ah)) & (ah[np.minimum(pos, len(ah) - 1)] == hi)


def count_pairs(H: Hydra, d: int) -> PairCount:
    """Unordered alive pairs whose head or wrapped distance equals d."""
    k = H.wavelength
    _check_even(d, k)
    ah = H.alive_heads()
    head_hit = _matches(ah, d)
    wrap_hit = _matches(ah, k - d)  # wrapped distance d <=> head distance k-d
    pairs: list[Pair] = []
    if k - d == d:
        for h in ah[head_hit].tolist():
            pairs.append(Pair(h, h + d, "both"))
    else:
        for h in ah[head_hit].tolist():
            pairs.append(Pair(h, h + d, "head"))
        for h in ah[wrap_hit].tolist():
            pairs.append(Pair(h, h + k - d, "wrapped"))
        pairs.sort()
    return PairCount(len(pairs), pairs)


def count_consecutive_pairs(H: Hydra, delta: int) -> int:
    _check_even(delta)
    return int(np.count_nonzero(wheeldiff(H).values == delta))


@dataclass(frozen=True)
class DensityReport:
    primes: tuple[int, ...]
    n: int
    candidates_per_odd: Fraction  # prod (p-1)/p over P without 2
    twins_per_candidate: Fraction  # prod (p-2)/(p-1)
    twins_per_odd: Fraction  # prod (p-2)/p
    two_over_log_n: float
    four_over_log2_n: float
    log_primorial: float
    growth_rate: float

    def rows(self) -> list[tuple[str, str]]:
        def frac(f: Fraction) -> str:
            return f"{f.numerator}/{f.denominator} ~ {float(f):.12g}"

        return [
            ("P", ",".join(map(str, self.primes))),
            ("n", str(self.n)),
            ("prod (p-1)/p", frac(self.candidates_per_odd)),
            ("2/log(n)", f"{self.two_over_log_n:.12g}"),
            ("prod (p-2)/(p-1)", frac(self.twins_per_candidate)),
            ("prod (p-2)/p", frac(self.twins_per_odd)),
            ("4/log(n)^2", f"{self.four_over_log2_n:.12g}"),
            ("log(k)", f"{self.log_primorial:.12g}"),
            ("k^(1/max P)", f"{self.growth_rate:.12g}"),
        ]


def density_report(H: Hydra, n: int) -> DensityReport:
    if 2 not in H.primes:
        raise ValueError("density report needs 2 in P")
    if n < 3:
        raise ValueError("reference n must be >= 3")
    odd = [p for p in H.primes if p != 2]
    first = math.prod((Fraction(p - 1, p) for p in odd), start=Fraction(1))
    second = math.prod((Fraction(p - 2, p - 1) for p in odd), start=Fraction(1))
    third = math.prod((Fraction(p - 2, p) for p in odd), start=Fraction(1))
    ln_n = math.log(n)
    ln_k = math.log(H.wavelength)
    return DensityReport(
        H.primes, n, first, second, third,
        2 / ln_n, 4 / ln_n**2,
        ln_k, math.exp(ln_k / max(H.primes)),
    )
