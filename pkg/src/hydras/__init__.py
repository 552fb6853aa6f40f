"""Hydra recursion: residue-class partitions of the integers split by primes."""

from .construct import (
    ConstructionPlan,
    WitnessPair,
    maillet_hydra,
    maillet_plan,
    polignac_hydra,
    polignac_plan,
    scan_witness,
)
from .counting import CountReport, alive_count, counts, pair_lower_bound, predict_split, primorial, twin_count
from .errors import (
    BudgetExceeded,
    DuplicatePrime,
    EmptySelection,
    HydraError,
    InternalLemmaViolation,
    InvalidDistance,
    MissingBase,
    NonpositiveFactor,
    NotPrime,
)
from .hydra import (
    Budget,
    Hydra,
    RecursiveIndex,
    Snake,
    count_only,
    equals,
    first_candidates,
    heads,
    is_natural,
    natural,
    next_prime,
    recurse,
    root,
    snake_of,
    split,
    subscript,
)
from .metrics import count_consecutive_pairs, count_pairs, density_report, wheeldiff, wheeldist

__version__ = "0.1.0"
