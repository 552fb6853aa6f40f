import math

import pytest

from hydras.counting import (
    CountReport, alive_count, counts, pair_lower_bound, predict_split, primorial, twin_count,
)
from hydras.errors import DuplicatePrime, MissingBase, NonpositiveFactor
from hydras.hydra import natural
from hydras.metrics import count_pairs

from helpers import brute_pairs, coprime_residues


def test_small_values():
    assert primorial([]) == 1
    assert primorial([2, 3, 5, 7]) == 210
    assert alive_count([2, 3, 5, 7]) == 48
    assert twin_count([2, 3]) == 1
    assert twin_count([2, 3, 5]) == 3


def test_twin_count_2_to_13_by_brute_force():
    # independent pair count over residues mod 30030
    assert brute_pairs(30030, 2) == 1485
    assert twin_count([2, 3, 5, 7, 11, 13]) == 1485


def test_alive_count_by_gcd():
    for P in ([2], [3, 7], [2, 5, 11]):
        assert alive_count(P) == len(coprime_residues(math.prod(P)))


def test_twin_count_needs_base():
    with pytest.raises(MissingBase):
        twin_count([2, 5, 7])


def test_big_integers_do_not_overflow():
    P = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]
    rep = counts(P)
    assert rep.k == math.prod(P) > 2**64
    assert rep.k1 == math.prod(p - 1 for p in P)
    assert rep.k2_twin == math.prod(p - 2 for p in P if p > 3)


def test_report_fields():
    rep = counts([2, 7])
    assert rep == CountReport((2, 7), 14, 6, None)
    assert rep.as_dict()["k2_twin"] is None
    assert counts([2, 3, 5]).as_dict() == {"k": "30", "k1": "8", "k2_twin": "3", "pair_bound": None}


def test_predict_split_chain():
    rep = counts([])
    for p in (5, 7, 2, 3, 11):
        rep = predict_split(rep, p)
    assert rep == counts([5, 7, 2, 3, 11])


def test_predict_split_rejects_duplicates():
    with pytest.raises(DuplicatePrime):
        predict_split(counts([2, 3]), 3)


def test_pair_lower_bound_examples():
    # distance 12 starting from the single pair in H(2,7)
    for P in ([2, 7, 3], [2, 7, 3, 5]):
        bound = pair_lower_bound(P, [2, 7], 1)
        assert bound <= count_pairs(natural(P), 12).count
    # consecutive gap 6 forced by {2, 5, 7}
    bound = pair_lower_bound([5, 7, 2, 3], [5, 7, 2], 2)
    assert bound == 2 * 1
    assert bound <= count_pairs(natural([5, 7, 2, 3]), 6).count


def test_pair_lower_bound_guards():
    with pytest.raises(ValueError):
        pair_lower_bound([2, 3], [5], 1)
    with pytest.raises(NonpositiveFactor):
        pair_lower_bound([2, 3, 5], [5], 1)
