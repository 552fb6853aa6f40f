import math

import pytest

from hydras import primes as oracle
from hydras.construct import (
    build, distance_witness, gap_witness, maillet_hydra, maillet_plan, polignac_hydra, polignac_plan,
    scan_witness,
)
from hydras.errors import BudgetExceeded, InvalidDistance
from hydras.hydra import equals, is_natural, natural, next_prime
from hydras.metrics import count_pairs, wheeldiff


def test_polignac_6_plan():
    plan = polignac_plan(6)
    assert sorted(plan.artificial) == [2, 5, 7]
    assert plan.natural_fill == (3,)


def test_polignac_brute_plan():
    plan = polignac_plan(4, "brute")
    assert plan.artificial == (5, 7, 11)
    assert plan.natural_fill == (2, 3)


def test_gap_two_uses_h23():
    for mode in ("efficient", "brute"):
        assert polignac_plan(2, mode).split_order == (2, 3)


def test_maillet_plans():
    assert maillet_plan(2).split_order == (2, 3)
    assert maillet_plan(12).artificial == (2, 7)
    assert maillet_plan(12).natural_fill == (3, 5)
    assert maillet_plan(20).artificial == (2, 11)


def test_plan_covers_an_initial_segment():
    for d in range(2, 42, 2):
        for plan in (maillet_plan(d), polignac_plan(d), polignac_plan(d, "brute")):
            order = plan.split_order
            assert len(set(order)) == len(order)
            assert sorted(order) == oracle.primes_first(len(order))


def test_bad_targets():
    for d in (0, 5, -4):
        with pytest.raises(InvalidDistance):
            maillet_plan(d)
        with pytest.raises(InvalidDistance):
            polignac_plan(d)
    with pytest.raises(ValueError):
        polignac_plan(6, "clever")


def _window_values(H):
    bound = next_prime(H) ** 2
    ah = H.alive_heads().tolist()
    return [v for base in range(0, bound, H.wavelength) for v in (h + base for h in ah) if 1 < v < bound]


@pytest.mark.parametrize("d", range(2, 37, 2))
def test_maillet_within_budget(d):
    H, w = maillet_hydra(d)
    assert is_natural(H)
    assert count_pairs(H, d).count >= 1
    assert w.high_head - w.low_head in (d, H.wavelength - d)
    # smallest window pair is a real prime pair at distance d
    vals = _window_values(H)
    s = set(vals)
    low = next(v for v in vals if v + d in s)
    assert (low, low + d) in oracle.gap_pairs_upto(low + d, d)


@pytest.mark.parametrize("delta, mode", [(d, "efficient") for d in range(2, 11, 2)] + [(2, "brute"), (4, "brute"), (6, "brute")])
def test_polignac_within_budget(delta, mode):
    H, w = polignac_hydra(delta, mode)
    assert is_natural(H)
    assert wheeldiff(H).histogram().get(delta, 0) >= 1
    assert w.consecutive
    vals = _window_values(H)
    pairs = [(a, b) for a, b in zip(vals, vals[1:]) if b - a == delta]
    assert pairs, "no consecutive pair inside the primality window"
    assert pairs[0] in oracle.gap_pairs_upto(pairs[0][1], delta, consecutive=True)


def test_brute_and_efficient_differ_but_both_work():
    a, _ = polignac_hydra(4, "brute")
    b, _ = polignac_hydra(4, "efficient")
    assert not equals(a, b)


def test_build_matches_natural():
    H = build(polignac_plan(6))
    assert H.primes == (5, 7, 2, 3)
    assert equals(H, natural(4))


def test_witness_helpers():
    H = natural([2, 7])
    w = distance_witness(H, 12)
    assert (w.low_head, w.high_head, w.kind) == (1, 13, "head")
    assert not w.consecutive
    g = gap_witness(natural([5, 7, 2, 3]), 6)
    assert g.high_head - g.low_head == 6


@pytest.mark.parametrize("maker, arg", [(maillet_hydra, 38), (maillet_hydra, 40)])
def test_beyond_budget_degrades(maker, arg):
    with pytest.raises(BudgetExceeded):
        maker(arg)
    plan = maillet_plan(arg)
    w = scan_witness(plan)
    k = plan.wavelength
    assert math.gcd(w.low_head, k) == 1 and math.gcd(w.high_head, k) == 1
    assert w.high_head - w.low_head == arg


@pytest.mark.parametrize("delta", [12, 14])
def test_large_gap_scan(delta):
    plan = polignac_plan(delta)
    with pytest.raises(BudgetExceeded):
        polignac_hydra(delta)
    w = scan_witness(plan)
    k = plan.wavelength
    assert w.high_head - w.low_head == delta
    assert all(math.gcd(m, k) != 1 for m in range(w.low_head + 1, w.high_head))
    assert math.gcd(w.low_head, k) == math.gcd(w.high_head, k) == 1
