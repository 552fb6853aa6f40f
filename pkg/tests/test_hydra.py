import builtins
import math

import numpy as np
import pytest

from hydras import primes as oracle
from hydras.errors import BudgetExceeded, DuplicatePrime, EmptySelection, NotMaterialized, NotPrime
from hydras.hydra import (
    Budget, count_only, equals, first_candidates, heads, is_natural, natural, next_prime, recurse,
    root, select_heads, snake_of, split, subscript,
)

from helpers import coprime_residues


def test_root():
    H = root()
    assert H.primes == () and H.wavelength == 1
    assert heads(H, "all") == [1]
    assert str(H.snake(0).index) == ""
    assert next_prime(H) == 2


def test_h2_next_prime_is_three():
    assert next_prime(natural([2])) == 3


@pytest.mark.parametrize("n", range(0, 9))
def test_next_prime_matches_oracle(n):
    P = oracle.primes_first(n)
    assert next_prime(natural(n)) == oracle.next_prime_after(max(P, default=1))


def test_split_heads_and_alive():
    H = natural([2, 3])
    assert heads(H, "all") == [1, 2, 3, 4, 5, 6]
    assert heads(H) == [1, 5]
    assert [str(s.index) for s in H.snakes("all")] == ["1.1", "0.2", "1.0", "0.1", "1.2", "0.0"]


def test_split_never_sorts(monkeypatch):
    H = natural([7, 2])

    def refuse(*a, **kw):
        raise AssertionError("split must not sort")

    monkeypatch.setattr(np, "sort", refuse)
    monkeypatch.setattr(np, "argsort", refuse)
    monkeypatch.setattr(np, "lexsort", refuse)
    monkeypatch.setattr(builtins, "sorted", refuse)
    out = split(H, 5)
    assert np.all(np.diff(out.heads) > 0)


def test_alive_count_is_totient():
    for P in ([2, 3, 5, 7], [5, 7, 2], [11, 2, 3]):
        H = natural(P)
        k = math.prod(P)
        assert int(H.alive.sum()) == len(coprime_residues(k))


def test_recursion_equals_direct():
    H = root()
    for _ in range(4):
        H = recurse(H)
    assert H.primes == (2, 3, 5, 7)
    assert heads(H) == heads(natural(4))


def test_mece_small():
    H = natural([3, 2, 5])
    k = H.wavelength
    for n in range(1, 3 * k + 1):
        s = snake_of(H, n)
        assert n in s and (n - s.head) % k == 0


def test_equals_is_order_free():
    a, b, c = natural([2, 3, 5]), natural([5, 3, 2]), natural([3, 5, 2])
    assert equals(a, b) and equals(b, a) and equals(a, a)
    assert equals(b, c) and equals(a, c)
    assert heads(a) == heads(b)
    assert not equals(a, natural([2, 3]))


def test_is_natural():
    assert is_natural(natural([5, 7, 2, 3]))
    assert not is_natural(natural([2, 7]))
    assert is_natural(root())


def test_first_candidates():
    # f(H(2,3)) lists 5 from s(1.2) before 7 from s(1.1)
    assert first_candidates(natural([2, 3])) == [("1.2", 5), ("1.1", 7)]


def test_subscript_prefixes_keep_wavelength():
    H = natural([2, 3, 5])
    view = H["1.1"]
    assert view.is_view and view.wavelength == 30
    assert heads(view, "all") == [1, 7, 13, 19, 25]
    both = subscript(H, ["1.1", "1.2.1"])
    assert heads(both) == [1, 7, 11, 13, 19]
    assert view.primes == H.primes


def test_subscript_errors():
    H = natural([2, 3])
    with pytest.raises(EmptySelection):
        H["1.1.1"]
    with pytest.raises(EmptySelection):
        H["9"]
    with pytest.raises(EmptySelection):
        H["x"]


def test_select_heads():
    H = natural([2, 3, 5])
    assert heads(select_heads(H, [29, 1])) == [1, 29]
    with pytest.raises(EmptySelection):
        select_heads(H, [31])


def test_twins_selector():
    # 29 and 1 pair up across the wrap
    assert heads(natural([2, 3, 5]), "twins") == [1, 11, 13, 17, 19, 29]


def test_errors():
    with pytest.raises(DuplicatePrime):
        natural([2, 3, 2])
    with pytest.raises(NotPrime):
        natural([2, 9])
    with pytest.raises(NotPrime):
        split(natural([2]), 1)
    with pytest.raises(BudgetExceeded):
        natural([2, 3, 5], Budget(29))
    with pytest.raises(NotMaterialized):
        split(count_only([2, 3]), 5)


def test_budget_is_checked_before_work():
    with pytest.raises(BudgetExceeded):
        natural(12)


def test_count_only_beyond_budget():
    H = count_only(oracle.primes_first(16))
    assert not H.materialized
    assert H.wavelength == math.prod(oracle.primes_first(16))
